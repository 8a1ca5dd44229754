#include <doctest.h>

#include "dk/errors.hpp"
#include "dk/monomial.hpp"
#include "dk/solver.hpp"

using namespace dk;
using namespace dk::solver;

namespace {

  RingElement el(char const* text) {
    return parse_element(text);
  }

  bool spans_element(std::vector<RingElement> const& basis, RingElement const& e) {
    auto with = basis;
    with.push_back(e);
    return same_span(basis, with);
  }

  std::size_t full_dim(std::size_t L) {
    return monomials_up_to(L).size();
  }

}  // namespace

TEST_CASE("right annihilators") {
  auto const ra = right_annihilator(a(), 2);
  CHECK(spans_element(ra, el("1 + ax")));
  for (auto const& h : ra) {
    REQUIRE((a() * h).is_zero());
  }
  CHECK(right_annihilator(x(), 10).empty());
  CHECK(right_annihilator(el("1 + xa"), 8).empty());
  CHECK(right_annihilator(RingElement::zero(), 3).size() == full_dim(3));
  CHECK(right_annihilator(RingElement::one(), 6).empty());
}

TEST_CASE("left annihilators") {
  auto const la = left_annihilator(el("1 + ax"), 3);
  CHECK(spans_element(la, a()));
  for (auto const& h : la) {
    REQUIRE((h * el("1 + ax")).is_zero());
  }
  CHECK(left_annihilator(x(), 10).empty());
  CHECK(left_annihilator(RingElement::one(), 10).empty());
  CHECK(left_annihilator(a(), 8).empty());
}

TEST_CASE("kernels are exact") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto const f = random_element(3, 3, s);
    for (auto const& h : right_annihilator(f, 6)) {
      REQUIRE((f * h).is_zero());
      REQUIRE_FALSE(h.is_zero());
      REQUIRE(h.max_length() <= 6);
    }
    for (auto const& h : left_annihilator(f, 6)) {
      REQUIRE((h * f).is_zero());
    }
  }
}

TEST_CASE("annihilator_exponent") {
  CHECK(annihilator_exponent(el("a^2 + xa^3")) == 2);
  CHECK(annihilator_exponent(a()) == 1);
  CHECK(annihilator_exponent(el("a + xa^2")) == 1);
  CHECK_THROWS_AS(annihilator_exponent(el("a + x")), NotInRaError);
  CHECK_THROWS_AS(annihilator_exponent(RingElement::zero()), ZeroElementError);
}

TEST_CASE("right annihilator of f in Ra matches that of a^k") {
  auto const f = el("a^2 + xa^3");
  CHECK(same_span(right_annihilator(f, 7), right_annihilator(pow(a(), 2), 7)));
}

TEST_CASE("solve_right_inverse") {
  CHECK(solve_right_inverse(RingElement::one(), 4) == RingElement::one());
  auto const u   = el("1 + a + xa^2");
  auto const inv = solve_right_inverse(u, 12);
  REQUIRE(inv.has_value());
  CHECK(u * *inv == RingElement::one());
  CHECK_FALSE(solve_right_inverse(a(), 12).has_value());
  CHECK_FALSE(solve_right_inverse(x(), 12).has_value());
  CHECK_FALSE(solve_right_inverse(RingElement::zero(), 5).has_value());
}

TEST_CASE("solve_sr_equation") {
  CHECK(solve_sr_equation(RingElement::zero(), 4) == RingElement::zero());
  auto const u = el("1 + a + xa^2");
  auto const g = solve_sr_equation(u, 12);
  REQUIRE(g.has_value());
  CHECK(*g * u * u == u);
  CHECK_FALSE(solve_sr_equation(a(), 12).has_value());
  CHECK_FALSE(solve_sr_equation(x(), 10).has_value());
}

TEST_CASE("cyclic_intersection") {
  CHECK(cyclic_intersection(el("1 + ax"), a(), 6).empty());
  auto const same = cyclic_intersection(a(), a(), 3);
  CHECK(same_span(same, truncated_left_multiples(a(), 3)));
  for (auto const& e : cyclic_intersection(x(), el("xa"), 4)) {
    REQUIRE_FALSE(e.is_zero());
  }
}

TEST_CASE("span helpers on ring elements") {
  CHECK(same_span({a(), x()}, {a() + x(), x()}));
  CHECK_FALSE(same_span({a()}, {x()}));
  auto const both = span_intersection({a(), x()}, {a() + x(), RingElement::one()});
  REQUIRE(both.size() == 1);
  CHECK(both[0] == a() + x());
  CHECK(truncated_left_multiples(a(), 1).size() == 3);
}

TEST_CASE("mccoy_check") {
  SUBCASE("f = x holds vacuously on the right") {
    auto const r = mccoy_check(x(), el("a + ax"), 8);
    CHECK(r.right.k1_dim == 0);
    CHECK(r.right.verdict == McCoyVerdict::holds);
    CHECK(r.left.verdict != McCoyVerdict::violated);
  }
  SUBCASE("both in Ra fails the right premise") {
    auto const r = mccoy_check(a(), el("xa^2"), 6);
    CHECK(r.right.verdict == McCoyVerdict::premise_false);
    CHECK(r.right.premise_dim > 0);
  }
  SUBCASE("zero arguments fail both premises") {
    auto const r = mccoy_check(RingElement::zero(), RingElement::zero(), 3);
    CHECK(r.right.verdict == McCoyVerdict::premise_false);
    CHECK(r.left.verdict == McCoyVerdict::premise_false);
  }
  SUBCASE("two right zero divisors fail the left premise") {
    auto const r = mccoy_check(el("1 + ax"), el("x + ax^2"), 6);
    CHECK(r.left.verdict == McCoyVerdict::premise_false);
    CHECK(r.right.verdict == McCoyVerdict::holds);
  }
}

TEST_CASE("stacked_dependencies") {
  auto const dep = stacked_dependencies(RingElement::one(), a(), 3, 4);
  REQUIRE_FALSE(dep.empty());
  for (auto const& tuple : dep) {
    REQUIRE(tuple.size() == 3);
    RingElement sum = RingElement::zero();
    bool        any = false;
    for (auto const& v : tuple) {
      sum += v;
      any = any || !v.is_zero();
    }
    REQUIRE(sum.is_zero());
    REQUIRE(any);
  }
  CHECK(stacked_dependencies(el("1 + ax"), a(), 4, 6).empty());
}
