#include <doctest.h>

#include <set>

#include "dk/element.hpp"
#include "dk/errors.hpp"
#include "dk/monomial.hpp"
#include "oracle.hpp"

using namespace dk;

namespace {

  ReducedMonomial mono(std::vector<ReducedMonomial::exponent_type> e) {
    return ReducedMonomial(std::move(e));
  }

  RingElement el(char const* text) {
    return parse_element(text);
  }

  oracle::Poly as_poly(RingElement const& f) {
    oracle::Poly p;
    for (auto const& m : f.support()) {
      p.insert(from_exponents(m));
    }
    return p;
  }

}  // namespace

TEST_CASE("exponent vectors of small words") {
  auto const ax = to_exponents("ax");
  CHECK(ax.depth() == 2);
  CHECK(std::vector<std::uint32_t>(ax.exponents().begin(), ax.exponents().end())
        == std::vector<std::uint32_t>{0, 1, 0});
  CHECK(to_exponents("aaaa") == ReducedMonomial::a_power(4));
  CHECK(to_exponents("aaaa").depth() == 1);
  auto const m = to_exponents("xxxaxx");
  CHECK(m == mono({0, 2, 3}));
  CHECK(m.length() == 6);
  CHECK(to_exponents("xaaa").length() == 4);
  CHECK(to_exponents("") == ReducedMonomial::one());
  CHECK_THROWS_AS(to_exponents("aax"), NotReducedError);
  CHECK_THROWS_AS(to_exponents("ab"), AlphabetError);
  CHECK_THROWS_AS(mono({0, 0, 1}), NotReducedError);
  CHECK_THROWS_AS(mono({1}), NotReducedError);
}

TEST_CASE("word round trip and length on every reduced word up to length 10") {
  for (auto const& w : oracle::reduced_words(10)) {
    auto const m = to_exponents(w);
    REQUIRE(from_exponents(m) == w);
    REQUIRE(m.length() == w.size());
    auto const e = oracle::exponents(w);
    REQUIRE(std::vector<unsigned>(m.exponents().begin(), m.exponents().end()) == e);
  }
}

TEST_CASE("right subwords") {
  auto const m = mono({3, 1, 2});
  CHECK(to_string(m) == "x^2axa^3");
  CHECK(m.subword(1) == to_exponents("xaaa"));
  CHECK(m.subword(2) == m);
  CHECK(to_exponents("ax").subword(1) == to_exponents("x"));
  CHECK_THROWS_AS(static_cast<void>(m.subword(0)), DepthError);
  CHECK_THROWS_AS(static_cast<void>(m.subword(3)), DepthError);
}

TEST_CASE("cmp on the listed examples") {
  CHECK(cmp(to_exponents("aa"), to_exponents("a")) == Order::less);
  CHECK(cmp(to_exponents("x"), to_exponents("xx")) == Order::less);
  CHECK(cmp(to_exponents("aa"), to_exponents("xaa")) == Order::less);
  CHECK(cmp(to_exponents("a"), to_exponents("x")) == Order::less);
  CHECK(cmp(to_exponents("xaaa"), to_exponents("xxaaa")) == Order::less);
  CHECK(cmp(to_exponents("ax"), to_exponents("ax")) == Order::equal);
  CHECK(cmp(to_exponents("a"), to_exponents("aa")) == Order::greater);
}

TEST_CASE("cmp agrees with the definition-level oracle on all pairs up to length 7") {
  auto const ws = oracle::reduced_words(7);
  for (auto const& u : ws) {
    auto const mu = to_exponents(u);
    for (auto const& v : ws) {
      auto const expected = oracle::compare(u, v);
      auto const got      = cmp(mu, to_exponents(v));
      REQUIRE((got == Order::less ? -1 : got == Order::equal ? 0 : 1) == expected);
    }
  }
}

TEST_CASE("monomial product matches string reduction") {
  auto const ws = oracle::reduced_words(7);
  for (auto const& u : ws) {
    auto const mu = to_exponents(u);
    for (auto const& v : ws) {
      REQUIRE(from_exponents(mu * to_exponents(v)) == oracle::reduce_ax(u + v));
    }
  }
}

TEST_CASE("monomials_up_to") {
  CHECK(monomials_up_to(0).size() == 1);
  CHECK(monomials_up_to(2).size() == 7);
  CHECK(monomials_up_to(3).size() == 14);
  for (std::size_t L = 0; L <= 10; ++L) {
    auto const& ms = monomials_up_to(L);
    REQUIRE(ms.size() == oracle::reduced_words(L).size());
    for (std::size_t i = 1; i < ms.size(); ++i) {
      REQUIRE(precedes(ms[i - 1], ms[i]));
    }
  }
  std::set<std::string> two;
  for (auto const& m : monomials_up_to(2)) {
    two.insert(to_string(m));
  }
  CHECK(two == std::set<std::string>{"1", "a", "x", "a^2", "ax", "xa", "x^2"});
}

TEST_CASE("grade is constant on both sides of the relation") {
  CHECK(grade(to_exponents("a")) == 1);
  CHECK(grade(to_exponents("xx")) == -2);
  for (auto const& w : oracle::words('a', 'x', 8)) {
    auto const na = std::count(w.begin(), w.end(), 'a');
    auto const nx = static_cast<std::int64_t>(w.size()) - na;
    REQUIRE(grade(to_exponents(oracle::reduce_ax(w))) == na - nx);
  }
}

TEST_CASE("element parsing, printing and arithmetic") {
  CHECK(to_string(el("a^2x")) == "a");
  CHECK(to_string(el("1 + a + a")) == "1");
  CHECK(to_string(el("0")) == "0");
  CHECK(el("a+xa^2") * el("a+xa^2") == el("a^2 + axa^2"));
  CHECK(pow(el("a+xa^2"), 3).is_zero());
  CHECK(pow(el("x"), 0) == RingElement::one());
  CHECK(to_string(el("a + 1 + x")) == "x + 1 + a");
  CHECK_THROWS_AS(el("a^2y"), ParseError);
  for (char const* text : {"a^2x + x a^3", "1 + ax + xa", "x^3ax^2 + a", "0"}) {
    auto const f = el(text);
    REQUIRE(parse_element(to_string(f)) == f);
  }
}

TEST_CASE("element multiplication matches the oracle") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto const f = random_element(4, 4, 2 * s);
    auto const g = random_element(4, 4, 2 * s + 1);
    REQUIRE(as_poly(f * g) == oracle::mul(as_poly(f), as_poly(g), oracle::reduce_ax));
    REQUIRE(as_poly(f + g) == oracle::add(as_poly(f), as_poly(g)));
  }
}

TEST_CASE("max_monomial") {
  CHECK(max_monomial(el("axa^2 + x^2a^2 + ax")) == to_exponents("ax"));
  CHECK(max_monomial(el("xa")) == to_exponents("xa"));
  CHECK(max_monomial(el("a + a^2")) == to_exponents("a"));
  CHECK_THROWS_AS(max_monomial(RingElement::zero()), ZeroElementError);
}

TEST_CASE("membership predicates") {
  CHECK(in_Ra(el("a + xa^2")));
  CHECK(has_Rx_monomial(el("x")));
  CHECK_FALSE(in_Ra(el("x")));
  CHECK(has_one(el("1 + a")));
  CHECK_FALSE(has_Rx_monomial(el("1 + a")));
  CHECK(in_F2a(el("1 + a^3")));
  CHECK_FALSE(in_F2a(el("xa")));
  CHECK(in_Ra(RingElement::zero()));
}

TEST_CASE("strip_a") {
  CHECK(strip_a(el("a + xa^2")) == el("1 + xa"));
  CHECK(strip_a(a()) == RingElement::one());
  CHECK_THROWS_AS(strip_a(x()), NotInRaError);
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto const f = random_element(5, 4, s) * a();
    REQUIRE(strip_a(f) * a() == f);
  }
}

TEST_CASE("k_n") {
  CHECK(kn(1) == el("a + axa"));
  CHECK((kn(1) * kn(1)).is_zero());
  CHECK(pow(kn(2), 3).is_zero());
  CHECK_FALSE(pow(kn(2), 2).is_zero());
  for (unsigned n = 1; n <= 6; ++n) {
    auto const k = kn(n);
    REQUIRE(pow(k, n + 1).is_zero());
    REQUIRE_FALSE(pow(k, n).is_zero());
    for (unsigned m = 1; m <= n; ++m) {
      REQUIRE(pow(k, m) == pow(a(), m - 1) * k);
    }
    REQUIRE(k == kn(n + 1) * (RingElement::one() + pow(x(), n) * pow(a(), n)));
  }
}

TEST_CASE("random_element") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto const f = random_element(0, 3, s);
    CHECK((f.is_zero() || f == RingElement::one()));
    CHECK(random_element(5, 0, s).is_zero());
    auto const g = random_element(2, 7, s);
    CHECK(g.max_length() <= 2);
    CHECK(random_element(6, 5, s) == random_element(6, 5, s));
  }
}
