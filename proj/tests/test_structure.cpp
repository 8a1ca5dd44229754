#include <doctest.h>

#include "dk/errors.hpp"
#include "dk/solver.hpp"
#include "dk/structure.hpp"

using namespace dk;
using namespace dk::structure;

namespace {

  RingElement el(char const* text) {
    return parse_element(text);
  }

}  // namespace

TEST_CASE("chain nilpotency examples") {
  auto const v = chain_nilpotency(el("a + xa^2"));
  REQUIRE(v.nilpotent());
  CHECK(v.chain == std::vector<RingElement>{el("1 + xa"), el("ax + 1")});
  CHECK(v.verify(el("a + xa^2")));

  auto const cyc = chain_nilpotency(a());
  CHECK(cyc.status == NilStatus::not_nilpotent);
  CHECK(cyc.reason == NilReason::cycle_detected);

  auto const out = chain_nilpotency(x());
  CHECK(out.status == NilStatus::not_nilpotent);
  CHECK(out.reason == NilReason::not_in_Ra);

  auto const sq = chain_nilpotency(el("a^2 + xa^3"));
  REQUIRE(sq.nilpotent());
  CHECK(sq.chain.size() == 2);

  auto const zero = chain_nilpotency(RingElement::zero());
  CHECK(zero.nilpotent());
  CHECK(zero.chain.empty());

  CHECK(chain_nilpotency(RingElement::one()).status == NilStatus::not_nilpotent);
}

TEST_CASE("chain length bounds the nilpotency index") {
  for (unsigned n = 1; n <= 5; ++n) {
    auto const v = chain_nilpotency(kn(n));
    REQUIRE(v.nilpotent());
    REQUIRE(v.verify(kn(n)));
    REQUIRE(power_nilpotency(kn(n)) == n + 1);
    REQUIRE(v.chain.size() + 1 >= n + 1);
  }
}

TEST_CASE("power nilpotency") {
  CHECK(power_nilpotency(el("a + xa^2")) == 3u);
  CHECK(power_nilpotency(kn(2)) == 3u);
  CHECK_FALSE(power_nilpotency(RingElement::one(), 20).has_value());
  CHECK(power_nilpotency(RingElement::zero()) == 1u);
  CHECK_FALSE(power_nilpotency(a(), 8).has_value());
}

TEST_CASE("chain and power oracles agree on small elements") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    auto const f = random_element(4, 3, s);
    auto const v = chain_nilpotency(f);
    REQUIRE(v.status != NilStatus::undecided);
    if (v.nilpotent()) {
      REQUIRE(v.verify(f));
      REQUIRE(power_nilpotency(f, 16).has_value());
    } else {
      REQUIRE_FALSE(power_nilpotency(f, 16).has_value());
    }
    if (certified_nonvanishing(f, 16)) {
      REQUIRE_FALSE(v.nilpotent());
    }
  }
}

TEST_CASE("certified_nonvanishing never certifies a nilpotent") {
  for (auto const& n : curated_nilpotents()) {
    REQUIRE_FALSE(certified_nonvanishing(n, 16));
  }
  CHECK(certified_nonvanishing(RingElement::one(), 5));
  CHECK(certified_nonvanishing(a(), 5));
  CHECK(certified_nonvanishing(x(), 5));
}

TEST_CASE("units and inverses") {
  CHECK(is_unit(RingElement::one()));
  CHECK(inverse(RingElement::one()) == RingElement::one());
  auto const u   = el("1 + a + xa^2");
  auto const inv = inverse(u);
  REQUIRE(inv.has_value());
  CHECK(u * *inv == RingElement::one());
  CHECK(*inv * u == RingElement::one());
  CHECK(to_string(*inv) == "1 + a + axa^2 + xa^2 + a^2");
  CHECK_FALSE(is_unit(pow(a(), 2)));
  CHECK_FALSE(inverse(pow(a(), 2)).has_value());
  CHECK_FALSE(is_unit(RingElement::zero()));
  CHECK_FALSE(is_unit(el("1 + x")));
}

TEST_CASE("zero divisor classes") {
  auto const za = zero_divisor_class(a(), 6);
  CHECK(za.left_zd);
  CHECK_FALSE(za.right_zd.has_value());
  auto const zs = zero_divisor_class(el("1 + ax"), 6);
  CHECK_FALSE(zs.left_zd);
  CHECK(zs.right_zd == 1u);
  auto const z1 = zero_divisor_class(RingElement::one(), 6);
  CHECK_FALSE(z1.left_zd);
  CHECK_FALSE(z1.right_zd.has_value());
  CHECK_THROWS_AS(zero_divisor_class(RingElement::zero(), 6), ZeroElementError);
}

TEST_CASE("rx_witness") {
  CHECK(rx_witness(a(), 8) == 1u);
  CHECK(rx_witness(pow(a(), 2), 8) == 2u);
  CHECK(rx_witness(x(), 8) == 0u);
  CHECK(rx_witness(RingElement::one(), 8) == 1u);
  CHECK_FALSE(rx_witness(pow(a(), 5), 3).has_value());
  CHECK_THROWS_AS(rx_witness(RingElement::zero(), 8), ZeroElementError);
}

TEST_CASE("jacobson image is a ring homomorphism") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto const f = random_element(4, 3, 2 * s);
    auto const g = random_element(4, 3, 2 * s + 1);
    REQUIRE(jacobson_image(f * g) == jacobson_image(f) * jacobson_image(g));
    REQUIRE(jacobson_image(f + g) == jacobson_image(f) + jacobson_image(g));
  }
  CHECK(jacobson_image(a()) == jacobson::b_power(1));
}

TEST_CASE("random_nilpotent") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    NilpotentParams p;
    p.chain_length = 1 + s % 2;
    auto const f   = random_nilpotent(p, s);
    auto const v   = chain_nilpotency(f);
    REQUIRE(v.nilpotent());
    REQUIRE(v.verify(f));
    REQUIRE(v.chain.size() <= p.chain_length);
    REQUIRE(power_nilpotency(f, 16).has_value());
  }
}

TEST_CASE("curated nilpotents") {
  auto const c = curated_nilpotents();
  CHECK(c.size() == 11);
  for (auto const& f : c) {
    REQUIRE(chain_nilpotency(f).nilpotent());
    REQUIRE(power_nilpotency(f, 16).has_value());
  }
}

TEST_CASE("nil subring closure") {
  auto const r = nilsubring_closure_check(40, 3);
  CHECK(r.passed());
}
