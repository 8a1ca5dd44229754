#include <doctest.h>

#include "dk/errors.hpp"
#include "dk/jacobson.hpp"
#include "oracle.hpp"

using namespace dk::jacobson;

namespace {

  std::string word(JMonomial m) {
    return std::string(m.i, 'c') + std::string(m.j, 'b');
  }

  // c^i b^j read back from a reduced {b,c}-word.
  JMonomial monomial(std::string const& w) {
    auto const i = w.find_first_not_of('c');
    auto const c = i == std::string::npos ? w.size() : i;
    return {static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(w.size() - c)};
  }

}  // namespace

TEST_CASE("jmul examples") {
  CHECK(jmul({0, 1}, {1, 0}) == JMonomial{0, 0});
  CHECK(jmul({1, 0}, {0, 1}) == JMonomial{1, 1});
  CHECK(jmul({2, 1}, {3, 0}) == JMonomial{4, 0});
  CHECK(jmul({0, 0}, {2, 5}) == JMonomial{2, 5});
}

TEST_CASE("jmul agrees with string rewriting") {
  for (std::uint32_t i = 0; i <= 4; ++i) {
    for (std::uint32_t j = 0; j <= 4; ++j) {
      for (std::uint32_t k = 0; k <= 4; ++k) {
        for (std::uint32_t l = 0; l <= 4; ++l) {
          JMonomial const m1{i, j};
          JMonomial const m2{k, l};
          auto const      expected = oracle::reduce_bc(word(m1) + word(m2));
          REQUIRE(word(jmul(m1, m2)) == expected);
          REQUIRE(monomial(expected) == jmul(m1, m2));
        }
      }
    }
  }
}

TEST_CASE("d_n witnesses") {
  auto const d1 = d_element(1);
  CHECK(d1 == JElement({JMonomial{0, 1}, JMonomial{1, 2}}));
  CHECK((d1 * d1).is_zero());
  auto const d2 = d_element(2);
  CHECK_FALSE(pow(d2, 2).is_zero());
  CHECK(pow(d2, 3).is_zero());
  CHECK(nilpotency_index(d_element(3), 10) == 4u);
  CHECK_FALSE(nilpotency_index(b_power(1), 10).has_value());
}

TEST_CASE("matrix units") {
  auto const e00 = matrix_unit(0, 0);
  auto const e01 = matrix_unit(0, 1);
  auto const e10 = matrix_unit(1, 0);
  CHECK(e00 == JElement::one() + JElement(JMonomial{1, 1}));
  CHECK(e00 * e00 == e00);
  CHECK(e01 * e10 == e00);
  CHECK((e01 * e01).is_zero());
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      for (unsigned k = 0; k < 4; ++k) {
        for (unsigned l = 0; l < 4; ++l) {
          auto const expected = j == k ? matrix_unit(i, l) : JElement::zero();
          REQUIRE(matrix_unit(i, j) * matrix_unit(k, l) == expected);
        }
      }
    }
  }
}

TEST_CASE("verify_dn_suite") {
  auto const r = verify_dn_suite(8);
  CHECK(r.passed());
  CHECK(r.checks > 0);
}

TEST_CASE("parse and print") {
  CHECK(to_string(JElement::zero()) == "0");
  CHECK(to_string(JElement::one()) == "1");
  CHECK(to_string(d_element(1)) == "b + cb^2");
  CHECK(parse_jelement("b c") == JElement::one());
  CHECK(parse_jelement("c b^2 + b") == d_element(1));
  CHECK(parse_jelement(to_string(d_element(4))) == d_element(4));
  CHECK_THROWS_AS(parse_jelement("a"), dk::ParseError);
}
