#include <doctest.h>

#include "dk/errors.hpp"
#include "dk/grammar.hpp"
#include "dk/rewrite.hpp"
#include "oracle.hpp"

using namespace dk::rewrite;

TEST_CASE("check_rule accepts the two presentations and rejects overlaps") {
  CHECK(dk_rule().pattern() == "aax");
  CHECK(dk_rule().replacement() == "a");
  CHECK(jacobson_rule().pattern() == "bc");
  CHECK(jacobson_rule().replacement().empty());
  CHECK_NOTHROW(check_rule({'a', 'x'}, "aax", "a"));
  CHECK_NOTHROW(check_rule({'b', 'c'}, "bc", ""));
  CHECK_THROWS_AS(check_rule({'a', 'x'}, "aa", "a"), dk::OverlapError);
  CHECK_THROWS_AS(check_rule({'a', 'x'}, "axa", "x"), dk::OverlapError);
  CHECK_THROWS_AS(check_rule({'a', 'x'}, "ax", "xa"), dk::NotReducingError);
  CHECK_THROWS_AS(check_rule({'a', 'x'}, "", ""), dk::NotReducingError);
  CHECK_THROWS_AS(check_rule({'a', 'x'}, "aby", "a"), dk::AlphabetError);
}

TEST_CASE("normalize on small words") {
  CHECK(normalize("aax", dk_rule()) == "a");
  CHECK(normalize("ax", dk_rule()) == "ax");
  CHECK(normalize("aaax", dk_rule()) == "aa");
  CHECK(normalize("aaxx", dk_rule()) == "ax");
  CHECK(normalize("aaaxxx", dk_rule()) == "ax");
  CHECK(normalize("", dk_rule()).empty());
  CHECK(normalize("bc", jacobson_rule()).empty());
  CHECK(normalize("cb", jacobson_rule()) == "cb");
  CHECK(normalize("bbcc", jacobson_rule()).empty());
  CHECK(normalize("ccbccc", jacobson_rule()) == "cccc");
}

TEST_CASE("every strategy agrees with the string-replacement oracle") {
  for (auto const& w : oracle::words('a', 'x', 9)) {
    auto const expected = oracle::reduce_ax(w);
    REQUIRE(normalize(w, dk_rule()) == expected);
    REQUIRE(normalize(w, dk_rule(), Strategy::leftmost) == expected);
    REQUIRE(normalize(w, dk_rule(), Strategy::rightmost) == expected);
    REQUIRE(is_normal(expected, dk_rule()));
  }
  for (auto const& w : oracle::words('b', 'c', 9)) {
    REQUIRE(normalize(w, jacobson_rule()) == oracle::reduce_bc(w));
  }
}

TEST_CASE("rewrite_once returns nullopt exactly on normal forms") {
  CHECK_FALSE(rewrite_once("axa", dk_rule(), Strategy::leftmost).has_value());
  CHECK(rewrite_once("aaxaax", dk_rule(), Strategy::leftmost) == "aaax");
  CHECK(rewrite_once("aaxaax", dk_rule(), Strategy::rightmost) == "aaxa");
}

TEST_CASE("all_words is shortlex and complete") {
  auto const ws = all_words({'a', 'x'}, 3);
  REQUIRE(ws.size() == 15);
  CHECK(ws[0].empty());
  CHECK(ws[1] == "a");
  CHECK(ws[2] == "x");
  CHECK(ws[3] == "aa");
  CHECK(ws.back() == "xxx");
}

TEST_CASE("Algebra arithmetic") {
  Algebra const R(dk_rule());
  auto const    one = R.one();
  auto const    a   = R.element({"a"});
  auto const    x   = R.element({"x"});
  auto const    f   = R.element({"a", "xaa"});

  CHECK(R.add(R.element({"", "a"}), a) == one);
  CHECK(R.add(R.zero(), f) == f);
  CHECK(R.add(R.add(a, x), R.add(a, x)).is_zero());
  CHECK(R.mul(a, R.element({"ax"})) == a);
  CHECK(R.mul(x, a) == R.element({"xa"}));
  CHECK(R.mul(f, f) == R.element({"aa", "axaa"}));
  CHECK(R.pow(f, 3).is_zero());
  CHECK(R.pow(f, 0) == one);
  CHECK(R.pow(a, 2) == R.element({"aa"}));
  CHECK(R.element({"aax", "a"}).is_zero());
}

TEST_CASE("Algebra multiplication matches the oracle on reduced words") {
  Algebra const R(dk_rule());
  auto const    ws = oracle::reduced_words(4);
  for (auto const& u : ws) {
    for (auto const& v : ws) {
      auto const got = R.mul(R.element({u}), R.element({v}));
      REQUIRE(got.support.size() == 1);
      REQUIRE(got.support.front() == oracle::reduce_ax(u + v));
    }
  }
}

TEST_CASE("grammar expands exponents and formats runs") {
  using dk::grammar::format_word;
  using dk::grammar::parse_terms;
  CHECK(parse_terms("a^2x + 1", {'a', 'x'}) == std::vector<Word>{"aax", ""});
  CHECK(parse_terms(" x a^3 ", {'a', 'x'}) == std::vector<Word>{"xaaa"});
  CHECK(parse_terms("0", {'a', 'x'}).empty());
  CHECK_THROWS_AS(parse_terms("a^", {'a', 'x'}), dk::ParseError);
  CHECK_THROWS_AS(parse_terms("b", {'a', 'x'}), dk::ParseError);
  CHECK_THROWS_AS(parse_terms("a++x", {'a', 'x'}), dk::ParseError);
  CHECK(format_word("") == "1");
  CHECK(format_word("xxxaxx") == "x^3ax^2");
  CHECK(dk::grammar::join_terms({}) == "0");
}
