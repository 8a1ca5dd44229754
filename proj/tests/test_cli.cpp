#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> const& args) {
    std::ostringstream out;
    std::ostringstream err;
    int const          code = dk::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

}  // namespace

TEST_CASE("element commands") {
  CHECK(run({"reduce", "a^2x"}).out == "a\n");
  CHECK(run({"reduce", "a + 1 + x"}).out == "x + 1 + a\n");
  CHECK(run({"mul", "a", "1 + ax"}).out == "0\n");
  CHECK(run({"cmp", "a^2", "a"}).out == "<\n");
  CHECK(run({"cmp", "ax", "ax"}).out == "=\n");
  CHECK(run({"cmp", "a", "a^2"}).out == ">\n");
  CHECK(run({"max", "axa^2 + x^2a^2 + ax"}).out == "ax\n");
}

TEST_CASE("nilpotent") {
  auto const r = run({"nilpotent", "a + xa^2"});
  CHECK(r.code == dk::cli::ok);
  CHECK(r.out == "nilpotent index=3 chain_len=2\n");
  CHECK(run({"nilpotent", "a"}).out == "not-nilpotent reason=cycle-detected\n");
  CHECK(run({"nilpotent", "x"}).out == "not-nilpotent reason=not-in-Ra\n");
  auto const chain = run({"nilpotent", "a + xa^2", "--chain"});
  CHECK(chain.out.find("r1 = 1 + xa\n") != std::string::npos);
}

TEST_CASE("nilpotent with a too-small power check fails") {
  auto const r = run({"nilpotent", "a + xa^2", "--power-check", "2"});
  CHECK(r.code == dk::cli::failed);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("nilpotent beyond the chain cap is undecided") {
  auto const r = run({"nilpotent", "a^2 + xa^3", "--cap", "1"});
  CHECK(r.code == dk::cli::undecided);
  CHECK(r.out.rfind("undecided", 0) == 0);
}

TEST_CASE("invert and classify") {
  CHECK(run({"invert", "1 + a + xa^2"}).out == "1 + a + axa^2 + xa^2 + a^2\n");
  CHECK(run({"invert", "a"}).out == "not-unit\n");
  CHECK(run({"classify", "1 + ax"}).out == "left_zd=false right_zd=1\n");
  CHECK(run({"classify", "a"}).out == "left_zd=true right_zd=none\n");
  CHECK(run({"srsolve", "a", "--bound", "12"}).out == "none\n");
  CHECK(run({"rann", "x"}).out == "dim=0\n");
  CHECK(run({"lann", "1 + ax", "--bound", "1"}).out.rfind("dim=", 0) == 0);
}

TEST_CASE("jacobson commands") {
  CHECK(run({"jacobson", "d", "3"}).out == "b + c^3b^4 index=4\n");
  CHECK(run({"jacobson", "unit", "1", "2"}).out == "cb^2 + c^2b^3\n");
  auto const v = run({"jacobson", "verify"});
  CHECK(v.code == dk::cli::ok);
  CHECK(v.out.rfind("PASS", 0) == 0);
}

TEST_CASE("finring commands") {
  auto const p = run({"finring", "Z4", "predicates"});
  CHECK(p.code == dk::cli::ok);
  CHECK(p.out.rfind("ring Z4 order=4\n", 0) == 0);
  auto const e = run({"finring", "T2(F2)", "equivalences"});
  CHECK(e.code == dk::cli::ok);
  CHECK(run({"finring", "Z4", "bogus"}).code == dk::cli::usage);
  CHECK(run({"finring", "Q", "predicates"}).code == dk::cli::usage);
}

TEST_CASE("verify") {
  auto const r = run({"verify", "mainlemma", "--maxlen", "4"});
  CHECK(r.code == dk::cli::ok);
  CHECK(r.out.rfind("PASS", 0) == 0);
  auto const j = run({"verify", "kn", "--json"});
  CHECK(j.code == dk::cli::ok);
  CHECK(j.out.find("\"suite\": \"kn\"") != std::string::npos);
  auto const unknown = run({"verify", "nope"});
  CHECK(unknown.code == dk::cli::usage);
  CHECK(unknown.err.find("mainlemma") != std::string::npos);
  CHECK(run({"verify"}).code == dk::cli::usage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == dk::cli::usage);
  CHECK(run({"frobnicate"}).code == dk::cli::usage);
  auto const bad = run({"reduce", "a^2y"});
  CHECK(bad.code == dk::cli::usage);
  CHECK(bad.err.rfind("error:", 0) == 0);
  CHECK(run({"cmp", "a + x", "a"}).code == dk::cli::usage);
  CHECK(run({"--help"}).code == dk::cli::ok);
}
