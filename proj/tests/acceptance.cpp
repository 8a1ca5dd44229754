// Runs the sixteen acceptance criteria at their stated parameters and
// prints one PASS/FAIL line for each.  Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dk/element.hpp"
#include "dk/finring.hpp"
#include "dk/structure.hpp"
#include "dk/suites.hpp"
#include "dk/sweep.hpp"

using namespace dk;

namespace {

  struct Outcome {
    bool        passed = false;
    std::string detail;
  };

  struct Criterion {
    int                      id;
    char const*              name;
    double                   time_limit;  // seconds, 0 for none
    std::function<Outcome()> check;
  };

  std::string counters(SuiteReport const& r) {
    std::string out;
    for (auto const& [k, v] : r.counters()) {
      out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
    }
    if (!r.passed()) {
      out += " first_failure=\"" + r.failures().front().detail + "\"";
    }
    return out;
  }

  Outcome suite(char const* name, suites::SuiteOptions const& o) {
    auto const r = suites::run_suite(name, o);
    return {r.passed(), counters(r)};
  }

  suites::SuiteOptions opts(std::optional<std::size_t> maxlen,
                            std::optional<std::size_t> samples,
                            std::optional<std::size_t> bound,
                            std::optional<unsigned>    power = std::nullopt) {
    suites::SuiteOptions o;
    o.maxlen  = maxlen;
    o.samples = samples;
    o.bound   = bound;
    o.power   = power;
    return o;
  }

  Outcome all_of(std::vector<Outcome> const& parts) {
    Outcome out{true, ""};
    for (auto const& p : parts) {
      out.passed = out.passed && p.passed;
      out.detail += (out.detail.empty() ? "" : "; ") + p.detail;
    }
    return out;
  }

  Outcome finite_rings() {
    double worst      = 0;
    std::string slowest;
    std::size_t failed = 0;
    for (auto const& spec : finring::catalog()) {
      auto const start = std::chrono::steady_clock::now();
      auto const r     = finring::verify_equivalences(finring::parse_ring(spec));
      auto const secs  = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      failed += r.passed() ? 0 : 1;
      if (secs > worst) {
        worst   = secs;
        slowest = spec;
      }
    }
    auto full = suite("finring", {});
    char buf[128];
    std::snprintf(buf, sizeof buf, "; slowest ring %s %.2fs", slowest.c_str(), worst);
    full.passed = full.passed && failed == 0 && worst < 30.0;
    full.detail += buf;
    return full;
  }

  Outcome rx_witnesses() {
    std::size_t found = 0;
    std::size_t tried = 0;
    std::string missing;
    for (std::uint64_t i = 0; tried < 200; ++i) {
      auto const f = random_element(5, 4, derive_seed(derive_seed(1, "jrad-rx"), i));
      if (f.is_zero()) {
        continue;
      }
      ++tried;
      if (structure::rx_witness(f, 8)) {
        ++found;
      } else if (missing.empty()) {
        missing = to_string(f);
      }
    }
    Outcome out{found == tried, "witnesses=" + std::to_string(found) + "/" + std::to_string(tried)};
    if (!missing.empty()) {
      out.detail += " missing=" + missing;
    }
    auto const j = suite("jrad", {});
    return all_of({out, j});
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "rewriting soundness", 30, [] { return suite("confluence", opts(10, {}, {})); }},
      {2, "order laws", 60, [] { return suite("order", opts(8, {}, {})); }},
      {3, "main lemma", 60, [] { return suite("mainlemma", opts(7, {}, {})); }},
      {4, "r(f) = 0 for Rx-monomials", 120, [] { return suite("mainthm", opts(5, 500, 10)); }},
      {5, "r(f) = r(a^k)", 0, [] { return suite("rann", opts({}, 200, 10)); }},
      {6, "l(f) = Ra^n", 0, [] { return suite("lann", opts({}, 200, 10)); }},
      {7, "nilpotency oracle agreement", 0, [] { return suite("nr", opts(3, 500, {}, 12)); }},
      {8, "units are unipotent", 0, [] { return suite("uu", opts({}, 300, 12)); }},
      {9, "non-Dischinger witness", 0, [] { return suite("symm", opts({}, 100, 10)); }},
      {10, "k_n identities", 0, [] { return suite("kn", opts(6, {}, {})); }},
      {11, "jacobson suite", 30, [] { return suite("jacobson", opts(8, 200, {})); }},
      {12, "linearly McCoy criterion", 0, [] { return suite("mccoy", opts({}, 200, 8)); }},
      {13, "uniform dimension", 0, [] { return suite("uniform", opts(6, {}, 8)); }},
      {14, "finite-ring equivalences", 0, finite_rings},
      {15, "f + g + fg outside Ra", 0, [] { return suite("aa", opts({}, 500, {})); }},
      {16, "J(R) = 0 witnesses", 0, rx_witnesses},
  };

  int        failures = 0;
  auto const begin    = std::chrono::steady_clock::now();
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.check();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    auto const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      o.passed = false;
      o.detail += "; over time limit";
    }
    failures += o.passed ? 0 : 1;
    std::printf("%s %2d %s (%.2fs): %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  auto const total = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
