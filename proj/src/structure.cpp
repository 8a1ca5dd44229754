#include "dk/structure.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "dk/errors.hpp"
#include "dk/solver.hpp"
#include "dk/sweep.hpp"

namespace dk::structure {

  namespace {

    RingElement x_power(unsigned k) {
      return RingElement(ReducedMonomial::x_power(k));
    }

    RingElement a_power(unsigned k) {
      return RingElement(ReducedMonomial::a_power(k));
    }

    // Sum of one or two random basis vectors.  Sparse choices keep the
    // backward solves of the nilpotent sampler feasible.
    RingElement random_combination(std::vector<RingElement> const& basis,
                                   std::mt19937_64&                rng) {
      RingElement out;
      while (out.is_zero() && !basis.empty()) {
        auto const terms = 1 + rng() % 2;
        for (std::size_t t = 0; t < terms; ++t) {
          out += basis[rng() % basis.size()];
        }
      }
      return out;
    }

    // Components of the largest and smallest grade.
    std::pair<RingElement, RingElement> extreme_components(RingElement const& f) {
      auto lo = grade(f.support().front());
      auto hi = lo;
      for (auto const& m : f.support()) {
        lo = std::min(lo, grade(m));
        hi = std::max(hi, grade(m));
      }
      std::vector<ReducedMonomial> top, bottom;
      for (auto const& m : f.support()) {
        if (grade(m) == hi) {
          top.push_back(m);
        }
        if (grade(m) == lo) {
          bottom.push_back(m);
        }
      }
      return {RingElement(std::move(top)), RingElement(std::move(bottom))};
    }

  }  // namespace

  char const* to_string(NilStatus s) noexcept {
    switch (s) {
      case NilStatus::nilpotent: return "nilpotent";
      case NilStatus::not_nilpotent: return "not-nilpotent";
      case NilStatus::undecided: return "undecided";
    }
    return "?";
  }

  char const* to_string(NilReason r) noexcept {
    switch (r) {
      case NilReason::none: return "none";
      case NilReason::not_in_Ra: return "not-in-Ra";
      case NilReason::chain_leaves_Ra: return "chain-leaves-Ra";
      case NilReason::cycle_detected: return "cycle-detected";
      case NilReason::cap_exceeded: return "cap-exceeded";
    }
    return "?";
  }

  bool NilpotencyVerdict::verify(RingElement const& f) const {
    if (status == NilStatus::not_nilpotent && reason == NilReason::not_in_Ra) {
      return !in_Ra(f);
    }
    if (chain.empty()) {
      return status == NilStatus::nilpotent && f.is_zero();
    }
    if (chain.front() * a() != f) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (a() * chain[i] != chain[i + 1] * a()) {
        return false;
      }
    }
    auto const last = a() * chain.back();
    switch (status) {
      case NilStatus::nilpotent: return last.is_zero();
      case NilStatus::undecided: return in_Ra(last);
      case NilStatus::not_nilpotent: break;
    }
    if (reason == NilReason::chain_leaves_Ra) {
      return !in_Ra(last);
    }
    if (reason == NilReason::cycle_detected && in_Ra(last)) {
      auto const next = strip_a(last);
      return std::find(chain.begin(), chain.end(), next) != chain.end();
    }
    return false;
  }

  NilpotencyVerdict chain_nilpotency(RingElement const& f, unsigned cap) {
    NilpotencyVerdict v;
    if (f.is_zero()) {
      v.status = NilStatus::nilpotent;
      return v;
    }
    if (!in_Ra(f)) {
      v.status = NilStatus::not_nilpotent;
      v.reason = NilReason::not_in_Ra;
      return v;
    }
    std::unordered_set<RingElement, RingElementHash> seen;
    v.chain.push_back(strip_a(f));
    seen.insert(v.chain.back());
    for (;;) {
      auto const g = a() * v.chain.back();
      if (g.is_zero()) {
        v.status = NilStatus::nilpotent;
        return v;
      }
      if (!in_Ra(g)) {
        v.status = NilStatus::not_nilpotent;
        v.reason = NilReason::chain_leaves_Ra;
        return v;
      }
      if (v.chain.size() >= cap) {
        v.status = NilStatus::undecided;
        v.reason = NilReason::cap_exceeded;
        return v;
      }
      auto next = strip_a(g);
      if (!seen.insert(next).second) {
        v.status = NilStatus::not_nilpotent;
        v.reason = NilReason::cycle_detected;
        return v;
      }
      v.chain.push_back(std::move(next));
    }
  }

  jacobson::JElement jacobson_image(RingElement const& f) {
    using jacobson::JMonomial;
    std::vector<JMonomial> out;
    out.reserve(f.support().size());
    for (auto const& m : f.support()) {
      // x^{i_n} a x^{i_{n-1}} ... a x^{i_1} a^{i_0}  ->  c^{i_n} b ... b c^{i_1} b^{i_0}
      auto const e   = m.exponents();
      JMonomial  acc = {e.back(), 0};
      for (std::size_t k = e.size() - 1; k-- > 1;) {
        acc = jacobson::jmul(acc, JMonomial{0, 1});
        acc = jacobson::jmul(acc, JMonomial{e[k], 0});
      }
      out.push_back(jacobson::jmul(acc, JMonomial{0, e[0]}));
    }
    return jacobson::JElement(std::move(out));
  }

  bool certified_nonvanishing(RingElement const& f, unsigned K) {
    if (f.is_zero()) {
      return false;
    }
    // A product of monomials is 1 only if every factor is 1.
    if (has_one(f)) {
      return true;
    }
    if (!jacobson::pow(jacobson_image(f), K).is_zero()) {
      return true;
    }
    auto const [top, bottom] = extreme_components(f);
    if (top == f) {
      return false;
    }
    // (f^K) restricted to the extreme grade is (f_top)^K.
    for (auto const* c : {&top, &bottom}) {
      if (certified_nonvanishing(*c, K) || !pow(*c, K).is_zero()) {
        return true;
      }
    }
    return false;
  }

  std::optional<unsigned> power_nilpotency(RingElement const& f, unsigned K) {
    if (f.is_zero()) {
      return 1;
    }
    if (certified_nonvanishing(f, K)) {
      return std::nullopt;
    }
    RingElement p = f;
    for (unsigned k = 1; k <= K; ++k) {
      if (p.is_zero()) {
        return k;
      }
      if (k < K) {
        p *= f;
      }
    }
    return std::nullopt;
  }

  bool is_unit(RingElement const& f, unsigned cap) {
    auto const v = chain_nilpotency(f + RingElement::one(), cap);
    if (v.status == NilStatus::undecided) {
      throw UndecidedError("chain oracle undecided on " + to_string(f) + " + 1");
    }
    return v.nilpotent();
  }

  std::optional<RingElement> inverse(RingElement const& f, unsigned cap) {
    if (!is_unit(f, cap)) {
      return std::nullopt;
    }
    auto const  n   = f + RingElement::one();
    RingElement sum = RingElement::one();
    for (RingElement p = n; !p.is_zero(); p *= n) {
      sum += p;
    }
    return sum;
  }

  ZeroDivisorClass zero_divisor_class(RingElement const& f, unsigned L) {
    if (f.is_zero()) {
      throw ZeroElementError("zero-divisor class of 0 is undefined");
    }
    ZeroDivisorClass out;
    out.left_zd   = in_Ra(f);
    RingElement p = f;
    for (unsigned n = 1; n <= L; ++n) {
      p = a() * p;
      if (p.is_zero()) {
        out.right_zd = n;
        break;
      }
    }
    return out;
  }

  std::optional<unsigned> rx_witness(RingElement const& f, unsigned K) {
    if (f.is_zero()) {
      throw ZeroElementError("rx witness of 0 is undefined");
    }
    RingElement g = f;
    for (unsigned k = 0; k <= K; ++k) {
      if (has_Rx_monomial(g)) {
        return k;
      }
      g *= x();
    }
    return std::nullopt;
  }

  RingElement random_nilpotent(NilpotentParams const& params, std::uint64_t seed) {
    if (params.chain_length == 0) {
      return {};
    }
    solver::TruncatedOperator const left_a(a(), solver::Side::left_mul, params.bound);
    auto const                      kernel = left_a.kernel();
    if (kernel.empty()) {
      throw SamplerExhausted("r(a) is zero at bound " + std::to_string(params.bound));
    }
    std::mt19937_64 rng(seed);
    for (unsigned attempt = 0; attempt < params.attempts; ++attempt) {
      RingElement r  = random_combination(kernel, rng);
      bool        ok = true;
      for (unsigned i = 1; i < params.chain_length && ok; ++i) {
        auto const pre = left_a.preimage(r * a());
        if (!pre) {
          ok = false;
          break;
        }
        r = *pre;
        if (rng() & 1u) {
          r += random_combination(kernel, rng);
        }
      }
      if (ok) {
        return r * a();
      }
    }
    throw SamplerExhausted("no chain of length " + std::to_string(params.chain_length)
                           + " within bound " + std::to_string(params.bound));
  }

  std::vector<RingElement> curated_nilpotents() {
    std::vector<RingElement> out;
    for (unsigned n = 1; n <= 5; ++n) {
      out.push_back(kn(n));
    }
    out.push_back(a() + x() * a_power(2));
    for (unsigned n = 1; n <= 5; ++n) {
      out.push_back(a_power(2) + x_power(n) * a_power(n + 2));
    }
    return out;
  }

  SuiteReport nilsubring_closure_check(unsigned samples, std::uint64_t seed) {
    SuiteReport report("nilsubring");
    report.param("samples", samples);
    report.param("seed", seed);

    for (unsigned n = 1; n <= 5; ++n) {
      auto const f = a_power(2) + x_power(n) * a_power(n + 2);
      auto const v = chain_nilpotency(f);
      report.count("families");
      if (!v.nilpotent() || !v.verify(f)) {
        report.fail("a^2 + x^" + std::to_string(n) + "a^" + std::to_string(n + 2)
                    + " is " + to_string(v.status));
      }
    }

    auto pool = curated_nilpotents();
    pool.push_back(RingElement::zero());
    auto draw = [&pool](std::mt19937_64& rng, std::uint64_t s) {
      if (rng() % 2 == 0) {
        return pool[rng() % pool.size()];
      }
      NilpotentParams params;
      params.chain_length = 1 + static_cast<unsigned>(rng() % 2);
      return random_nilpotent(params, s);
    };

    struct Outcome {
      bool        ok = true;
      std::string detail;
    };
    auto const outcomes = sweep(samples, [&](std::size_t i) {
      auto const      s = derive_seed(seed, i);
      std::mt19937_64 rng(s);
      auto const      r = draw(rng, derive_seed(s, 1));
      auto const      t = draw(rng, derive_seed(s, 2));
      Outcome         out;
      for (auto const& [label, e] : {std::pair{"sum", r + t}, std::pair{"product", r * t}}) {
        auto const v = chain_nilpotency(e);
        if (!v.nilpotent() || !v.verify(e)) {
          out.ok     = false;
          out.detail = std::string(label) + " of " + to_string(r) + " and " + to_string(t)
                       + " is " + to_string(v.status);
        }
      }
      return out;
    });
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      report.count("pairs");
      if (!outcomes[i].ok) {
        report.fail(outcomes[i].detail, derive_seed(seed, i));
      }
    }
    return report;
  }

}  // namespace dk::structure
