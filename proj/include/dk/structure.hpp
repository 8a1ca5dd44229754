#pragma once

// Decision procedures on R: nilpotency, units, zero divisors and the
// samplers that feed the verification suites.

#include <cstdint>
#include <optional>
#include <vector>

#include "dk/element.hpp"
#include "dk/jacobson.hpp"
#include "dk/report.hpp"

namespace dk::structure {

  inline constexpr unsigned default_chain_cap   = 64;
  inline constexpr unsigned default_power_bound = 16;

  enum class NilStatus { nilpotent, not_nilpotent, undecided };

  enum class NilReason {
    none,             // nilpotent
    not_in_Ra,        // f itself has a monomial ending in x
    chain_leaves_Ra,  // some a r_i left Ra
    cycle_detected,   // some r_i repeated
    cap_exceeded
  };

  struct NilpotencyVerdict {
    NilStatus                status = NilStatus::undecided;
    NilReason                reason = NilReason::none;
    // r_1, ..., r_k with f = r_1 a, a r_i = r_{i+1} a and a r_k = 0.  For
    // the other verdicts, the iterates computed before stopping.
    std::vector<RingElement> chain;

    [[nodiscard]] bool nilpotent() const noexcept {
      return status == NilStatus::nilpotent;
    }
    // Re-checks the chain identities against f.
    [[nodiscard]] bool verify(RingElement const& f) const;
  };

  char const* to_string(NilStatus s) noexcept;
  char const* to_string(NilReason r) noexcept;

  // Shifts a to the left through f = r_1 a, a r_1 = r_2 a, ...  The chain is
  // forced because h -> h a is injective.  Iterates never get longer, so a
  // non-nilpotent f either leaves Ra or revisits an iterate.
  NilpotencyVerdict chain_nilpotency(RingElement const& f,
                                     unsigned           cap = default_chain_cap);

  // Least k <= K with f^k = 0.
  std::optional<unsigned> power_nilpotency(RingElement const& f,
                                           unsigned           K = default_power_bound);

  // Image under the homomorphism R -> J, a -> b, x -> c (b^2 c = b).
  jacobson::JElement jacobson_image(RingElement const& f);

  // True only if f^K != 0 follows from a cheap invariant: the coefficient
  // of 1, the image in J, or the extreme homogeneous components for the
  // grading by #a - #x (each recursively).  False means "not certified".
  bool certified_nonvanishing(RingElement const& f, unsigned K);

  // f is a unit iff f + 1 is nilpotent.  Throws UndecidedError when the
  // chain oracle cannot decide f + 1.
  bool is_unit(RingElement const& f, unsigned cap = default_chain_cap);
  // The geometric series sum_j (f + 1)^j, or nullopt if f is not a unit.
  std::optional<RingElement> inverse(RingElement const& f,
                                     unsigned           cap = default_chain_cap);

  struct ZeroDivisorClass {
    bool                    left_zd = false;  // f h = 0 for some h != 0
    std::optional<unsigned> right_zd;         // least n with a^n f = 0
  };

  // Throws ZeroElementError for f = 0.
  ZeroDivisorClass zero_divisor_class(RingElement const& f, unsigned L);

  // Least k <= K such that f x^k has a monomial ending in x.  Throws
  // ZeroElementError for f = 0.
  std::optional<unsigned> rx_witness(RingElement const& f, unsigned K);

  struct NilpotentParams {
    unsigned chain_length = 2;
    unsigned bound        = 6;   // length bound for each r_i
    unsigned attempts     = 32;
  };

  // Builds a forced chain backwards: r_k from r(a), then r_i with
  // a r_i = r_{i+1} a, and returns r_1 a.  Throws SamplerExhausted when no
  // attempt finds solutions within the bound.
  RingElement random_nilpotent(NilpotentParams const& params, std::uint64_t seed);

  // k_n for n <= 5, a + x a^2 and a^2 + x^n a^{n+2} for n <= 5.
  std::vector<RingElement> curated_nilpotents();

  // Sums and products of sampled nilpotent pairs stay nilpotent, and
  // a^2 + x^n a^{n+2} is nilpotent for n <= 5.
  SuiteReport nilsubring_closure_check(unsigned samples, std::uint64_t seed);

}  // namespace dk::structure
