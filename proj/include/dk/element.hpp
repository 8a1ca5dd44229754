#pragma once

// Elements of R = F2<a,x : a = a^2 x> as finite sets of reduced monomials,
// plus the membership predicates and named families used by the solvers.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "dk/monomial.hpp"

namespace dk {

  class RingElement {
   public:
    RingElement() = default;
    RingElement(ReducedMonomial m) : support_{std::move(m)} {}  // NOLINT
    // Arbitrary list of monomials; repeated ones cancel in pairs.
    explicit RingElement(std::vector<ReducedMonomial> monomials);
    RingElement(std::initializer_list<ReducedMonomial> monomials)
        : RingElement(std::vector<ReducedMonomial>(monomials)) {}

    static RingElement zero() {
      return {};
    }
    static RingElement one() {
      return RingElement(ReducedMonomial::one());
    }

    // Support in descending monomial order.
    [[nodiscard]] std::vector<ReducedMonomial> const& support() const noexcept {
      return support_;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return support_.empty();
    }
    [[nodiscard]] bool contains(ReducedMonomial const& m) const;
    // Largest length over the support; 0 for the zero element.
    [[nodiscard]] std::size_t max_length() const noexcept;

    friend bool operator==(RingElement const&, RingElement const&) = default;

    friend RingElement operator+(RingElement const& lhs, RingElement const& rhs);
    friend RingElement operator*(RingElement const& lhs, RingElement const& rhs);
    RingElement&       operator+=(RingElement const& rhs) {
      return *this = *this + rhs;
    }
    RingElement& operator*=(RingElement const& rhs) {
      return *this = *this * rhs;
    }

   private:
    std::vector<ReducedMonomial> support_;
  };

  struct RingElementHash {
    std::size_t operator()(RingElement const& f) const noexcept;
  };

  RingElement pow(RingElement const& e, unsigned k);

  RingElement const& a();
  RingElement const& x();

  // Throws ZeroElementError for f = 0.
  ReducedMonomial max_monomial(RingElement const& f);

  // Every support monomial ends in a (f = 0 included).
  bool in_Ra(RingElement const& f);
  // Some support monomial ends in x.
  bool has_Rx_monomial(RingElement const& f);
  // Every support monomial is 1 or a power of a.
  bool in_F2a(RingElement const& f);
  bool has_one(RingElement const& f);

  // The unique r with r a = f; throws NotInRaError unless in_Ra(f).
  RingElement strip_a(RingElement const& f);

  // a + a x^n a^n  (= a - a x^n a^n in characteristic 2).
  RingElement kn(unsigned n);

  // Uniform size in [0, min(max_support, #monomials)], then a uniform subset
  // of that size from the monomials of length <= max_len.  Deterministic for
  // a given seed.
  RingElement random_element(std::size_t   max_len,
                             std::size_t   max_support,
                             std::uint64_t seed);

  // Text grammar: terms separated by '+', each term "1", "0" or a
  // juxtaposition of a/x letters with optional ^k; whitespace is ignored.
  // Throws ParseError.
  RingElement parse_element(std::string_view text);
  // Terms in descending monomial order; the zero element prints as "0".
  std::string to_string(RingElement const& f);

}  // namespace dk
