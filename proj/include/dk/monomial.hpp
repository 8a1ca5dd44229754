#pragma once

// Reduced monomials of R = F2<a,x : a = a^2 x>.
//
// Every aax-free word has a unique canonical shape
//
//     x^{i_n} a x^{i_{n-1}} a ... a x^{i_1} a^{i_0}
//
// with n >= 1, i_1 .. i_{n-1} >= 1 and i_0, i_n >= 0.  A ReducedMonomial
// stores the exponent vector (i_0, i_1, ..., i_n); n is its depth.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dk {

  class ReducedMonomial {
   public:
    using exponent_type = std::uint32_t;

    // The empty monomial 1, stored as (0, 0).
    ReducedMonomial() : exps_{0, 0} {}

    // Throws NotReducedError unless exps has size >= 2 and every middle
    // exponent is positive.
    explicit ReducedMonomial(std::vector<exponent_type> exps);

    static ReducedMonomial one() {
      return ReducedMonomial();
    }
    static ReducedMonomial a_power(exponent_type k) {
      return ReducedMonomial(std::vector<exponent_type>{k, 0});
    }
    static ReducedMonomial x_power(exponent_type k) {
      return ReducedMonomial(std::vector<exponent_type>{0, k});
    }

    [[nodiscard]] std::size_t depth() const noexcept {
      return exps_.size() - 1;
    }
    [[nodiscard]] std::size_t length() const noexcept;

    // i_k for 0 <= k <= depth().
    [[nodiscard]] exponent_type exponent(std::size_t k) const {
      return exps_.at(k);
    }
    [[nodiscard]] std::span<exponent_type const> exponents() const noexcept {
      return exps_;
    }

    [[nodiscard]] bool is_one() const noexcept {
      return exps_.size() == 2 && exps_[0] == 0 && exps_[1] == 0;
    }
    // m = m' a for some monomial m'.
    [[nodiscard]] bool ends_in_a() const noexcept {
      return exps_[0] >= 1;
    }
    // m = m' x for some monomial m'.
    [[nodiscard]] bool ends_in_x() const noexcept {
      return exps_[0] == 0 && exps_[1] >= 1;
    }
    // 1 or a^k.
    [[nodiscard]] bool is_a_power() const noexcept {
      return exps_.size() == 2 && exps_[1] == 0;
    }

    // Right subword m(l) = x^{i_l} a ... a x^{i_1} a^{i_0}; throws DepthError
    // unless 1 <= l <= depth().
    [[nodiscard]] ReducedMonomial subword(std::size_t l) const;

    // m a, always already reduced.
    [[nodiscard]] ReducedMonomial times_a() const;
    // The m' with m' a = m; throws NotInRaError if i_0 == 0.
    [[nodiscard]] ReducedMonomial strip_a() const;

    friend bool operator==(ReducedMonomial const&,
                           ReducedMonomial const&) = default;

   private:
    struct unchecked_t {};
    ReducedMonomial(unchecked_t, std::vector<exponent_type> exps)
        : exps_(std::move(exps)) {}

    friend ReducedMonomial operator*(ReducedMonomial const&,
                                     ReducedMonomial const&);
    friend ReducedMonomial to_exponents(std::string_view);

    std::vector<exponent_type> exps_;
  };

  enum class Order { less, equal, greater };

  // The total order on reduced monomials.  Equal depth: m1 < m2 iff
  // i_0 > j_0, or i_0 = j_0 and i_k < j_k at the first index k >= 1 where
  // they differ.  Different depths compare the depth-d right subwords
  // (d the smaller depth) and, on a tie, the shallower monomial is smaller.
  Order cmp(ReducedMonomial const& m1, ReducedMonomial const& m2) noexcept;

  inline bool precedes(ReducedMonomial const& m1,
                       ReducedMonomial const& m2) noexcept {
    return cmp(m1, m2) == Order::less;
  }

  struct Precedes {
    bool operator()(ReducedMonomial const& m1,
                    ReducedMonomial const& m2) const noexcept {
      return precedes(m1, m2);
    }
  };

  struct Succeeds {
    bool operator()(ReducedMonomial const& m1,
                    ReducedMonomial const& m2) const noexcept {
      return precedes(m2, m1);
    }
  };

  // Product of reduced monomials computed on exponent vectors: the junction
  // a^r x^s (r >= 2) collapses to a^{r-k} x^{s-k} with k = min(r-1, s), the
  // leftover a-run merges with the next one and the process repeats.
  ReducedMonomial operator*(ReducedMonomial const& m1,
                            ReducedMonomial const& m2);

  // Throws NotReducedError if w contains aax and AlphabetError for letters
  // other than a and x.
  ReducedMonomial to_exponents(std::string_view w);
  std::string     from_exponents(ReducedMonomial const& m);

  // Compact spelling such as "x^2axa^3"; the empty monomial prints as "1".
  std::string to_string(ReducedMonomial const& m);

  // Every reduced monomial of length <= max_len, sorted ascending by the
  // monomial order.  Results are cached per length.
  std::vector<ReducedMonomial> const& monomials_up_to(std::size_t max_len);

  // #a - #x.  Both sides of a = a^2 x have the same value, so this grades R.
  std::int64_t grade(ReducedMonomial const& m) noexcept;

  struct MonomialHash {
    std::size_t operator()(ReducedMonomial const& m) const noexcept;
  };

}  // namespace dk
