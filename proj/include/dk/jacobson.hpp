#pragma once

// The algebra J = F2<b,c : bc = 1>.  Words avoiding bc are exactly c^i b^j,
// so a monomial is a pair (i, j) and multiplication cancels the b^j c^k
// junction.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dk::jacobson {

  struct JMonomial {
    std::uint32_t i = 0;  // leading c-power
    std::uint32_t j = 0;  // trailing b-power

    friend auto operator<=>(JMonomial const&, JMonomial const&) = default;
  };

  JMonomial jmul(JMonomial m1, JMonomial m2) noexcept;

  class JElement {
   public:
    JElement() = default;
    JElement(JMonomial m) : support_{m} {}  // NOLINT
    explicit JElement(std::vector<JMonomial> monomials);
    JElement(std::initializer_list<JMonomial> monomials)
        : JElement(std::vector<JMonomial>(monomials)) {}

    static JElement zero() {
      return {};
    }
    static JElement one() {
      return JElement(JMonomial{0, 0});
    }

    // Ascending (i, j).
    [[nodiscard]] std::vector<JMonomial> const& support() const noexcept {
      return support_;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return support_.empty();
    }

    friend bool operator==(JElement const&, JElement const&) = default;

    friend JElement operator+(JElement const& lhs, JElement const& rhs);
    friend JElement operator*(JElement const& lhs, JElement const& rhs);
    JElement&       operator+=(JElement const& rhs) {
      return *this = *this + rhs;
    }
    JElement& operator*=(JElement const& rhs) {
      return *this = *this * rhs;
    }

   private:
    std::vector<JMonomial> support_;
  };

  JElement pow(JElement const& e, unsigned k);

  inline JElement b_power(std::uint32_t k) {
    return JMonomial{0, k};
  }
  inline JElement c_power(std::uint32_t k) {
    return JMonomial{k, 0};
  }

  // d_n = b + c^n b^{n+1}; throws DimensionError for n = 0.
  JElement d_element(unsigned n);

  // E_ij = c^i (1 + cb) b^j.
  JElement matrix_unit(unsigned i, unsigned j);

  // Least k in [1, cap] with e^k = 0.
  std::optional<unsigned> nilpotency_index(JElement const& e, unsigned cap);

  struct DnReport {
    std::size_t              checks = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool passed() const noexcept {
      return failures.empty();
    }
  };

  // For n <= n_max and 1 <= k <= n+1: d_n^k = b^{k-1} d_n, d_n^n != 0,
  // d_n^{n+1} = 0, b^n d_n = 0, b^n d_{n+1} != 0, b^n + c b^{n+1} != 0 and
  // d_{n+1} (1 + c^{n+1} b^{n+1}) = d_n.
  DnReport verify_dn_suite(unsigned n_max);

  // Same term grammar as R, over the letters b and c.  Throws ParseError.
  JElement    parse_jelement(std::string_view text);
  std::string to_string(JMonomial m);
  std::string to_string(JElement const& e);

}  // namespace dk::jacobson
