#pragma once

// Truncated-degree linear solvers on R.
//
// Every question here ("is r(f) zero?", "does f have a right inverse?") is
// about an infinite-dimensional space.  The solvers answer it exactly on the
// finite span of monomials of length <= L: a multiplication operator maps
// that span into the span of the monomials its images touch, so there is no
// truncation error inside the bound.  Nothing is claimed beyond it.

#include <cstddef>
#include <optional>
#include <vector>

#include "dk/element.hpp"
#include "dk/gf2.hpp"

namespace dk::solver {

  inline constexpr std::size_t default_annihilator_bound = 10;
  inline constexpr std::size_t default_inverse_bound     = 12;

  // left_mul: h -> f h.  right_mul: h -> h f.
  enum class Side { left_mul, right_mul };

  // A list of ring elements written as columns over a shared codomain basis
  // (the monomials occurring in any of them, plus any requested extras).
  struct ColumnSystem {
    gf2::BasisIndex codomain;
    gf2::BitMatrix  matrix;

    [[nodiscard]] gf2::BitVector encode(RingElement const& e) const;
    [[nodiscard]] RingElement    decode(gf2::BitVector const& v) const;
    // Whether every monomial of e lies in the codomain.
    [[nodiscard]] bool representable(RingElement const& e) const;
  };

  ColumnSystem make_columns(std::vector<RingElement> const&     columns,
                            std::vector<ReducedMonomial> const& extra = {});

  class TruncatedOperator {
   public:
    TruncatedOperator(RingElement f, Side side, std::size_t bound);

    [[nodiscard]] RingElement const& element() const noexcept {
      return f_;
    }
    [[nodiscard]] Side side() const noexcept {
      return side_;
    }
    [[nodiscard]] std::size_t bound() const noexcept {
      return bound_;
    }
    [[nodiscard]] gf2::BasisIndex const& domain() const noexcept {
      return domain_;
    }
    [[nodiscard]] ColumnSystem const& columns() const noexcept {
      return columns_;
    }
    [[nodiscard]] gf2::BitMatrix const& matrix() const noexcept {
      return columns_.matrix;
    }

    [[nodiscard]] RingElement decode_domain(gf2::BitVector const& v) const;
    // Basis of the kernel as ring elements.
    [[nodiscard]] std::vector<RingElement> kernel() const;
    // Some h of length <= bound with op(h) = target, if one exists.
    [[nodiscard]] std::optional<RingElement> preimage(RingElement const& target) const;

   private:
    RingElement     f_;
    Side            side_;
    std::size_t     bound_;
    gf2::BasisIndex domain_;
    ColumnSystem    columns_;
  };

  // Basis of {h : f h = 0, every monomial of h has length <= L}.
  std::vector<RingElement> right_annihilator(RingElement const& f, std::size_t L);
  // Basis of {h : h f = 0, every monomial of h has length <= L}.
  std::vector<RingElement> left_annihilator(RingElement const& f, std::size_t L);

  // The k with f in R a^k and f a^{-k} not in Ra, i.e. the least trailing
  // a-exponent over the support.  Throws ZeroElementError / NotInRaError.
  unsigned annihilator_exponent(RingElement const& f);

  // Some g with f g = 1 and length <= L.
  std::optional<RingElement> solve_right_inverse(RingElement const& f, std::size_t L);

  // Some g with g f^2 = f and length <= L; 0 for f = 0.
  std::optional<RingElement> solve_sr_equation(RingElement const& f, std::size_t L);

  // Basis of {g s : len g <= L} ∩ {h t : len h <= L}.
  std::vector<RingElement> cyclic_intersection(RingElement const& s,
                                               RingElement const& t,
                                               std::size_t        L);

  // Whether two families of elements span the same F2-subspace.
  bool same_span(std::vector<RingElement> const& lhs,
                 std::vector<RingElement> const& rhs);

  // Basis of span(lhs) ∩ span(rhs).
  std::vector<RingElement> span_intersection(std::vector<RingElement> const& lhs,
                                             std::vector<RingElement> const& rhs);

  // {m t : m a monomial of length <= L}.
  std::vector<RingElement> truncated_left_multiples(RingElement const& t,
                                                    std::size_t        L);

  enum class McCoyVerdict {
    holds,          // premise true and conclusion true
    premise_false,  // the annihilators intersect nontrivially at this bound
    violated        // premise true, conclusion false
  };

  struct McCoySide {
    McCoyVerdict verdict;
    std::size_t  k1_dim;
    std::size_t  k2_dim;
    std::size_t  premise_dim;     // dim(K1 ∩ K2)
    std::size_t  conclusion_dim;  // dim of the cross intersection, if checked
  };

  struct McCoyReport {
    std::size_t bound;
    // K_i = r(f), r(g); checks g K1 ∩ f K2 = 0 when K1 ∩ K2 = 0.
    McCoySide right;
    // K_i = l(f), l(g); checks K1 g ∩ K2 f = 0 when K1 ∩ K2 = 0.
    McCoySide left;
  };

  McCoyReport mccoy_check(RingElement const& f, RingElement const& g, std::size_t L);

  // Dependencies among the truncated left modules V_k = {g s t^k : len g <= L}
  // for k < count: a basis of the kernel of the operator that stacks a basis
  // of every V_k, each kernel vector returned as its tuple (v_0, ..., v_{n-1})
  // with v_k in V_k and sum v_k = 0.  An empty result means the V_k are
  // independent.
  std::vector<std::vector<RingElement>> stacked_dependencies(RingElement const& s,
                                                             RingElement const& t,
                                                             std::size_t        count,
                                                             std::size_t        L);

}  // namespace dk::solver
