#pragma once

// Small finite rings given by full addition and multiplication tables, with
// brute-force element and ring predicates.

#include <bitset>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dk/report.hpp"

namespace dk::finring {

  inline constexpr std::size_t max_order      = 512;
  inline constexpr std::size_t exchange_cap   = 16;
  inline constexpr std::size_t full_axiom_cap = 64;

  using Id     = std::uint16_t;
  using Subset = std::bitset<max_order>;

  class FiniteRing {
   public:
    // Tabulates add/mul on ids 0 .. order-1 and checks the ring axioms: on
    // all triples up to full_axiom_cap elements, on sampled triples above.
    // Throws SizeCapError above max_order and RingAxiomError on failure.
    FiniteRing(std::string                      label,
               std::size_t                      order,
               std::function<Id(Id, Id)> const& add,
               std::function<Id(Id, Id)> const& mul,
               Id                               zero,
               Id                               one,
               std::vector<std::string>         names);

    [[nodiscard]] std::size_t order() const noexcept {
      return order_;
    }
    [[nodiscard]] std::string const& label() const noexcept {
      return label_;
    }
    void set_label(std::string label) {
      label_ = std::move(label);
    }
    [[nodiscard]] Id zero() const noexcept {
      return zero_;
    }
    [[nodiscard]] Id one() const noexcept {
      return one_;
    }
    [[nodiscard]] Id add(Id a, Id b) const noexcept {
      return add_[a * order_ + b];
    }
    [[nodiscard]] Id mul(Id a, Id b) const noexcept {
      return mul_[a * order_ + b];
    }
    [[nodiscard]] Id neg(Id a) const noexcept {
      return neg_[a];
    }
    [[nodiscard]] Id sub(Id a, Id b) const noexcept {
      return add(a, neg(b));
    }
    [[nodiscard]] Id pow(Id a, std::size_t n) const noexcept;
    [[nodiscard]] std::string const& name(Id a) const {
      return names_[a];
    }

    // a R, R a, r(a) = {h : a h = 0} and l(a) = {h : h a = 0}.
    [[nodiscard]] Subset right_multiples(Id a) const;
    [[nodiscard]] Subset left_multiples(Id a) const;
    [[nodiscard]] Subset right_annihilator(Id a) const;
    [[nodiscard]] Subset left_annihilator(Id a) const;

    [[nodiscard]] std::vector<Id> const& idempotents() const noexcept {
      return idempotents_;
    }
    [[nodiscard]] std::vector<Id> const& units() const noexcept {
      return units_;
    }
    [[nodiscard]] Subset const& nilpotents() const noexcept {
      return nilpotents_;
    }
    // All right ideals; throws SizeCapError above exchange_cap elements.
    [[nodiscard]] std::vector<Subset> const& right_ideals() const;

   private:
    std::string              label_;
    std::size_t              order_;
    std::vector<Id>          add_;
    std::vector<Id>          mul_;
    std::vector<Id>          neg_;
    Id                       zero_;
    Id                       one_;
    std::vector<std::string> names_;
    std::vector<Id>          idempotents_;
    std::vector<Id>          units_;
    Subset                   nilpotents_;

    mutable std::vector<Subset> right_ideals_;
    mutable bool                right_ideals_ready_ = false;
  };

  // Z/n, n >= 1.
  FiniteRing zmod(std::size_t n);
  // k x k matrices over base.
  FiniteRing matrices(FiniteRing const& base, std::size_t k);
  // k x k upper triangular matrices over base.
  FiniteRing upper_triangular(FiniteRing const& base, std::size_t k);
  // F2[t]/(p) for p given by its coefficient bits (bit i is the coefficient
  // of t^i); p must have degree >= 1.
  FiniteRing poly_quotient(std::uint64_t p);
  FiniteRing product(FiniteRing const& lhs, FiniteRing const& rhs);

  // Text syntax:
  //   spec   := factor ('x' factor)*
  //   factor := 'Z' n | 'F2' | 'M' k '(' spec ')' | 'T' k '(' spec ')'
  //           | 'F2[t]/' poly | '(' spec ')'
  //   poly   := 't^' k | '(' term ('+' term)* ')'   with term := '1' | 't' | 't^' k
  // Throws ParseError, SizeCapError.
  FiniteRing parse_ring(std::string_view spec);

  // Element predicates.  Exponent searches stop once a power repeats.
  bool is_idempotent(FiniteRing const& r, Id a);
  bool is_regular(FiniteRing const& r, Id a);
  bool is_unit_regular(FiniteRing const& r, Id a);
  bool is_pi_regular(FiniteRing const& r, Id a);
  bool is_right_strongly_regular(FiniteRing const& r, Id a);
  bool is_left_strongly_regular(FiniteRing const& r, Id a);
  bool is_right_strongly_pi_regular(FiniteRing const& r, Id a);
  bool is_left_strongly_pi_regular(FiniteRing const& r, Id a);
  bool is_suitable(FiniteRing const& r, Id a);
  // Mirror image: an idempotent e in R a with 1 - e in R (1 - a).
  bool is_left_suitable(FiniteRing const& r, Id a);
  // Throws SizeCapError above exchange_cap elements.
  bool is_right_exchange(FiniteRing const& r, Id a);
  // R a^n is a two-sided ideal.
  bool left_power_ideal(FiniteRing const& r, Id a, std::size_t n);

  // Ring predicates.
  bool is_dedekind_finite(FiniteRing const& r);
  bool is_abelian(FiniteRing const& r);
  bool is_NI(FiniteRing const& r);
  bool is_weakly_semicommutative(FiniteRing const& r);
  bool is_left_duo(FiniteRing const& r);
  bool is_weakly_left_duo(FiniteRing const& r);
  // Every right strongly regular element is strongly regular.
  bool is_right_dischinger(FiniteRing const& r);
  bool is_left_dischinger(FiniteRing const& r);
  // Every right strongly pi-regular element is strongly pi-regular.
  bool is_right_pi_dischinger(FiniteRing const& r);

  struct ElementRow {
    Id                id;
    std::vector<bool> values;  // in element_predicate_names() order
  };

  std::vector<std::string> const& element_predicate_names();
  // Exchange is reported only when the ring is small enough.
  std::vector<ElementRow> element_table(FiniteRing const& r);

  std::vector<std::pair<std::string, bool>> ring_predicates(FiniteRing const& r);

  // Brute-force checks of the element-level equivalences on one ring.
  SuiteReport verify_equivalences(FiniteRing const& r);

  // Specs of the shipped catalog.
  std::vector<std::string> const& catalog();

}  // namespace dk::finring
