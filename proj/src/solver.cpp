#include "dk/solver.hpp"

#include <algorithm>
#include <limits>

#include "dk/errors.hpp"

namespace dk::solver {

  namespace {

    RingElement apply_side(RingElement const& f, Side side, RingElement const& h) {
      return side == Side::left_mul ? f * h : h * f;
    }

    std::vector<ReducedMonomial> monomials_of(std::vector<RingElement> const& es) {
      std::vector<ReducedMonomial> out;
      for (auto const& e : es) {
        out.insert(out.end(), e.support().begin(), e.support().end());
      }
      return out;
    }

    // Both families encoded over one codomain.
    struct PairedColumns {
      ColumnSystem   system;
      gf2::BitMatrix lhs;
      gf2::BitMatrix rhs;
    };

    PairedColumns paired(std::vector<RingElement> const& lhs,
                         std::vector<RingElement> const& rhs) {
      std::vector<RingElement> all = lhs;
      all.insert(all.end(), rhs.begin(), rhs.end());
      PairedColumns out{make_columns(all), {}, {}};
      auto const    rows = out.system.codomain.size();
      std::vector<gf2::BitVector> l, r;
      for (auto const& e : lhs) {
        l.push_back(out.system.encode(e));
      }
      for (auto const& e : rhs) {
        r.push_back(out.system.encode(e));
      }
      out.lhs = gf2::BitMatrix::from_columns(rows, l);
      out.rhs = gf2::BitMatrix::from_columns(rows, r);
      return out;
    }

    std::vector<RingElement> multiply_all(std::vector<RingElement> const& es,
                                          RingElement const&              by,
                                          Side                            side) {
      std::vector<RingElement> out;
      out.reserve(es.size());
      for (auto const& e : es) {
        out.push_back(apply_side(by, side, e));
      }
      return out;
    }

    McCoySide mccoy_side(std::vector<RingElement> const& k1,
                         std::vector<RingElement> const& k2,
                         std::vector<RingElement> const& cross1,
                         std::vector<RingElement> const& cross2) {
      McCoySide side{McCoyVerdict::holds, k1.size(), k2.size(), 0, 0};
      side.premise_dim = span_intersection(k1, k2).size();
      if (side.premise_dim != 0) {
        side.verdict = McCoyVerdict::premise_false;
        return side;
      }
      side.conclusion_dim = span_intersection(cross1, cross2).size();
      if (side.conclusion_dim != 0) {
        side.verdict = McCoyVerdict::violated;
      }
      return side;
    }

  }  // namespace

  gf2::BitVector ColumnSystem::encode(RingElement const& e) const {
    gf2::BitVector v(codomain.size());
    for (auto const& m : e.support()) {
      auto i = codomain.index_of(m);
      if (!i) {
        throw DimensionError("monomial " + to_string(m) + " is outside the codomain");
      }
      v.set(*i);
    }
    return v;
  }

  RingElement ColumnSystem::decode(gf2::BitVector const& v) const {
    std::vector<ReducedMonomial> ms;
    for (auto i : v.ones()) {
      ms.push_back(codomain[i]);
    }
    return RingElement(std::move(ms));
  }

  bool ColumnSystem::representable(RingElement const& e) const {
    return std::all_of(e.support().begin(), e.support().end(), [this](auto const& m) {
      return codomain.index_of(m).has_value();
    });
  }

  ColumnSystem make_columns(std::vector<RingElement> const&     columns,
                            std::vector<ReducedMonomial> const& extra) {
    auto monomials = monomials_of(columns);
    monomials.insert(monomials.end(), extra.begin(), extra.end());
    ColumnSystem out{gf2::BasisIndex(std::move(monomials)), {}};
    out.matrix = gf2::BitMatrix(out.codomain.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (auto const& m : columns[c].support()) {
        out.matrix.set(*out.codomain.index_of(m), c);
      }
    }
    return out;
  }

  TruncatedOperator::TruncatedOperator(RingElement f, Side side, std::size_t bound)
      : f_(std::move(f)),
        side_(side),
        bound_(bound),
        domain_(gf2::BasisIndex::enumerate(bound)) {
    std::vector<RingElement> images;
    images.reserve(domain_.size());
    for (auto const& m : domain_.monomials()) {
      images.push_back(apply_side(f_, side_, RingElement(m)));
    }
    columns_ = make_columns(images, {ReducedMonomial::one()});
  }

  RingElement TruncatedOperator::decode_domain(gf2::BitVector const& v) const {
    std::vector<ReducedMonomial> ms;
    for (auto i : v.ones()) {
      ms.push_back(domain_[i]);
    }
    return RingElement(std::move(ms));
  }

  std::vector<RingElement> TruncatedOperator::kernel() const {
    std::vector<RingElement> out;
    for (auto const& v : gf2::kernel(columns_.matrix)) {
      out.push_back(decode_domain(v));
    }
    return out;
  }

  std::optional<RingElement> TruncatedOperator::preimage(RingElement const& target) const {
    if (!columns_.representable(target)) {
      return std::nullopt;
    }
    auto sol = gf2::solve(columns_.matrix, columns_.encode(target));
    if (!sol) {
      return std::nullopt;
    }
    return decode_domain(*sol);
  }

  std::vector<RingElement> right_annihilator(RingElement const& f, std::size_t L) {
    return TruncatedOperator(f, Side::left_mul, L).kernel();
  }

  std::vector<RingElement> left_annihilator(RingElement const& f, std::size_t L) {
    return TruncatedOperator(f, Side::right_mul, L).kernel();
  }

  unsigned annihilator_exponent(RingElement const& f) {
    if (f.is_zero()) {
      throw ZeroElementError("annihilator exponent of 0 is undefined");
    }
    if (!in_Ra(f)) {
      throw NotInRaError(to_string(f) + " is not in Ra");
    }
    auto k = std::numeric_limits<unsigned>::max();
    for (auto const& m : f.support()) {
      k = std::min(k, static_cast<unsigned>(m.exponent(0)));
    }
    return k;
  }

  std::optional<RingElement> solve_right_inverse(RingElement const& f, std::size_t L) {
    return TruncatedOperator(f, Side::left_mul, L).preimage(RingElement::one());
  }

  std::optional<RingElement> solve_sr_equation(RingElement const& f, std::size_t L) {
    if (f.is_zero()) {
      return RingElement::zero();
    }
    return TruncatedOperator(f * f, Side::right_mul, L).preimage(f);
  }

  std::vector<RingElement> truncated_left_multiples(RingElement const& t, std::size_t L) {
    std::vector<RingElement> out;
    auto const&              basis = monomials_up_to(L);
    out.reserve(basis.size());
    for (auto const& m : basis) {
      out.push_back(RingElement(m) * t);
    }
    return out;
  }

  std::vector<RingElement> cyclic_intersection(RingElement const& s,
                                               RingElement const& t,
                                               std::size_t        L) {
    return span_intersection(truncated_left_multiples(s, L),
                             truncated_left_multiples(t, L));
  }

  bool same_span(std::vector<RingElement> const& lhs,
                 std::vector<RingElement> const& rhs) {
    auto const p    = paired(lhs, rhs);
    auto const size = p.system.codomain.size();
    std::vector<gf2::BitVector> l, r;
    for (std::size_t c = 0; c < p.lhs.cols(); ++c) {
      l.push_back(p.lhs.column(c));
    }
    for (std::size_t c = 0; c < p.rhs.cols(); ++c) {
      r.push_back(p.rhs.column(c));
    }
    return gf2::same_span(l, r, size);
  }

  std::vector<RingElement> span_intersection(std::vector<RingElement> const& lhs,
                                             std::vector<RingElement> const& rhs) {
    if (lhs.empty() || rhs.empty()) {
      return {};
    }
    auto const               p = paired(lhs, rhs);
    std::vector<RingElement> out;
    for (auto const& v : gf2::image_intersection(p.lhs, p.rhs)) {
      out.push_back(p.system.decode(v));
    }
    return out;
  }

  McCoyReport mccoy_check(RingElement const& f, RingElement const& g, std::size_t L) {
    McCoyReport report{L, {}, {}};
    {
      auto const k1 = right_annihilator(f, L);
      auto const k2 = right_annihilator(g, L);
      report.right  = mccoy_side(
          k1, k2, multiply_all(k1, g, Side::left_mul), multiply_all(k2, f, Side::left_mul));
    }
    {
      auto const k1 = left_annihilator(f, L);
      auto const k2 = left_annihilator(g, L);
      report.left   = mccoy_side(
          k1, k2, multiply_all(k1, g, Side::right_mul), multiply_all(k2, f, Side::right_mul));
    }
    return report;
  }

  std::vector<std::vector<RingElement>> stacked_dependencies(RingElement const& s,
                                                             RingElement const& t,
                                                             std::size_t        count,
                                                             std::size_t        L) {
    auto const&              basis = monomials_up_to(L);
    std::vector<RingElement> spanning;
    spanning.reserve(count * basis.size());
    RingElement generator = s;
    for (std::size_t k = 0; k < count; ++k) {
      for (auto const& m : basis) {
        spanning.push_back(RingElement(m) * generator);
      }
      generator *= t;
    }
    auto const system = make_columns(spanning);
    auto const rows   = system.codomain.size();

    // Echelon basis of each module, then all of them side by side.
    std::vector<std::vector<gf2::BitVector>> module_bases(count);
    std::vector<gf2::BitVector>              columns;
    std::vector<std::size_t>                 owner;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<gf2::BitVector> vs;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        vs.push_back(system.matrix.column(k * basis.size() + i));
      }
      module_bases[k] = gf2::span_basis(vs);
      for (auto const& v : module_bases[k]) {
        if (!v.is_zero()) {
          columns.push_back(v);
          owner.push_back(k);
        }
      }
    }

    std::vector<std::vector<RingElement>> out;
    for (auto const& v : gf2::kernel(gf2::BitMatrix::from_columns(rows, columns))) {
      std::vector<gf2::BitVector> parts(count, gf2::BitVector(rows));
      for (auto i : v.ones()) {
        parts[owner[i]] ^= columns[i];
      }
      std::vector<RingElement> tuple;
      for (auto const& p : parts) {
        tuple.push_back(system.decode(p));
      }
      out.push_back(std::move(tuple));
    }
    return out;
  }

}  // namespace dk::solver
