#include "dk/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "dk/errors.hpp"

namespace dk::gf2 {

  namespace {

    constexpr std::size_t words_for(std::size_t bits) {
      return (bits + 63) / 64;
    }

    // Row store for the transposed elimination: every row holds `bits`
    // payload bits followed by `tag_bits` bookkeeping bits that record which
    // input rows were combined into it.
    class Workspace {
     public:
      Workspace(std::size_t rows, std::size_t bits, std::size_t tag_bits)
          : rows_(rows),
            bits_(bits),
            payload_words_(words_for(bits)),
            stride_(payload_words_ + words_for(tag_bits)),
            data_(rows * stride_, 0),
            lead_(rows, bits) {
        if (tag_bits > 0) {
          for (std::size_t r = 0; r < rows; ++r) {
            row(r)[payload_words_ + r / 64] |= std::uint64_t{1} << (r % 64);
          }
        }
      }

      [[nodiscard]] std::size_t rows() const noexcept {
        return rows_;
      }
      [[nodiscard]] std::size_t bits() const noexcept {
        return bits_;
      }
      std::uint64_t* row(std::size_t r) noexcept {
        return data_.data() + r * stride_;
      }

      void set(std::size_t r, std::size_t bit) noexcept {
        row(r)[bit / 64] |= std::uint64_t{1} << (bit % 64);
      }

      [[nodiscard]] bool test(std::size_t r, std::size_t bit) noexcept {
        return (row(r)[bit / 64] >> (bit % 64)) & 1u;
      }

      // Lowest set payload bit at or above word `from`, or bits() if none.
      std::size_t find_lead(std::size_t r, std::size_t from) noexcept {
        auto const* p = row(r);
        for (auto w = from; w < payload_words_; ++w) {
          if (p[w] != 0) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(p[w]));
          }
        }
        return bits_;
      }

      // Forward elimination.  Afterwards rows [0, rank) have strictly
      // increasing leads and rows [rank, rows) have a zero payload.
      std::size_t eliminate(bool parallel) {
        for (std::size_t r = 0; r < rows_; ++r) {
          lead_[r] = find_lead(r, 0);
        }
        std::size_t rank = 0;
        while (rank < rows_) {
          auto best = rank;
          for (auto r = rank + 1; r < rows_; ++r) {
            if (lead_[r] < lead_[best]) {
              best = r;
            }
          }
          if (lead_[best] == bits_) {
            break;
          }
          if (best != rank) {
            std::swap_ranges(row(best), row(best) + stride_, row(rank));
            std::swap(lead_[best], lead_[rank]);
          }
          auto const           c     = lead_[rank];
          auto const           from  = c / 64;
          auto const*          pivot = row(rank);
          auto const           last  = static_cast<std::ptrdiff_t>(rows_);
          std::uint64_t* const base  = data_.data();
          auto const           step  = stride_;
          auto const           words = payload_words_;
#pragma omp parallel for schedule(static) if (parallel && last - static_cast<std::ptrdiff_t>(rank) > 512)
          for (auto r = static_cast<std::ptrdiff_t>(rank + 1); r < last; ++r) {
            if (lead_[r] != c) {
              continue;
            }
            auto* p = base + static_cast<std::size_t>(r) * step;
            for (auto w = from; w < step; ++w) {
              p[w] ^= pivot[w];
            }
            std::size_t next = bits_;
            for (auto w = from; w < words; ++w) {
              if (p[w] != 0) {
                next = w * 64 + static_cast<std::size_t>(std::countr_zero(p[w]));
                break;
              }
            }
            lead_[r] = next;
          }
          ++rank;
        }
        return rank;
      }

      [[nodiscard]] std::size_t lead(std::size_t r) const noexcept {
        return lead_[r];
      }

      BitVector tag(std::size_t r, std::size_t tag_bits) {
        BitVector v(tag_bits);
        auto      out = v.words();
        std::copy_n(row(r) + payload_words_, out.size(), out.begin());
        return v;
      }

      BitVector payload(std::size_t r) {
        BitVector v(bits_);
        auto      out = v.words();
        std::copy_n(row(r), out.size(), out.begin());
        return v;
      }

     private:
      std::size_t                rows_;
      std::size_t                bits_;
      std::size_t                payload_words_;
      std::size_t                stride_;
      std::vector<std::uint64_t> data_;
      std::vector<std::size_t>   lead_;
    };

    // Columns of m become workspace rows.
    Workspace transposed_workspace(BitMatrix const& m, bool track) {
      Workspace ws(m.cols(), m.rows(), track ? m.cols() : 0);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        auto const row = m.row(r);
        for (std::size_t w = 0; w < row.size(); ++w) {
          auto bits = row[w];
          while (bits != 0) {
            auto const c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            ws.set(c, r);
            bits &= bits - 1;
          }
        }
      }
      return ws;
    }

    ////////////////////////////////////////////////////////////////////////
    // Serial reference: textbook reduced row echelon form of [M | rhs].
    ////////////////////////////////////////////////////////////////////////

    struct Rref {
      BitMatrix                matrix;
      std::vector<std::size_t> pivot_cols;
    };

    Rref rref(BitMatrix m) {
      std::vector<std::size_t> pivots;
      std::size_t              r = 0;
      for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.test(p, c)) {
          ++p;
        }
        if (p == m.rows()) {
          continue;
        }
        if (p != r) {
          for (std::size_t k = 0; k < m.cols(); ++k) {
            bool const t = m.test(p, k);
            m.set(p, k, m.test(r, k));
            m.set(r, k, t);
          }
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (i != r && m.test(i, c)) {
            for (std::size_t k = 0; k < m.cols(); ++k) {
              if (m.test(r, k)) {
                m.flip(i, k);
              }
            }
          }
        }
        pivots.push_back(c);
        ++r;
      }
      return {std::move(m), std::move(pivots)};
    }

    std::vector<BitVector> kernel_serial(BitMatrix const& m) {
      auto const [reduced, pivots] = rref(m);
      std::vector<bool> is_pivot(m.cols(), false);
      for (auto c : pivots) {
        is_pivot[c] = true;
      }
      std::vector<BitVector> out;
      for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
          continue;
        }
        auto v = BitVector::unit(m.cols(), f);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
          if (reduced.test(i, f)) {
            v.set(pivots[i]);
          }
        }
        out.push_back(std::move(v));
      }
      return out;
    }

    std::optional<BitVector> solve_serial(BitMatrix const& m, BitVector const& rhs) {
      BitMatrix aug(m.rows(), m.cols() + 1);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          aug.set(r, c, m.test(r, c));
        }
        aug.set(r, m.cols(), rhs.test(r));
      }
      auto const [reduced, pivots] = rref(std::move(aug));
      BitVector sol(m.cols());
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols()) {
          return std::nullopt;
        }
        sol.set(pivots[i], reduced.test(i, m.cols()));
      }
      return sol;
    }

  }  // namespace

  bool BitVector::is_zero() const noexcept {
    return std::all_of(
        words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  std::size_t BitVector::count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) {
      n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
  }

  std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  BitVector& BitVector::operator^=(BitVector const& rhs) {
    if (rhs.size_ != size_) {
      throw DimensionError("bit vector sizes differ");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] ^= rhs.words_[w];
    }
    return *this;
  }

  BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i);
    }
    return m;
  }

  BitMatrix BitMatrix::from_strings(std::vector<std::string> const& rows) {
    std::size_t const cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix         m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) {
        throw DimensionError("ragged matrix literal");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m.set(r, c, rows[r][c] == '1');
      }
    }
    return m;
  }

  BitMatrix BitMatrix::from_columns(std::size_t                   rows,
                                    std::vector<BitVector> const& columns) {
    BitMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) {
        throw DimensionError("column length differs from the row count");
      }
      for (auto r : columns[c].ones()) {
        m.set(r, c);
      }
    }
    return m;
  }

  BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      auto const rw = row(r);
      for (std::size_t w = 0; w < rw.size(); ++w) {
        auto bits = rw[w];
        while (bits != 0) {
          t.set(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)), r);
          bits &= bits - 1;
        }
      }
    }
    return t;
  }

  BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (test(r, c)) {
        v.set(r);
      }
    }
    return v;
  }

  BitVector BitMatrix::apply(BitVector const& v) const {
    if (v.size() != cols_) {
      throw DimensionError("vector length " + std::to_string(v.size())
                           + " differs from column count "
                           + std::to_string(cols_));
    }
    BitVector  out(rows_);
    auto const vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
      auto const    rw     = row(r);
      std::uint64_t parity = 0;
      for (std::size_t w = 0; w < stride_; ++w) {
        parity ^= rw[w] & vw[w];
      }
      if (std::popcount(parity) % 2 == 1) {
        out.set(r);
      }
    }
    return out;
  }

  BitMatrix BitMatrix::concat_columns(BitMatrix const& rhs) const {
    if (rhs.rows_ != rows_) {
      throw DimensionError("row counts differ: " + std::to_string(rows_)
                           + " vs " + std::to_string(rhs.rows_));
    }
    BitMatrix out(rows_, cols_ + rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (test(r, c)) {
          out.set(r, c);
        }
      }
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        if (rhs.test(r, c)) {
          out.set(r, cols_ + c);
        }
      }
    }
    return out;
  }

  std::vector<BitVector> kernel(BitMatrix const& m, Exec exec) {
    if (exec == Exec::serial) {
      return kernel_serial(m);
    }
    auto       ws   = transposed_workspace(m, true);
    auto const rank = ws.eliminate(true);
    std::vector<BitVector> out;
    out.reserve(m.cols() - rank);
    for (auto r = rank; r < m.cols(); ++r) {
      out.push_back(ws.tag(r, m.cols()));
    }
    return out;
  }

  std::optional<BitVector> solve(BitMatrix const& m,
                                 BitVector const& rhs,
                                 Exec             exec) {
    if (rhs.size() != m.rows()) {
      throw DimensionError("right-hand side has length "
                           + std::to_string(rhs.size()) + ", expected "
                           + std::to_string(m.rows()));
    }
    if (exec == Exec::serial) {
      return solve_serial(m, rhs);
    }
    auto       ws   = transposed_workspace(m, true);
    auto const rank = ws.eliminate(true);
    BitVector  residual = rhs;
    BitVector  sol(m.cols());
    for (std::size_t k = 0; k < rank; ++k) {
      if (residual.test(ws.lead(k))) {
        residual ^= ws.payload(k);
        sol ^= ws.tag(k, m.cols());
      }
    }
    if (!residual.is_zero()) {
      return std::nullopt;
    }
    return sol;
  }

  std::size_t rank(BitMatrix const& m, Exec exec) {
    if (exec == Exec::serial) {
      return rref(m).pivot_cols.size();
    }
    auto ws = transposed_workspace(m, false);
    return ws.eliminate(true);
  }

  std::vector<BitVector> image_intersection(BitMatrix const& m1,
                                            BitMatrix const& m2,
                                            Exec             exec) {
    auto const             joint = m1.concat_columns(m2);
    std::vector<BitVector> images;
    for (auto const& v : kernel(joint, exec)) {
      BitVector u(m1.cols());
      for (std::size_t c = 0; c < m1.cols(); ++c) {
        u.set(c, v.test(c));
      }
      images.push_back(m1.apply(u));
    }
    return span_basis(images);
  }

  std::vector<BitVector> span_basis(std::vector<BitVector> const& vectors) {
    if (vectors.empty()) {
      return {};
    }
    auto const size = vectors.front().size();
    Workspace  ws(vectors.size(), size, 0);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      if (vectors[r].size() != size) {
        throw DimensionError("span_basis: vector sizes differ");
      }
      for (auto i : vectors[r].ones()) {
        ws.set(r, i);
      }
    }
    auto const             rank = ws.eliminate(false);
    std::vector<BitVector> out;
    out.reserve(rank);
    for (std::size_t r = 0; r < rank; ++r) {
      out.push_back(ws.payload(r));
    }
    return out;
  }

  bool same_span(std::vector<BitVector> const& lhs,
                 std::vector<BitVector> const& rhs,
                 std::size_t                   size) {
    auto rank_of = [size](std::vector<BitVector> const& vs) {
      return span_basis(vs.empty() ? std::vector<BitVector>{BitVector(size)} : vs)
          .size();
    };
    std::vector<BitVector> both = lhs;
    both.insert(both.end(), rhs.begin(), rhs.end());
    auto const r = rank_of(both);
    return r == rank_of(lhs) && r == rank_of(rhs);
  }

  BasisIndex::BasisIndex(std::vector<ReducedMonomial> monomials)
      : monomials_(std::move(monomials)) {
    std::sort(monomials_.begin(), monomials_.end(), Precedes{});
    monomials_.erase(std::unique(monomials_.begin(), monomials_.end()),
                     monomials_.end());
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
      index_.emplace(monomials_[i], i);
    }
  }

  BasisIndex BasisIndex::enumerate(std::size_t max_len) {
    return BasisIndex(monomials_up_to(max_len));
  }

  std::optional<std::size_t> BasisIndex::index_of(ReducedMonomial const& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

}  // namespace dk::gf2
