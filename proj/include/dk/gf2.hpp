#pragma once

// Dense linear algebra over GF(2) and the truncated monomial basis that the
// annihilator and inverse solvers are written against.
//
// Two elimination kernels are provided.  Exec::parallel is the production
// path: it eliminates on the transpose, tracks the lowest set bit of every
// row and spreads the row updates of each pivot step over OpenMP threads.
// Exec::serial is a plain reduced-row-echelon implementation kept as the
// reference the parallel path is tested against.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dk/exec.hpp"
#include "dk/monomial.hpp"

namespace dk::gf2 {

  class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    static BitVector unit(std::size_t size, std::size_t i) {
      BitVector v(size);
      v.set(i);
      return v;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return size_;
    }
    [[nodiscard]] bool test(std::size_t i) const noexcept {
      return (words_[i / 64] >> (i % 64)) & 1u;
    }
    void set(std::size_t i, bool value = true) noexcept {
      auto const mask = std::uint64_t{1} << (i % 64);
      if (value) {
        words_[i / 64] |= mask;
      } else {
        words_[i / 64] &= ~mask;
      }
    }
    void flip(std::size_t i) noexcept {
      words_[i / 64] ^= std::uint64_t{1} << (i % 64);
    }

    [[nodiscard]] bool        is_zero() const noexcept;
    [[nodiscard]] std::size_t count() const noexcept;
    // Indices of the set bits, ascending.
    [[nodiscard]] std::vector<std::size_t> ones() const;

    BitVector& operator^=(BitVector const& rhs);
    friend BitVector operator^(BitVector lhs, BitVector const& rhs) {
      return lhs ^= rhs;
    }
    friend bool operator==(BitVector const&, BitVector const&) = default;

    [[nodiscard]] std::span<std::uint64_t const> words() const noexcept {
      return words_;
    }
    [[nodiscard]] std::span<std::uint64_t> words() noexcept {
      return words_;
    }

   private:
    std::size_t                size_ = 0;
    std::vector<std::uint64_t> words_;
  };

  class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows),
          cols_(cols),
          stride_((cols + 63) / 64),
          data_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n);
    // Parses rows written as strings of '0'/'1'; mainly for tests.
    static BitMatrix from_strings(std::vector<std::string> const& rows);
    static BitMatrix from_columns(std::size_t                   rows,
                                  std::vector<BitVector> const& columns);

    [[nodiscard]] std::size_t rows() const noexcept {
      return rows_;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return cols_;
    }
    [[nodiscard]] bool test(std::size_t r, std::size_t c) const noexcept {
      return (data_[r * stride_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept {
      auto&      w    = data_[r * stride_ + c / 64];
      auto const mask = std::uint64_t{1} << (c % 64);
      w               = value ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) noexcept {
      data_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64);
    }

    [[nodiscard]] std::span<std::uint64_t const> row(std::size_t r) const noexcept {
      return {data_.data() + r * stride_, stride_};
    }

    [[nodiscard]] BitMatrix transpose() const;
    [[nodiscard]] BitVector column(std::size_t c) const;
    // M v; throws DimensionError if v.size() != cols().
    [[nodiscard]] BitVector apply(BitVector const& v) const;
    // [*this | rhs]; throws DimensionError on a row-count mismatch.
    [[nodiscard]] BitMatrix concat_columns(BitMatrix const& rhs) const;

    friend bool operator==(BitMatrix const&, BitMatrix const&) = default;

   private:
    std::size_t                rows_   = 0;
    std::size_t                cols_   = 0;
    std::size_t                stride_ = 0;
    std::vector<std::uint64_t> data_;
  };

  using Exec = dk::Exec;

  // Basis of {v : M v = 0}; empty iff M is injective.
  std::vector<BitVector> kernel(BitMatrix const& m, Exec exec = Exec::parallel);

  // Some v with M v = rhs, or nullopt if the system is inconsistent.
  // Throws DimensionError if rhs.size() != m.rows().
  std::optional<BitVector> solve(BitMatrix const& m,
                                 BitVector const& rhs,
                                 Exec             exec = Exec::parallel);

  // Rank of the column space.
  std::size_t rank(BitMatrix const& m, Exec exec = Exec::parallel);

  // Basis of colspace(M1) ∩ colspace(M2), from the kernel of [M1 | M2].
  // Throws DimensionError if the row counts differ.
  std::vector<BitVector> image_intersection(BitMatrix const& m1,
                                            BitMatrix const& m2,
                                            Exec exec = Exec::parallel);

  // A linearly independent subset-span of the given vectors (echelon rows).
  // All vectors must share one size.
  std::vector<BitVector> span_basis(std::vector<BitVector> const& vectors);

  // Whether two lists of equal-size vectors span the same subspace.
  bool same_span(std::vector<BitVector> const& lhs,
                 std::vector<BitVector> const& rhs,
                 std::size_t                   size);

  // An ordered set of reduced monomials with a monomial <-> position
  // dictionary; positions follow ascending monomial order.
  class BasisIndex {
   public:
    BasisIndex() = default;
    // Sorts and deduplicates.
    explicit BasisIndex(std::vector<ReducedMonomial> monomials);

    // All reduced monomials of length <= max_len.
    static BasisIndex enumerate(std::size_t max_len);

    [[nodiscard]] std::size_t size() const noexcept {
      return monomials_.size();
    }
    [[nodiscard]] ReducedMonomial const& operator[](std::size_t i) const {
      return monomials_[i];
    }
    [[nodiscard]] std::vector<ReducedMonomial> const& monomials() const noexcept {
      return monomials_;
    }
    [[nodiscard]] std::optional<std::size_t> index_of(ReducedMonomial const& m) const;

   private:
    std::vector<ReducedMonomial>                                    monomials_;
    std::unordered_map<ReducedMonomial, std::size_t, MonomialHash> index_;
  };

}  // namespace dk::gf2
