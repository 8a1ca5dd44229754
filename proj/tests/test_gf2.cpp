#include <doctest.h>

#include <random>

#include "dk/errors.hpp"
#include "dk/gf2.hpp"
#include "oracle.hpp"

using namespace dk::gf2;
using dk::Exec;

namespace {

  BitMatrix random_matrix(std::size_t rows, std::size_t cols, double density, std::uint64_t seed) {
    std::mt19937_64                  rng(seed);
    std::bernoulli_distribution      bit(density);
    BitMatrix                        m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        m.set(r, c, bit(rng));
      }
    }
    return m;
  }

  std::vector<std::vector<int>> rows_of(BitMatrix const& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        out[r][c] = m.test(r, c) ? 1 : 0;
      }
    }
    return out;
  }

  std::vector<std::vector<int>> rows_of(std::vector<BitVector> const& vs) {
    std::vector<std::vector<int>> out;
    for (auto const& v : vs) {
      std::vector<int> row(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        row[i] = v.test(i) ? 1 : 0;
      }
      out.push_back(row);
    }
    return out;
  }

  // Kernel vectors are annihilated, independent and as many as rank-nullity says.
  void check_kernel(BitMatrix const& m, std::vector<BitVector> const& k) {
    for (auto const& v : k) {
      REQUIRE(m.apply(v).is_zero());
    }
    REQUIRE(oracle::rank(rows_of(k)) == k.size());
    REQUIRE(k.size() + oracle::rank(rows_of(m)) == m.cols());
  }

}  // namespace

TEST_CASE("bit vectors") {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 3);
  CHECK(v.ones() == std::vector<std::size_t>{0, 64, 129});
  v.flip(64);
  CHECK(v.count() == 2);
  CHECK((v ^ v).is_zero());
  CHECK_THROWS_AS(v ^= BitVector(3), dk::DimensionError);
}

TEST_CASE("kernel examples") {
  for (auto exec : {Exec::serial, Exec::parallel}) {
    CHECK(kernel(BitMatrix::identity(3), exec).empty());
    CHECK(kernel(BitMatrix(2, 3), exec).size() == 3);
    auto const k = kernel(BitMatrix::from_strings({"11", "00"}), exec);
    REQUIRE(k.size() == 1);
    CHECK(k[0].ones() == std::vector<std::size_t>{0, 1});
  }
}

TEST_CASE("solve examples") {
  for (auto exec : {Exec::serial, Exec::parallel}) {
    BitVector rhs(3);
    rhs.set(1);
    CHECK(solve(BitMatrix::identity(3), rhs, exec) == rhs);
    CHECK_FALSE(solve(BitMatrix(3, 3), rhs, exec).has_value());
    auto const m   = BitMatrix::from_strings({"11"});
    auto const one = BitVector::unit(1, 0);
    auto const sol = solve(m, one, exec);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == one);
    CHECK_THROWS_AS(solve(m, BitVector(2), exec), dk::DimensionError);
  }
}

TEST_CASE("image intersection examples") {
  auto const id = BitMatrix::identity(3);
  CHECK(image_intersection(id, id).size() == 3);
  auto const e1 = BitMatrix::from_strings({"1", "0"});
  auto const e2 = BitMatrix::from_strings({"0", "1"});
  CHECK(image_intersection(e1, e2).empty());
  auto const both = image_intersection(BitMatrix::from_strings({"11", "01"}), e2);
  REQUIRE(both.size() == 1);
  CHECK(both[0].ones() == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(image_intersection(id, e1), dk::DimensionError);
}

TEST_CASE("serial and parallel elimination agree with the oracle on random matrices") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    auto const rows = 1 + s % 37;
    auto const cols = 1 + (s * 7) % 71;
    auto const m    = random_matrix(rows, cols, s % 3 == 0 ? 0.1 : 0.4, s);
    auto const ks   = kernel(m, Exec::serial);
    auto const kp   = kernel(m, Exec::parallel);
    check_kernel(m, ks);
    check_kernel(m, kp);
    REQUIRE(oracle::rank(rows_of(ks)) == oracle::rank(rows_of(kp)));
    std::vector<BitVector> joint = ks;
    joint.insert(joint.end(), kp.begin(), kp.end());
    REQUIRE(oracle::rank(rows_of(joint)) == ks.size());
    REQUIRE(rank(m, Exec::serial) == rank(m, Exec::parallel));

    auto const x   = random_matrix(cols, 1, 0.5, s + 1000).column(0);
    auto const rhs = m.apply(x);
    for (auto exec : {Exec::serial, Exec::parallel}) {
      auto const sol = solve(m, rhs, exec);
      REQUIRE(sol.has_value());
      REQUIRE(m.apply(*sol) == rhs);
    }
  }
}

TEST_CASE("span helpers") {
  auto const a = BitVector::unit(4, 0);
  auto const b = BitVector::unit(4, 1);
  CHECK(span_basis({a, b, a ^ b}).size() == 2);
  CHECK(same_span({a, b}, {a ^ b, b}, 4));
  CHECK_FALSE(same_span({a}, {b}, 4));
  CHECK(same_span({}, {}, 4));
}

TEST_CASE("basis index") {
  CHECK(BasisIndex::enumerate(0).size() == 1);
  CHECK(BasisIndex::enumerate(2).size() == 7);
  CHECK(BasisIndex::enumerate(3).size() == 14);
  for (std::size_t L = 0; L <= 12; ++L) {
    REQUIRE(BasisIndex::enumerate(L).size() == oracle::reduced_words(L).size());
  }
  auto const idx = BasisIndex::enumerate(4);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    REQUIRE(idx.index_of(idx[i]) == i);
  }
  CHECK_FALSE(idx.index_of(dk::ReducedMonomial::x_power(5)).has_value());
}
