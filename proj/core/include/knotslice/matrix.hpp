#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotslice {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<std::int64_t>;

// Dense row-major integer matrix. Entries are small (crossing counts), so
// storage is int64; everything derived from them (minors, determinants,
// solutions) is computed in arbitrary precision.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntVector row(std::size_t r) const;
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& other) const = default;

  bool is_symmetric() const;
  // Principal submatrix on the given index list, in order.
  IntMatrix submatrix(const std::vector<std::size_t>& indices) const;

  // Row-major text, one row per line, entries separated by spaces.
  std::string to_text() const;
  // Nested JSON-style array text: [[a,b],[c,d]].
  std::string to_array_text() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

std::int64_t dot(const IntVector& a, const IntVector& b);

// Exact determinant by Bareiss fraction-free elimination. The empty matrix
// has determinant 1.
Integer determinant(const IntMatrix& m);

// Leading principal minors d_1..d_n (exact).
std::vector<Integer> leading_minors(const IntMatrix& m);

// Sylvester criterion with exact minors. Empty matrix counts as definite.
bool is_positive_definite(const IntMatrix& m);

// Rank over Q via fraction-free elimination.
std::size_t rank(const IntMatrix& m);

// Unique rational solution of m * x = rhs for square nonsingular m.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& m, const IntVector& rhs);

// Adjugate of a square matrix (exact), so that adj(m) * m = det(m) * I.
std::vector<std::vector<Integer>> adjugate(const IntMatrix& m);

// Column-style Hermite normal form of a nonsingular square matrix: returns
// lower-triangular H with positive diagonal and 0 <= H(i,j) < H(i,i) for
// j < i, such that the column lattices of m and H coincide.
IntMatrix hermite_normal_form(const IntMatrix& m);

}  // namespace knotslice
