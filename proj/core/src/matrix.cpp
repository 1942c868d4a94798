#include "knotslice/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "knotslice/error.hpp"

namespace knotslice {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_code: return "MalformedCode";
    case ErrorCode::non_realizable: return "NonRealizable";
    case ErrorCode::non_planar: return "NonPlanar";
    case ErrorCode::disconnected: return "Disconnected";
    case ErrorCode::not_alternating: return "NotAlternating";
    case ErrorCode::not_definite: return "NotDefinite";
    case ErrorCode::inapplicable: return "Inapplicable";
    case ErrorCode::invalid_band: return "InvalidBand";
    case ErrorCode::not_computable: return "NotComputable";
    case ErrorCode::not_a_knot: return "NotAKnot";
    case ErrorCode::invalid_embedding: return "InvalidEmbedding";
  }
  return "Unknown";
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("IntMatrix: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix n = *this;
  for (auto& x : n.data_) x = -x;
  return n;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& indices) const {
  IntMatrix s(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) s(i, j) = (*this)(indices[i], indices[j]);
  return s;
}

std::string IntMatrix::to_text() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c);
    }
    os << '\n';
  }
  return os.str();
}

std::string IntMatrix::to_array_text() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_array_text(); }

std::int64_t dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

using BigMatrix = std::vector<std::vector<Integer>>;

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix b(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) b[r][c] = m(r, c);
  return b;
}

// Bareiss elimination on a copy; returns the rank and, for square input,
// the determinant (0 when singular).
struct Elimination {
  std::size_t rank = 0;
  Integer det = 1;
};

Elimination bareiss(BigMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  Elimination out;
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  out.rank = r;
  if (rows == cols) {
    out.det = (r == rows) ? (rows == 0 ? Integer(1) : Integer(sign) * a[rows - 1][cols - 1]) : Integer(0);
  }
  return out;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (m.rows() == 0) return 1;
  return bareiss(to_big(m)).det;
}

std::vector<Integer> leading_minors(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("leading_minors: matrix not square");
  // Bareiss without pivoting produces the leading minors on the diagonal as
  // long as none vanishes; on a zero we fall back to direct computation.
  const std::size_t n = m.rows();
  std::vector<Integer> minors;
  minors.reserve(n);
  BigMatrix a = to_big(m);
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      for (std::size_t j = k; j < n; ++j) {
        std::vector<std::size_t> idx(j + 1);
        for (std::size_t t = 0; t <= j; ++t) idx[t] = t;
        minors.push_back(determinant(m.submatrix(idx)));
      }
      return minors;
    }
    minors.push_back(a[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return minors;
}

bool is_positive_definite(const IntMatrix& m) {
  if (!m.is_symmetric()) return false;
  for (const auto& d : leading_minors(m))
    if (d <= 0) return false;
  return true;
}

std::size_t rank(const IntMatrix& m) { return m.empty() ? 0 : bareiss(to_big(m)).rank; }

std::vector<std::vector<Integer>> adjugate(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: matrix not square");
  const std::size_t n = m.rows();
  std::vector<std::vector<Integer>> adj(n, std::vector<Integer>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor C_ij, adj(j,i) = C_ij
      BigMatrix minor;
      minor.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Integer> row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.emplace_back(m(r, c));
        minor.push_back(std::move(row));
      }
      Integer cof = bareiss(std::move(minor)).det;
      if ((i + j) % 2) cof = -cof;
      adj[j][i] = cof;
    }
  }
  return adj;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& m, const IntVector& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw std::invalid_argument("solve_rational: shape mismatch");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
    a[r][n] = rhs[r];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("hermite_normal_form: matrix not square");
  BigMatrix h = to_big(m);  // h[row][col]; we operate on columns
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t r = 0; r < n; ++r) h[r][dst] -= f * h[r][src];
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < n; ++r) std::swap(h[r][a], h[r][b]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    // Euclid on row i over columns i..n-1 until only column i is nonzero.
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = i; j < n; ++j)
        if (h[i][j] != 0 && (best == n || abs(h[i][j]) < abs(h[i][best]))) best = j;
      if (best == n) throw Error(ErrorCode::not_computable, "hermite_normal_form: singular matrix");
      if (best != i) swap_cols(i, best);
      bool done = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (h[i][j] == 0) continue;
        Integer q = h[i][j] / h[i][i];
        col_op(j, i, q);
        if (h[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (h[i][i] < 0)
      for (std::size_t r = 0; r < n; ++r) h[r][i] = -h[r][i];
    for (std::size_t j = 0; j < i; ++j) {
      Integer q = h[i][j] / h[i][i];
      if (h[i][j] - q * h[i][i] < 0) q -= 1;
      col_op(j, i, q);
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = static_cast<std::int64_t>(h[r][c]);
  return out;
}

}  // namespace knotslice
