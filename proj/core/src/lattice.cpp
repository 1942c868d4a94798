#include "knotslice/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace knotslice {

Embedding::Embedding(IntMatrix images) : images_(std::move(images)) {
  if (images_.rows() != images_.cols())
    throw Error(ErrorCode::invalid_embedding, "embedding must have ambient rank equal to lattice rank");
  if (images_.rows() > 0 && determinant(images_) == 0)
    throw Error(ErrorCode::invalid_embedding, "embedding image is not of finite index");
}

Integer Embedding::index() const {
  Integer d = determinant(images_);
  return d < 0 ? Integer(-d) : d;
}

bool is_perfect_square(const Integer& x) {
  if (x < 0) return false;
  const Integer r = boost::multiprecision::sqrt(x);
  return r * r == x;
}

IntMatrix canonical_embedding_matrix(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // rows[i] is the current row vector; we sort rows block by block.
  std::vector<IntVector> rows;
  rows.reserve(m);
  for (std::size_t r = 0; r < m; ++r) rows.push_back(a.row(r));
  // block_start marks the first row of each contiguous block.
  std::vector<char> block_start(m, 0);
  if (m) block_start[0] = 1;
  std::vector<char> free_sign(m, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < m; ++r)
      if (free_sign[r] && rows[r][j] < 0)
        for (auto& x : rows[r]) x = -x;
    std::size_t b = 0;
    while (b < m) {
      std::size_t e = b + 1;
      while (e < m && !block_start[e]) ++e;
      std::stable_sort(rows.begin() + static_cast<std::ptrdiff_t>(b), rows.begin() + static_cast<std::ptrdiff_t>(e),
                       [j](const IntVector& x, const IntVector& y) { return x[j] > y[j]; });
      for (std::size_t r = b + 1; r < e; ++r)
        if (rows[r][j] != rows[r - 1][j]) block_start[r] = 1;
      b = e;
    }
    for (std::size_t r = 0; r < m; ++r)
      if (rows[r][j] != 0) free_sign[r] = 0;
  }
  IntMatrix out(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = rows[r][c];
  return out;
}

namespace {

// Depth-first search for canonical embedding matrices, column by column and
// within a column row by row.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const IntMatrix& gram, std::size_t limit)
      : gram_(gram), n_(gram.rows()), limit_(limit), cols_(n_, IntVector(n_, 0)) {}

  std::vector<Embedding> run() {
    block_start_.assign(n_, 0);
    if (n_) block_start_[0] = 1;
    free_sign_.assign(n_, 1);
    column(0);
    return std::move(found_);
  }

 private:
  bool done() const { return limit_ != 0 && found_.size() >= limit_; }

  void column(std::size_t j) {
    if (done()) return;
    if (j == n_) {
      found_.emplace_back(IntMatrix::from_columns(cols_, n_));
      return;
    }
    residual_.assign(j, 0);
    tail_norm_.assign(j, 0);
    for (std::size_t i = 0; i < j; ++i) {
      residual_[i] = gram_(i, j);
      std::int64_t s = 0;
      for (std::size_t r = 0; r < n_; ++r) s += cols_[i][r] * cols_[i][r];
      tail_norm_[i] = s;
    }
    entry(j, 0, gram_(j, j));
  }

  void entry(std::size_t j, std::size_t r, std::int64_t remaining) {
    if (done()) return;
    if (r == n_) {
      if (remaining != 0) return;
      for (std::size_t i = 0; i < j; ++i)
        if (residual_[i] != 0) return;
      // Refine blocks for the next column, then recurse; restore after.
      const auto saved_blocks = block_start_;
      const auto saved_free = free_sign_;
      const auto saved_residual = residual_;
      const auto saved_tail = tail_norm_;
      for (std::size_t k = 1; k < n_; ++k)
        if (!block_start_[k] && cols_[j][k] != cols_[j][k - 1]) block_start_[k] = 1;
      for (std::size_t k = 0; k < n_; ++k)
        if (cols_[j][k] != 0) free_sign_[k] = 0;
      column(j + 1);
      block_start_ = saved_blocks;
      free_sign_ = saved_free;
      residual_ = saved_residual;
      tail_norm_ = saved_tail;
      return;
    }
    auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(remaining)));
    while (bound * bound > remaining) --bound;
    while ((bound + 1) * (bound + 1) <= remaining) ++bound;
    const std::int64_t hi = block_start_[r] ? bound : std::min(bound, cols_[j][r - 1]);
    const std::int64_t lo = free_sign_[r] ? 0 : -bound;
    for (std::int64_t v = hi; v >= lo; --v) {
      cols_[j][r] = v;
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) {
        const std::int64_t xi = cols_[i][r];
        residual_[i] -= v * xi;
        tail_norm_[i] -= xi * xi;
      }
      const std::int64_t rem = remaining - v * v;
      for (std::size_t i = 0; i < j && ok; ++i) {
        // Cauchy-Schwarz on the unassigned rows.
        const double lhs = static_cast<double>(residual_[i]) * static_cast<double>(residual_[i]);
        const double rhs = static_cast<double>(rem) * static_cast<double>(tail_norm_[i]);
        if (lhs > rhs + 0.5) ok = false;
      }
      if (ok) entry(j, r + 1, rem);
      for (std::size_t i = 0; i < j; ++i) {
        const std::int64_t xi = cols_[i][r];
        residual_[i] += v * xi;
        tail_norm_[i] += xi * xi;
      }
      if (done()) break;
    }
    cols_[j][r] = 0;
  }

  const IntMatrix& gram_;
  std::size_t n_;
  std::size_t limit_;
  std::vector<IntVector> cols_;
  std::vector<char> block_start_;
  std::vector<char> free_sign_;
  std::vector<std::int64_t> residual_;
  std::vector<std::int64_t> tail_norm_;
  std::vector<Embedding> found_;
};

}  // namespace

std::vector<Embedding> enumerate_embeddings(const Lattice& lattice, std::size_t limit) {
  if (!is_positive_definite(lattice.gram)) throw Error(ErrorCode::not_definite, "lattice is not positive definite");
  if (lattice.rank() == 0) return {Embedding(IntMatrix())};
  if (!is_perfect_square(determinant(lattice.gram))) return {};
  return EmbeddingSearch(lattice.gram, limit).run();
}

bool has_embedding(const Lattice& lattice) { return !enumerate_embeddings(lattice, 1).empty(); }

IntVector coset_key(const Embedding& e, const IntVector& v) {
  const std::size_t m = e.ambient_rank();
  const Integer d = e.index();
  const auto adj = adjugate(e.matrix());
  IntVector key(m);
  for (std::size_t i = 0; i < m; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < m; ++j) s += adj[i][j] * v[j];
    s %= d;
    if (s < 0) s += d;
    key[i] = static_cast<std::int64_t>(s);
  }
  return key;
}

std::vector<IntVector> coset_representatives(const Embedding& e) {
  const std::size_t m = e.ambient_rank();
  if (m == 0) return {IntVector{}};
  const IntMatrix h = hermite_normal_form(e.matrix());
  std::vector<IntVector> reps;
  IntVector v(m, 0);
  for (;;) {
    reps.push_back(v);
    std::size_t i = 0;
    while (i < m) {
      if (++v[i] < h(i, i)) break;
      v[i] = 0;
      ++i;
    }
    if (i == m) break;
  }
  return reps;
}

CosetReport greene_jabuka(const Embedding& e) {
  CosetReport report;
  report.index = e.index();
  const std::size_t m = e.ambient_rank();
  if (m == 0) {
    report.cosets_covered = true;
    return report;
  }
  if (m >= 30) throw Error(ErrorCode::not_computable, "ambient rank too large for {0,1}^m enumeration");
  const auto adj = adjugate(e.matrix());
  const Integer d = report.index;
  auto key = [&](const IntVector& v) {
    IntVector k(m);
    for (std::size_t i = 0; i < m; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < m; ++j)
        if (v[j]) s += adj[i][j] * v[j];
      s %= d;
      if (s < 0) s += d;
      k[i] = static_cast<std::int64_t>(s);
    }
    return k;
  };
  std::set<IntVector> covered;
  IntVector v(m, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t i = 0; i < m; ++i) v[i] = static_cast<std::int64_t>((mask >> i) & 1u);
    covered.insert(key(v));
    if (Integer(covered.size()) == d) break;
  }
  report.cosets_covered = Integer(covered.size()) == d;
  if (!report.cosets_covered) {
    for (const auto& rep : coset_representatives(e)) {
      if (!covered.contains(key(rep))) {
        report.witness_missing = rep;
        break;
      }
    }
  }
  return report;
}

std::vector<IntVector> extend(const Embedding& e, const IntVector& pairings, std::optional<std::int64_t> self_pairing) {
  const std::size_t m = e.ambient_rank();
  if (pairings.size() != e.rank()) throw Error(ErrorCode::invalid_embedding, "pairing vector length mismatch");
  if (m == 0) {
    if (self_pairing && *self_pairing != 0) return {};
    return {IntVector{}};
  }
  const auto x = solve_rational(e.matrix().transposed(), pairings);
  if (!x) return {};
  IntVector out(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (denominator((*x)[i]) != 1) return {};
    out[i] = static_cast<std::int64_t>(numerator((*x)[i]));
  }
  if (self_pairing && dot(out, out) != *self_pairing) return {};
  return {out};
}

}  // namespace knotslice
