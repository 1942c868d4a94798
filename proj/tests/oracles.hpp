#pragma once

// Brute-force reference implementations used to check the library.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "knotslice/lattice.hpp"
#include "knotslice/matrix.hpp"

namespace knotslice::oracle {

using MatrixKey = std::vector<std::int64_t>;

inline MatrixKey key_of(const IntMatrix& m) {
  MatrixKey k;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j));
  return k;
}

// Every vector of Z^n with the given squared norm, by scanning a box.
inline std::vector<IntVector> vectors_of_norm(std::size_t n, std::int64_t norm) {
  const auto b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(norm))) + 1;
  std::vector<IntVector> out;
  IntVector v(n, -b);
  for (;;) {
    if (dot(v, v) == norm) out.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == b) v[i++] = -b;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

// All square A (as row-major keys) with A^T A = gram, by trying every
// combination of columns of the right norms.
inline std::set<MatrixKey> all_embeddings(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  std::vector<std::vector<IntVector>> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = vectors_of_norm(n, gram(i, i));
  std::set<MatrixKey> out;
  std::vector<IntVector> cols;
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      out.insert(key_of(IntMatrix::from_columns(cols, n)));
      return;
    }
    for (const auto& v : pool[j]) {
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) ok = dot(cols[i], v) == gram(i, j);
      if (!ok) continue;
      cols.push_back(v);
      self(self, j + 1);
      cols.pop_back();
    }
  };
  if (n == 0) {
    out.insert({});
    return out;
  }
  rec(rec, 0);
  return out;
}

// Images of A under every signed permutation of the coordinates.
inline std::set<MatrixKey> orbit(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::set<MatrixKey> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::size_t signs = 0; signs < (std::size_t{1} << n); ++signs) {
      IntMatrix b(n, a.cols());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
          b(i, j) = ((signs >> i) & 1 ? -1 : 1) * a(perm[i], j);
      out.insert(key_of(b));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// adj(A) v mod |det A|: equal exactly when the two vectors differ by an
// element of A Z^m.
struct CosetOracle {
  std::vector<std::vector<Integer>> adj;
  Integer det;

  explicit CosetOracle(const IntMatrix& a) : adj(adjugate(a)), det(abs(determinant(a))) {}

  std::vector<Integer> key(const IntVector& v) const {
    std::vector<Integer> k(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += adj[i][j] * v[j];
      s %= det;
      if (s < 0) s += det;
      k[i] = s;
    }
    return k;
  }

  // Size of Z^m / A Z^m by closing {0} under adding unit vectors; the walk
  // stops because there are finitely many keys.
  std::size_t count() const {
    const std::size_t m = adj.size();
    std::set<std::vector<Integer>> seen;
    std::vector<IntVector> frontier{IntVector(m, 0)};
    seen.insert(key(frontier[0]));
    while (!frontier.empty()) {
      const IntVector v = frontier.back();
      frontier.pop_back();
      for (std::size_t i = 0; i < m; ++i) {
        IntVector w = v;
        ++w[i];
        if (seen.insert(key(w)).second) frontier.push_back(w);
      }
    }
    return seen.size();
  }

  // Whether the 0/1 vectors meet every coset.
  bool cube_covers() const {
    const std::size_t m = adj.size();
    std::set<std::vector<Integer>> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      IntVector v(m);
      for (std::size_t i = 0; i < m; ++i) v[i] = (mask >> i) & 1;
      seen.insert(key(v));
    }
    return Integer(seen.size()) == det;
  }
};

// Solutions of A^T x = c with x.x = self, scanning the norm ball.
inline std::set<IntVector> extensions(const IntMatrix& a, const IntVector& c, std::int64_t self) {
  std::set<IntVector> out;
  if (self < 0) return out;
  for (const auto& x : vectors_of_norm(a.rows(), self)) {
    bool ok = true;
    for (std::size_t j = 0; j < a.cols() && ok; ++j) ok = dot(a.column(j), x) == c[j];
    if (ok) out.insert(x);
  }
  return out;
}

}  // namespace knotslice::oracle
