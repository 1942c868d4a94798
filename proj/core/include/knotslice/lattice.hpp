#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "knotslice/goeritz.hpp"
#include "knotslice/matrix.hpp"

namespace knotslice {

// Finite-index embedding of a rank-n lattice into Z^n: the columns of the
// square matrix are the images of the basis vectors.
class Embedding {
 public:
  // Throws InvalidEmbedding unless the matrix is square and nonsingular.
  explicit Embedding(IntMatrix images);

  std::size_t ambient_rank() const noexcept { return images_.rows(); }
  std::size_t rank() const noexcept { return images_.cols(); }
  const IntMatrix& matrix() const noexcept { return images_; }
  IntVector image(std::size_t i) const { return images_.column(i); }
  IntMatrix gram() const { return images_.transposed() * images_; }
  // |det A|, the index of the image in Z^m.
  Integer index() const;

  bool operator==(const Embedding&) const = default;

 private:
  IntMatrix images_;
};

// Orbit representative of A under signed permutations of coordinates:
// column by column, entries are nonincreasing within each block of rows
// that agree on all earlier columns, and nonnegative in rows whose earlier
// entries are all zero.
IntMatrix canonical_embedding_matrix(const IntMatrix& a);

// All embeddings of a positive definite lattice into Z^rank, one canonical
// representative per orbit, in deterministic order. `limit` stops early.
// Throws NotDefinite.
std::vector<Embedding> enumerate_embeddings(const Lattice& lattice, std::size_t limit = 0);

bool is_perfect_square(const Integer& x);

// Square-determinant filter, then search. Throws NotDefinite.
bool has_embedding(const Lattice& lattice);

struct CosetReport {
  Integer index;
  bool cosets_covered = false;
  std::optional<IntVector> witness_missing;
};

// Coset key of v in Z^m / A Z^m: adj(A) v reduced mod |det A|.
IntVector coset_key(const Embedding& e, const IntVector& v);

// Canonical coset representatives 0 <= v_i < H_ii from the Hermite normal
// form of A; there are exactly |det A| of them.
std::vector<IntVector> coset_representatives(const Embedding& e);

// Whether every coset of the image has a representative in {0,1}^m.
CosetReport greene_jabuka(const Embedding& e);

// All x in Z^m with A^T x = pairings and, when given, x.x = self_pairing.
std::vector<IntVector> extend(const Embedding& e, const IntVector& pairings,
                              std::optional<std::int64_t> self_pairing = std::nullopt);

}  // namespace knotslice
