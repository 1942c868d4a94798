#pragma once

#include <utility>
#include <vector>

#include "knotslice/diagram.hpp"
#include "knotslice/matrix.hpp"

namespace knotslice {

// Symmetric integral form with its Gram matrix in a fixed basis.
struct Lattice {
  IntMatrix gram;

  std::size_t rank() const noexcept { return gram.rows(); }
  bool operator==(const Lattice&) const = default;
};

struct GoeritzForm {
  // (m+1)x(m+1), indexed by white_regions of the colouring; rows sum to 0.
  IntMatrix hat;
  // hat with the row and column of the omitted region deleted.
  IntMatrix reduced;
  // Regions R_1..R_m in basis order.
  std::vector<int> white_basis;
  int omitted = -1;

  Lattice lattice() const { return Lattice{reduced}; }
};

// Goeritz matrices of a connected diagram with a chessboard colouring.
// Crossings whose two white corners lie in the same region contribute
// nothing. Throws Disconnected.
GoeritzForm goeritz_hat(const PlanarDiagram& d, const Colouring& c);

// Same, restricted to the white regions of one piece of a split diagram.
GoeritzForm goeritz_hat_piece(const PlanarDiagram& d, const Colouring& c, int piece);

Integer determinant(const GoeritzForm& g);
bool is_positive_definite(const GoeritzForm& g);

// The colouring in which every crossing has sign +1, with its (positive
// definite) form. Throws NotAlternating or Disconnected.
std::pair<Colouring, GoeritzForm> definite_colouring(const PlanarDiagram& d);

// First Betti number of the double branched cover: corank of G per piece,
// plus one for every extra split piece.
int nullity(const PlanarDiagram& d);

}  // namespace knotslice
