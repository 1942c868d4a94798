#include "knotslice/goeritz.hpp"

#include <algorithm>

namespace knotslice {

GoeritzForm goeritz_hat_piece(const PlanarDiagram& d, const Colouring& c, int piece) {
  GoeritzForm g;
  std::vector<int> whites;
  for (const int r : c.white_regions)
    if (d.regions()[static_cast<std::size_t>(r)].piece == piece) whites.push_back(r);
  const std::size_t m1 = whites.size();
  std::vector<int> index(d.regions().size(), -1);
  for (std::size_t i = 0; i < m1; ++i) index[static_cast<std::size_t>(whites[i])] = static_cast<int>(i);
  g.hat = IntMatrix(m1, m1);
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (d.piece_of_crossing(x) != piece) continue;
    const int eps = crossing_sign(d, c, x);
    // White corners are the pair of the same parity as a white corner.
    const int k = c.is_white(d.region_of_corner(make_slot(x, 0))) ? 0 : 1;
    const int a = index[static_cast<std::size_t>(d.region_of_corner(make_slot(x, k)))];
    const int b = index[static_cast<std::size_t>(d.region_of_corner(make_slot(x, k + 2)))];
    if (a < 0 || b < 0) throw Error(ErrorCode::malformed_code, "colouring is not a chessboard colouring");
    if (a == b) continue;
    const auto ua = static_cast<std::size_t>(a);
    const auto ub = static_cast<std::size_t>(b);
    g.hat(ua, ub) -= eps;
    g.hat(ub, ua) -= eps;
    g.hat(ua, ua) += eps;
    g.hat(ub, ub) += eps;
  }
  if (m1 > 0) {
    g.omitted = whites.front();
    g.white_basis.assign(whites.begin() + 1, whites.end());
    std::vector<std::size_t> keep;
    for (std::size_t i = 1; i < m1; ++i) keep.push_back(i);
    g.reduced = g.hat.submatrix(keep);
  }
  return g;
}

GoeritzForm goeritz_hat(const PlanarDiagram& d, const Colouring& c) {
  if (d.piece_count() > 1) throw Error(ErrorCode::disconnected, "Goeritz form of a split diagram");
  if (!is_chessboard(d, c)) throw Error(ErrorCode::malformed_code, "colouring is not a chessboard colouring");
  return goeritz_hat_piece(d, c, 0);
}

Integer determinant(const GoeritzForm& g) { return determinant(g.reduced); }

bool is_positive_definite(const GoeritzForm& g) { return is_positive_definite(g.reduced); }

std::pair<Colouring, GoeritzForm> definite_colouring(const PlanarDiagram& d) {
  if (d.piece_count() > 1) throw Error(ErrorCode::disconnected, "definite colouring of a split diagram");
  auto [first, second] = chessboard(d);
  for (Colouring* c : {&first, &second}) {
    bool all_positive = true;
    for (int x = 0; x < d.crossing_count() && all_positive; ++x) all_positive = crossing_sign(d, *c, x) > 0;
    if (all_positive) {
      GoeritzForm g = goeritz_hat(d, *c);
      return {std::move(*c), std::move(g)};
    }
  }
  throw Error(ErrorCode::not_alternating, "diagram has crossings of both signs");
}

int nullity(const PlanarDiagram& d) {
  if (d.piece_count() == 0) return 0;
  const Colouring c = chessboard_all(d);
  int total = d.piece_count() - 1;
  for (int p = 0; p < d.crossing_piece_count(); ++p) {
    const GoeritzForm g = goeritz_hat_piece(d, c, p);
    total += static_cast<int>(g.reduced.rows() - rank(g.reduced));
  }
  return total;
}

}  // namespace knotslice
