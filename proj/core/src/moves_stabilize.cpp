#include "moves_internal.hpp"

namespace knotslice::detail {

namespace {

[[noreturn]] void inapplicable(const char* what) { throw Error(ErrorCode::inapplicable, what); }

constexpr int loop_anchor(int l) { return -1 - l; }
constexpr int anchor_loop(int a) { return -1 - a; }

bool valid_end(const PlanarDiagram& d, int a) {
  return a >= 0 ? a < 4 * d.crossing_count() : anchor_loop(a) < d.loop_count();
}

int piece_of_end(const PlanarDiagram& d, int a) {
  return a >= 0 ? d.piece_of_crossing(crossing_of(a)) : d.crossing_piece_count() + anchor_loop(a);
}

// Two strand pieces may be pushed across each other when they bound a
// common region or lie in different split pieces.
bool r2_pair_ok(const PlanarDiagram& d, int a, int b) {
  if (!valid_end(d, a) || !valid_end(d, b) || a == b) return false;
  if (a >= 0 && b >= 0) {
    if (b == d.partner(a)) return false;
    if (d.region_of_side(a) == d.region_of_side(b)) return true;
  }
  return piece_of_end(d, a) != piece_of_end(d, b);
}

}  // namespace

std::vector<Move> r1_stabilize_matches(const PlanarDiagram& d) {
  std::vector<Move> out;
  for (SlotId s = 0; s < 4 * d.crossing_count(); ++s) {
    if (s > d.partner(s)) continue;
    for (int side = 0; side < 2; ++side)
      for (int p = 0; p < 2; ++p) out.push_back({MoveKind::r1_stabilize, {s, side, p}});
  }
  for (int l = 0; l < d.loop_count(); ++l)
    for (int side = 0; side < 2; ++side)
      for (int p = 0; p < 2; ++p) out.push_back({MoveKind::r1_stabilize, {loop_anchor(l), side, p}});
  return out;
}

PlanarDiagram apply_r1_stabilize(const PlanarDiagram& d, const Move& mv) {
  if (mv.anchor.size() != 3) inapplicable("R1_stabilize takes three values");
  const int a = mv.anchor[0];
  const int side = mv.anchor[1];
  const int p = mv.anchor[2];
  if (!valid_end(d, a) || (a >= 0 && a > d.partner(a)) || side < 0 || side > 1 || p < 0 || p > 1)
    inapplicable("bad R1_stabilize anchor");
  SlotGraph g(d);
  const int x = g.add_crossing(static_cast<std::uint8_t>(p));
  // The kink occupies two consecutive slots; the strand passes through the
  // other two.
  const int first = side == 0 ? 0 : 1;
  g.connect(make_slot(x, first + 1), make_slot(x, first + 2));
  if (a >= 0) {
    const SlotId t = d.partner(a);
    g.connect(a, make_slot(x, first));
    g.connect(make_slot(x, first + 3), t);
  } else {
    g.connect(make_slot(x, first), make_slot(x, first + 3));
    g.add_loops(-1);
  }
  return finish(g);
}

std::vector<Move> r2_stabilize_matches(const PlanarDiagram& d) {
  std::vector<Move> out;
  std::vector<int> ends;
  for (SlotId s = 0; s < 4 * d.crossing_count(); ++s) ends.push_back(s);
  for (int l = 0; l < d.loop_count(); ++l) ends.push_back(loop_anchor(l));
  for (int a : ends)
    for (int b : ends)
      if (r2_pair_ok(d, a, b))
        for (int p = 0; p < 2; ++p) out.push_back({MoveKind::r2_stabilize, {a, b, p}});
  return out;
}

PlanarDiagram apply_r2_stabilize(const PlanarDiagram& d, const Move& mv) {
  if (mv.anchor.size() != 3) inapplicable("R2_stabilize takes three values");
  const int a = mv.anchor[0];
  const int b = mv.anchor[1];
  const int p = mv.anchor[2];
  if (!r2_pair_ok(d, a, b) || p < 0 || p > 1) inapplicable("bad R2_stabilize anchor");
  SlotGraph g(d);
  // Strand A dips across strand B at x1 and returns at x2; B runs from x2
  // to x1. A uses the odd slots of both crossings.
  const int x1 = g.add_crossing(static_cast<std::uint8_t>(p));
  const int x2 = g.add_crossing(static_cast<std::uint8_t>(p));
  g.connect(make_slot(x1, 0), make_slot(x2, 2));
  g.connect(make_slot(x1, 3), make_slot(x2, 3));
  int loops_used = 0;
  if (a >= 0) {
    const SlotId ap = d.partner(a);
    g.connect(a, make_slot(x1, 1));
    g.connect(ap, make_slot(x2, 1));
  } else {
    g.connect(make_slot(x1, 1), make_slot(x2, 1));
    ++loops_used;
  }
  if (b >= 0) {
    const SlotId bp = d.partner(b);
    g.connect(b, make_slot(x2, 0));
    g.connect(bp, make_slot(x1, 2));
  } else {
    g.connect(make_slot(x2, 0), make_slot(x1, 2));
    ++loops_used;
  }
  g.add_loops(-loops_used);
  return finish(g);
}

std::vector<Move> tongue_matches(const PlanarDiagram& d) {
  std::vector<Move> out;
  const int n = d.crossing_count();
  for (const auto& m : r2_stabilize_matches(d)) {
    const PlanarDiagram d2 = apply_r2_stabilize(d, m);
    // Crossing indices survive the rebuild: the two new ones are n, n + 1.
    for (CornerId t : r3_triangles(d2)) {
      const Region& tri = d2.regions()[static_cast<std::size_t>(d2.region_of_corner(t))];
      bool touches = false;
      for (CornerId y : tri.corners) touches = touches || crossing_of(y) >= n;
      if (touches) out.push_back({MoveKind::tongue, {m.anchor[0], m.anchor[1], m.anchor[2], t}});
    }
  }
  return out;
}

PlanarDiagram apply_tongue(const PlanarDiagram& d, const Move& mv) {
  if (mv.anchor.size() != 4) inapplicable("tongue takes four values");
  const PlanarDiagram d2 = apply_r2_stabilize(d, {MoveKind::r2_stabilize, {mv.anchor[0], mv.anchor[1], mv.anchor[2]}});
  const Region& tri = d2.regions()[static_cast<std::size_t>(d2.region_of_corner(mv.anchor[3] < 0 || mv.anchor[3] >= 4 * d2.crossing_count() ? 0 : mv.anchor[3]))];
  bool touches = false;
  for (CornerId y : tri.corners) touches = touches || crossing_of(y) >= d.crossing_count();
  if (mv.anchor[3] < 0 || mv.anchor[3] >= 4 * d2.crossing_count() || !touches) inapplicable("bad tongue triangle");
  auto d3 = r3(d2, mv.anchor[3]);
  if (!d3) inapplicable("tongue triangle admits no R3");
  return *d3;
}

}  // namespace knotslice::detail
