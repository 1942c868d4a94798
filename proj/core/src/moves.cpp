#include "knotslice/moves.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "knotslice/slot_graph.hpp"
#include "moves_internal.hpp"

namespace knotslice {

namespace {

constexpr std::array<std::string_view, 7> kind_names = {"R1_reduce",    "R2_reduce",    "flype", "untongue",
                                                        "R1_stabilize", "R2_stabilize", "tongue"};

[[noreturn]] void inapplicable(const char* what) { throw Error(ErrorCode::inapplicable, what); }

}  // namespace

std::string_view to_string(MoveKind k) { return kind_names[static_cast<std::size_t>(k)]; }

MoveKind move_kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kind_names.size(); ++i)
    if (kind_names[i] == name) return static_cast<MoveKind>(i);
  throw Error(ErrorCode::malformed_code, "unknown move kind: " + std::string(name));
}

std::string to_string(const Move& m) {
  std::ostringstream os;
  os << to_string(m.kind) << '(';
  for (std::size_t i = 0; i < m.anchor.size(); ++i) os << (i ? "," : "") << m.anchor[i];
  os << ')';
  return os.str();
}

const std::vector<RegistryEntry>& move_registry() {
  static const std::vector<RegistryEntry> registry = {
      {MoveKind::r1_reduce, {"R1_reduce", true, true}},
      {MoveKind::r2_reduce, {"R2_reduce", true, true}},
      {MoveKind::flype, {"flype", false, true}},
      {MoveKind::untongue, {"untongue", true, true}},
      {MoveKind::r1_stabilize, {"R1_stabilize", false, false}},
      {MoveKind::r2_stabilize, {"R2_stabilize", false, false}},
      {MoveKind::tongue, {"tongue", false, false}},
      {std::nullopt, {"untwirl", true, false}},
      {std::nullopt, {"twisted_untongue", true, false}},
  };
  return registry;
}

namespace detail {

PlanarDiagram finish(const SlotGraph& g) {
  PlanarDiagram d = g.build().diagram;
  if (d.outer_corner() < 0 && d.crossing_count() > 0) {
    const Region* best = nullptr;
    for (const auto& r : d.regions())
      if (!r.corners.empty() && (best == nullptr || r.corners.size() > best->corners.size())) best = &r;
    d = d.with_outer_corner(best->corners.front());
  }
  return d;
}

// --- Reidemeister I / II reductions ----------------------------------------

std::vector<Move> r1_matches(const PlanarDiagram& d) {
  std::vector<Move> out;
  for (SlotId s = 0; s < 4 * d.crossing_count(); ++s)
    if (d.partner(s) == next_ccw(s)) out.push_back({MoveKind::r1_reduce, {s}});
  return out;
}

PlanarDiagram apply_r1(const PlanarDiagram& d, const Move& mv) {
  if (mv.anchor.size() != 1) inapplicable("R1_reduce takes one slot");
  const SlotId s = mv.anchor[0];
  if (s < 0 || s >= 4 * d.crossing_count() || d.partner(s) != next_ccw(s)) inapplicable("no kink at slot");
  SlotGraph g(d);
  g.remove_crossing(crossing_of(s));
  return finish(g);
}

bool is_r2_bigon(const PlanarDiagram& d, const Region& r) {
  if (r.corners.size() != 2) return false;
  const CornerId y1 = r.corners[0];
  const CornerId y2 = r.corners[1];
  if (crossing_of(y1) == crossing_of(y2)) return false;
  return d.is_under(next_ccw(y1)) == d.is_under(y2);
}

std::vector<Move> r2_matches(const PlanarDiagram& d) {
  std::vector<Move> out;
  for (const auto& r : d.regions())
    if (is_r2_bigon(d, r)) out.push_back({MoveKind::r2_reduce, {r.corners[0]}});
  return out;
}

PlanarDiagram apply_r2(const PlanarDiagram& d, const Move& mv) {
  if (mv.anchor.size() != 1) inapplicable("R2_reduce takes one corner");
  const CornerId y = mv.anchor[0];
  if (y < 0 || y >= 4 * d.crossing_count()) inapplicable("corner out of range");
  const Region& r = d.regions()[static_cast<std::size_t>(d.region_of_corner(y))];
  if (!is_r2_bigon(d, r)) inapplicable("not a reducible bigon");
  SlotGraph g(d);
  g.remove_crossing(crossing_of(r.corners[0]));
  g.remove_crossing(crossing_of(r.corners[1]));
  return finish(g);
}

// --- Reidemeister III -------------------------------------------------------

std::optional<PlanarDiagram> r3(const PlanarDiagram& d, CornerId corner) {
  if (corner < 0 || corner >= 4 * d.crossing_count()) return std::nullopt;
  const Region& r = d.regions()[static_cast<std::size_t>(d.region_of_corner(corner))];
  if (r.corners.size() != 3) return std::nullopt;
  const CornerId y1 = r.corners[0];
  const CornerId y2 = r.corners[1];
  const CornerId y3 = r.corners[2];
  const int x1 = crossing_of(y1);
  const int x2 = crossing_of(y2);
  const int x3 = crossing_of(y3);
  if (x1 == x2 || x2 == x3 || x1 == x3) return std::nullopt;
  // Outer ends of the disc around the triangle, counterclockwise; chord i
  // joins positions i and i + 3.
  const std::array<SlotId, 6> h = {opposite(y1), next_cw(y1), opposite(y3), next_cw(y3), opposite(y2), next_cw(y2)};
  std::array<SlotId, 6> out{};
  for (int i = 0; i < 6; ++i) {
    out[static_cast<std::size_t>(i)] = d.partner(h[static_cast<std::size_t>(i)]);
    const int x = crossing_of(out[static_cast<std::size_t>(i)]);
    if (x == x1 || x == x2 || x == x3) return std::nullopt;
  }
  // under[i][x]: whether chord i runs under at old crossing x (indexed 0..2).
  auto chord_slot = [&](int chord, int x) -> std::optional<SlotId> {
    const SlotId a = h[static_cast<std::size_t>(chord)];
    const SlotId b = h[static_cast<std::size_t>(chord + 3)];
    if (crossing_of(a) == x) return a;
    if (crossing_of(b) == x) return b;
    return std::nullopt;
  };
  // Crossing of chords u < v.
  auto crossing_of_chords = [&](int u, int v) {
    for (int x : {x1, x2, x3})
      if (chord_slot(u, x) && chord_slot(v, x)) return x;
    return -1;
  };
  const std::array<std::array<int, 2>, 3> pairs = {{{0, 1}, {1, 2}, {0, 2}}};
  std::array<int, 3> cross{};
  for (int p = 0; p < 3; ++p) {
    cross[static_cast<std::size_t>(p)] = crossing_of_chords(pairs[static_cast<std::size_t>(p)][0], pairs[static_cast<std::size_t>(p)][1]);
    if (cross[static_cast<std::size_t>(p)] < 0) return std::nullopt;
  }
  // over_count[i]: number of crossings where chord i is over.
  std::array<int, 3> over_count{};
  for (int p = 0; p < 3; ++p)
    for (int i : pairs[static_cast<std::size_t>(p)])
      if (!d.is_under(*chord_slot(i, cross[static_cast<std::size_t>(p)]))) ++over_count[static_cast<std::size_t>(i)];
  auto sorted = over_count;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) return std::nullopt;

  SlotGraph g(d);
  // New slot j of the crossing of chords u < v points toward hexagon
  // position order[j] = {u, v, u + 3, v + 3}.
  auto new_slot = [&](int p, int position) {
    const int u = pairs[static_cast<std::size_t>(p)][0];
    const int v = pairs[static_cast<std::size_t>(p)][1];
    const std::array<int, 4> order = {u, v, u + 3, v + 3};
    for (int j = 0; j < 4; ++j)
      if (order[static_cast<std::size_t>(j)] == position) return make_slot(cross[static_cast<std::size_t>(p)], j);
    return -1;
  };
  auto pair_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (int p = 0; p < 3; ++p)
      if (pairs[static_cast<std::size_t>(p)][0] == a && pairs[static_cast<std::size_t>(p)][1] == b) return p;
    return -1;
  };
  for (int p = 0; p < 3; ++p) {
    const int u = pairs[static_cast<std::size_t>(p)][0];
    const bool u_under = d.is_under(*chord_slot(u, cross[static_cast<std::size_t>(p)]));
    g.set_under_parity(cross[static_cast<std::size_t>(p)], u_under ? 0 : 1);
  }
  for (int i = 0; i < 3; ++i) {
    // Old order along chord i from position i: crossing at h[i], then at
    // h[i + 3]; the new order is reversed.
    const int first_x = crossing_of(h[static_cast<std::size_t>(i + 3)]);
    const int second_x = crossing_of(h[static_cast<std::size_t>(i)]);
    auto other_chord = [&](int x) {
      for (int j = 0; j < 3; ++j)
        if (j != i && chord_slot(j, x)) return j;
      return -1;
    };
    const int p_first = pair_index(i, other_chord(first_x));
    const int p_second = pair_index(i, other_chord(second_x));
    g.connect(out[static_cast<std::size_t>(i)], new_slot(p_first, i));
    g.connect(new_slot(p_first, i + 3), new_slot(p_second, i));
    g.connect(new_slot(p_second, i + 3), out[static_cast<std::size_t>(i + 3)]);
  }
  try {
    return finish(g);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<CornerId> r3_triangles(const PlanarDiagram& d) {
  std::vector<CornerId> out;
  for (const auto& r : d.regions())
    if (r.corners.size() == 3 && r3(d, r.corners[0])) out.push_back(r.corners[0]);
  return out;
}

}  // namespace detail

std::vector<Move> applicable_moves(const PlanarDiagram& d, MoveSet kinds) {
  std::vector<Move> out;
  auto add = [&](MoveKind k, std::vector<Move> ms) {
    if (!kinds.contains(k)) return;
    std::sort(ms.begin(), ms.end());
    out.insert(out.end(), ms.begin(), ms.end());
  };
  if (kinds.contains(MoveKind::r1_reduce)) add(MoveKind::r1_reduce, detail::r1_matches(d));
  if (kinds.contains(MoveKind::r2_reduce)) add(MoveKind::r2_reduce, detail::r2_matches(d));
  if (kinds.contains(MoveKind::flype)) add(MoveKind::flype, detail::flype_matches(d));
  if (kinds.contains(MoveKind::untongue)) add(MoveKind::untongue, detail::untongue_matches(d));
  if (kinds.contains(MoveKind::r1_stabilize)) add(MoveKind::r1_stabilize, detail::r1_stabilize_matches(d));
  if (kinds.contains(MoveKind::r2_stabilize)) add(MoveKind::r2_stabilize, detail::r2_stabilize_matches(d));
  if (kinds.contains(MoveKind::tongue)) add(MoveKind::tongue, detail::tongue_matches(d));
  return out;
}

PlanarDiagram apply_move_unchecked(const PlanarDiagram& d, const Move& mv) {
  switch (mv.kind) {
    case MoveKind::r1_reduce: return detail::apply_r1(d, mv);
    case MoveKind::r2_reduce: return detail::apply_r2(d, mv);
    case MoveKind::flype: return detail::apply_flype(d, mv);
    case MoveKind::untongue: return detail::apply_untongue(d, mv);
    case MoveKind::r1_stabilize: return detail::apply_r1_stabilize(d, mv);
    case MoveKind::r2_stabilize: return detail::apply_r2_stabilize(d, mv);
    case MoveKind::tongue: return detail::apply_tongue(d, mv);
  }
  inapplicable("unknown move kind");
}

PlanarDiagram apply_move(const PlanarDiagram& d, const Move& mv) {
  const auto matches = applicable_moves(d, MoveSet{mv.kind});
  if (std::find(matches.begin(), matches.end(), mv) == matches.end())
    inapplicable(("move " + to_string(mv) + " does not apply").c_str());
  return apply_move_unchecked(d, mv);
}

SimplifyKey simplify_key(const PlanarDiagram& d) {
  return {alternation_stats(d).nonalternating_count, d.crossing_count()};
}

SimplifyResult simplify(const PlanarDiagram& d, std::size_t budget) {
  SimplifyResult res{d, {}, 0, false};
  SimplifyKey key = simplify_key(d);
  // Cheap descent through reductions first.
  const MoveSet reductions{MoveKind::r1_reduce, MoveKind::r2_reduce, MoveKind::untongue};
  for (bool improved = true; improved && !res.diagram.is_crossingless();) {
    improved = false;
    for (const auto& m : applicable_moves(res.diagram, reductions)) {
      if (res.states >= budget) {
        res.budget_exhausted = true;
        return res;
      }
      ++res.states;
      PlanarDiagram next = apply_move_unchecked(res.diagram, m);
      const SimplifyKey k = simplify_key(next);
      if (k < key) {
        key = k;
        res.diagram = std::move(next);
        res.moves.push_back(m);
        improved = true;
        break;
      }
    }
  }
  if (res.diagram.is_crossingless()) return res;

  // Best-first search over reductions and flypes.
  struct Node {
    PlanarDiagram diagram;
    int parent;
    Move move;
    SimplifyKey key;
  };
  std::vector<Node> nodes;
  nodes.push_back({res.diagram, -1, {}, key});
  using Entry = std::tuple<SimplifyKey, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(key, 0);
  std::unordered_set<std::string> seen{canonical_form(res.diagram)};
  int best = 0;
  while (!queue.empty()) {
    const int at = std::get<1>(queue.top());
    queue.pop();
    const PlanarDiagram cur = nodes[static_cast<std::size_t>(at)].diagram;
    for (const auto& m : applicable_moves(cur, MoveSet::simplification())) {
      if (res.states >= budget) {
        res.budget_exhausted = true;
        queue = {};
        break;
      }
      ++res.states;
      PlanarDiagram next = apply_move_unchecked(cur, m);
      if (!seen.insert(canonical_form(next)).second) continue;
      const SimplifyKey k = simplify_key(next);
      nodes.push_back({std::move(next), at, m, k});
      const int id = static_cast<int>(nodes.size()) - 1;
      if (k < nodes[static_cast<std::size_t>(best)].key) best = id;
      queue.emplace(k, id);
      if (nodes[static_cast<std::size_t>(id)].diagram.is_crossingless()) {
        queue = {};
        break;
      }
    }
  }
  std::vector<Move> tail;
  for (int at = best; nodes[static_cast<std::size_t>(at)].parent >= 0; at = nodes[static_cast<std::size_t>(at)].parent)
    tail.push_back(nodes[static_cast<std::size_t>(at)].move);
  res.moves.insert(res.moves.end(), tail.rbegin(), tail.rend());
  res.diagram = nodes[static_cast<std::size_t>(best)].diagram;
  return res;
}

std::optional<PlanarDiagram> reidemeister3(const PlanarDiagram& d, CornerId triangle_corner) {
  return detail::r3(d, triangle_corner);
}

}  // namespace knotslice
