#include <array>

#include "moves_internal.hpp"

namespace knotslice::detail {

namespace {

[[noreturn]] void inapplicable(const char* what) { throw Error(ErrorCode::inapplicable, what); }

constexpr std::array<int, 4> reflect = {1, 0, 3, 2};

struct FlypeSite {
  int crossing = -1;
  SlotId sk = -1;
  SlotId e_tangle = -1, e_out = -1;
  SlotId f_tangle = -1, f_out = -1;
  std::vector<char> in_tangle;
};

// The tangle T hanging off slots k, k + 1 of crossing c, cut off by the
// edges at those slots and the edges at side slots sf (of the region
// between slots k + 1 and k + 2) and se (between k + 3 and k).
std::optional<FlypeSite> locate(const PlanarDiagram& d, SlotId sk, SlotId sf, SlotId se) {
  const int n = d.crossing_count();
  if (sk < 0 || sk >= 4 * n || sf < 0 || sf >= 4 * n || se < 0 || se >= 4 * n) return std::nullopt;
  const int c = crossing_of(sk);
  const SlotId sk1 = next_ccw(sk);
  if (crossing_of(d.partner(sk)) == c || crossing_of(d.partner(sk1)) == c) return std::nullopt;
  const int inner = d.region_of_corner(sk);
  const int p = d.region_of_corner(sk1);
  const int q = d.region_of_corner(next_cw(sk));
  if (d.region_of_side(sf) != p || d.region_of_side(se) != q) return std::nullopt;
  const int g = d.region_of_side(d.partner(sf));
  if (d.region_of_side(d.partner(se)) != g) return std::nullopt;
  const std::array<int, 4> rs = {inner, p, q, g};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (rs[static_cast<std::size_t>(i)] == rs[static_cast<std::size_t>(j)]) return std::nullopt;
  for (SlotId s : {sf, d.partner(sf), se, d.partner(se)})
    if (crossing_of(s) == c) return std::nullopt;
  if (se == sf || se == d.partner(sf)) return std::nullopt;

  std::vector<char> cut(static_cast<std::size_t>(4 * n), 0);
  for (SlotId s : {sk, sk1, sf, se}) {
    cut[static_cast<std::size_t>(s)] = 1;
    cut[static_cast<std::size_t>(d.partner(s))] = 1;
  }
  FlypeSite site;
  site.crossing = c;
  site.sk = sk;
  site.in_tangle.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  for (SlotId s : {d.partner(sk), d.partner(sk1)}) {
    const int x = crossing_of(s);
    if (!site.in_tangle[static_cast<std::size_t>(x)]) {
      site.in_tangle[static_cast<std::size_t>(x)] = 1;
      stack.push_back(x);
    }
  }
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int k = 0; k < 4; ++k) {
      const SlotId s = make_slot(x, k);
      if (cut[static_cast<std::size_t>(s)]) continue;
      const int y = crossing_of(d.partner(s));
      if (y == c) return std::nullopt;
      if (!site.in_tangle[static_cast<std::size_t>(y)]) {
        site.in_tangle[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
    }
  }
  auto split_edge = [&](SlotId s, SlotId& inside, SlotId& outside) {
    const bool a = site.in_tangle[static_cast<std::size_t>(crossing_of(s))] != 0;
    const bool b = site.in_tangle[static_cast<std::size_t>(crossing_of(d.partner(s)))] != 0;
    if (a == b) return false;
    inside = a ? s : d.partner(s);
    outside = a ? d.partner(s) : s;
    return true;
  };
  if (!split_edge(sf, site.f_tangle, site.f_out) || !split_edge(se, site.e_tangle, site.e_out)) return std::nullopt;
  return site;
}

}  // namespace

std::vector<Move> flype_matches(const PlanarDiagram& d) {
  std::vector<Move> out;
  const auto& regions = d.regions();
  for (SlotId sk = 0; sk < 4 * d.crossing_count(); ++sk) {
    const int c = crossing_of(sk);
    if (crossing_of(d.partner(sk)) == c || crossing_of(d.partner(next_ccw(sk))) == c) continue;
    const Region& p = regions[static_cast<std::size_t>(d.region_of_corner(next_ccw(sk)))];
    const Region& q = regions[static_cast<std::size_t>(d.region_of_corner(next_cw(sk)))];
    for (SlotId sf : p.sides)
      for (SlotId se : q.sides)
        if (locate(d, sk, sf, se)) out.push_back({MoveKind::flype, {sk, sf, se}});
  }
  return out;
}

PlanarDiagram apply_flype(const PlanarDiagram& d, const Move& mv) {
  if (mv.anchor.size() != 3) inapplicable("flype takes three slots");
  const auto site = locate(d, mv.anchor[0], mv.anchor[1], mv.anchor[2]);
  if (!site) inapplicable("no flype at anchor");
  const auto& in_t = site->in_tangle;
  auto moved = [&](SlotId s) {
    return in_t[static_cast<std::size_t>(crossing_of(s))] ? make_slot(crossing_of(s), reflect[static_cast<std::size_t>(slot_index(s))]) : s;
  };
  SlotGraph g(d);
  // Turn the tangle over: reverse every rotation and swap over with under,
  // which keeps the parity once slots are relabelled by the reflection.
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (!in_t[static_cast<std::size_t>(x)]) continue;
    for (int j = 0; j < 4; ++j) {
      const SlotId old_partner = d.partner(make_slot(x, reflect[static_cast<std::size_t>(j)]));
      g.connect(make_slot(x, j), moved(old_partner));
    }
  }
  const int z = g.add_crossing(d.is_under(site->sk) ? 0 : 1);
  g.connect(make_slot(z, 0), moved(site->e_tangle));
  g.connect(make_slot(z, 1), moved(site->f_tangle));
  g.connect(make_slot(z, 2), site->e_out);
  g.connect(make_slot(z, 3), site->f_out);
  g.remove_crossing(site->crossing);
  return finish(g);
}

std::vector<Move> untongue_matches(const PlanarDiagram& d) {
  std::vector<Move> out;
  for (CornerId t : r3_triangles(d)) {
    const auto d3 = r3(d, t);
    const Region& tri = d.regions()[static_cast<std::size_t>(d.region_of_corner(t))];
    auto on_triangle = [&](int x) {
      for (CornerId y : tri.corners)
        if (crossing_of(y) == x) return true;
      return false;
    };
    for (const auto& m : r2_matches(*d3)) {
      const Region& b = d3->regions()[static_cast<std::size_t>(d3->region_of_corner(m.anchor[0]))];
      if (on_triangle(crossing_of(b.corners[0])) || on_triangle(crossing_of(b.corners[1])))
        out.push_back({MoveKind::untongue, {t, m.anchor[0]}});
    }
  }
  return out;
}

PlanarDiagram apply_untongue(const PlanarDiagram& d, const Move& mv) {
  if (mv.anchor.size() != 2) inapplicable("untongue takes two corners");
  for (const auto& m : untongue_matches(d))
    if (m == mv) return apply_r2(*r3(d, mv.anchor[0]), {MoveKind::r2_reduce, {mv.anchor[1]}});
  inapplicable("no untongue at anchor");
}

}  // namespace knotslice::detail
