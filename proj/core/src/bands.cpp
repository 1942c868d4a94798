#include "knotslice/bands.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "knotslice/goeritz.hpp"
#include "knotslice/slot_graph.hpp"

namespace knotslice {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::invalid_band, what); }
[[noreturn]] void not_computable(const std::string& what) { throw Error(ErrorCode::not_computable, what); }

}  // namespace

std::string to_string(const BandMove& b) {
  std::ostringstream os;
  os << "band(region=" << b.region << ",sides=" << b.sides[0] << "/" << b.sides[1] << ",twist=" << b.half_twists;
  for (const auto& p : b.passages) os << (p.over ? ",over=" : ",under=") << p.side;
  os << ')';
  return os.str();
}

namespace {

BandResult loop_band(const PlanarDiagram& d, const BandMove& b) {
  const int loop = -1 - b.sides[0];
  if (b.sides[0] != b.sides[1] || d.crossing_count() != 0 || loop >= d.loop_count() || !b.passages.empty())
    invalid("loop bands need a crossingless diagram and one loop");
  SlotGraph g(d);
  BandResult out;
  if (b.half_twists == 0) {
    g.add_loops(1);
  } else {
    const int x = g.add_crossing(b.half_twists > 0 ? 0 : 1);
    g.connect(make_slot(x, 1), make_slot(x, 2));
    g.connect(make_slot(x, 3), make_slot(x, 0));
    g.add_loops(-1);
    out.twist_crossing = x;
  }
  out.diagram = g.build().diagram;
  return out;
}

}  // namespace

BandResult apply_band_traced(const PlanarDiagram& d, const BandMove& b) {
  if (b.half_twists < -1 || b.half_twists > 1) invalid("half twists must be -1, 0 or +1");
  if (b.sides[0] < 0 || b.sides[1] < 0) return loop_band(d, b);
  const int n = d.crossing_count();
  auto in_range = [&](SlotId s) { return s >= 0 && s < 4 * n; };
  auto edge = [&](SlotId s) { return std::min(s, d.partner(s)); };
  const SlotId s1 = b.sides[0];
  const SlotId s2 = b.sides[1];
  if (!in_range(s1) || !in_range(s2)) invalid("band side out of range");
  if (b.region < 0 || b.region >= static_cast<int>(d.regions().size()) || d.region_of_side(s1) != b.region)
    invalid("band must start at a side of its region");
  // Walk the core across the passage edges.
  std::vector<SlotId> edges{edge(s1)};
  int here = b.region;
  for (const auto& p : b.passages) {
    if (!in_range(p.side) || d.region_of_side(p.side) != here) invalid("passage edge must bound the current region");
    edges.push_back(edge(p.side));
    here = d.region_of_side(d.partner(p.side));
  }
  if (d.region_of_side(s2) != here) invalid("band must end at a side of the region it reaches");
  edges.push_back(edge(s2));
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) invalid("band edges must be distinct");

  SlotGraph g(d);
  BandResult out;
  // The side from x runs on the core's right, the side from y on its left.
  SlotId x = s1, y = d.partner(s1);
  const SlotId u = s2, w = d.partner(s2);
  for (const auto& p : b.passages) {
    const SlotId t = p.side, t_end = d.partner(p.side);
    const std::uint8_t par = p.over ? 0 : 1;
    const int ql = g.add_crossing(par);
    const int qr = g.add_crossing(par);
    g.connect(make_slot(ql, 2), t);
    g.connect(make_slot(ql, 0), make_slot(qr, 2));
    g.connect(make_slot(qr, 0), t_end);
    g.connect(make_slot(ql, 3), y);
    g.connect(make_slot(qr, 3), x);
    y = make_slot(ql, 1);
    x = make_slot(qr, 1);
  }
  if (b.half_twists == 0) {
    g.connect(x, w);
    g.connect(y, u);
  } else {
    const int z = g.add_crossing(b.half_twists > 0 ? 0 : 1);
    g.connect(make_slot(z, 0), y);
    g.connect(make_slot(z, 1), x);
    g.connect(make_slot(z, 2), w);
    g.connect(make_slot(z, 3), u);
    out.twist_crossing = z;
  }
  out.diagram = g.build().diagram;
  if (d.outer_corner() >= 0) out.diagram = out.diagram.with_outer_corner(d.outer_corner());
  return out;
}

PlanarDiagram apply_band(const PlanarDiagram& d, const BandMove& b) { return apply_band_traced(d, b).diagram; }

namespace {

void extend_candidates(const PlanarDiagram& d, const BandMove& prefix, int here, int passages_left,
                       std::vector<BandMove>& out) {
  const auto& r = d.regions()[static_cast<std::size_t>(here)];
  if (r.loop >= 0) return;
  auto used = [&](SlotId s) {
    const SlotId e = std::min(s, d.partner(s));
    if (std::min(prefix.sides[0], d.partner(prefix.sides[0])) == e) return true;
    for (const auto& p : prefix.passages)
      if (std::min(p.side, d.partner(p.side)) == e) return true;
    return false;
  };
  for (SlotId s : r.sides) {
    if (used(s)) continue;
    // Without passages each unordered pair is listed once.
    if (prefix.passages.empty() && s < prefix.sides[0]) continue;
    for (int t : {0, 1, -1}) {
      BandMove b = prefix;
      b.sides[1] = s;
      b.half_twists = t;
      out.push_back(std::move(b));
    }
  }
  if (passages_left == 0) return;
  for (SlotId s : r.sides) {
    if (used(s)) continue;
    for (bool over : {true, false}) {
      BandMove b = prefix;
      b.passages.push_back({s, over});
      extend_candidates(d, b, d.region_of_side(d.partner(s)), passages_left - 1, out);
    }
  }
}

}  // namespace

std::vector<BandMove> candidate_bands(const PlanarDiagram& d, int max_passages) {
  std::vector<BandMove> out;
  if (d.crossing_count() == 0) {
    if (d.loop_count() == 1)
      for (int t : {0, 1, -1}) out.push_back({0, {-1, -1}, t, {}});
    return out;
  }
  // Loops beside crossings stay untouched: the target unlink gains nothing
  // from them.
  for (const auto& r : d.regions()) {
    if (r.loop >= 0) continue;
    for (SlotId s : r.sides) extend_candidates(d, BandMove{r.id, {s, -1}, 0, {}}, r.id, max_passages, out);
  }
  return out;
}

bool keeps_near_alternating(const PlanarDiagram& d, const BandMove& b) {
  PlanarDiagram nd;
  try {
    nd = apply_band(d, b);
  } catch (const Error&) {
    return false;
  }
  if (nullity(nd) != nullity(d) + 1) return false;
  const int before = alternation_stats(d).nonalternating_count;
  const int after = alternation_stats(nd).nonalternating_count;
  if (nd.piece_count() > 1) return after <= before + 1;
  return after == before + 1;
}

std::vector<BandMove> enumerate_bands(const PlanarDiagram& d, const Colouring& c, int max_passages) {
  std::vector<BandMove> out;
  for (auto& b : candidate_bands(d, max_passages)) {
    if (b.sides[0] >= 0 && !c.is_white(b.region)) continue;
    if (keeps_near_alternating(d, b)) out.push_back(std::move(b));
  }
  return out;
}

std::vector<BandMove> enumerate_bands(const PlanarDiagram& d, int max_passages) {
  std::vector<BandMove> out;
  for (auto& b : candidate_bands(d, max_passages))
    if (keeps_near_alternating(d, b)) out.push_back(std::move(b));
  return out;
}

NewGeneratorData new_generator_data(const PlanarDiagram& d, const Colouring& c, const BandMove& b) {
  if (d.crossing_count() == 0 || !d.is_connected()) not_computable("no Goeritz form before the band");
  if (b.sides[0] < 0 || !c.is_white(b.region)) not_computable("band region is not white");
  if (!b.passages.empty()) not_computable("band crosses strands");
  const BandResult res = apply_band_traced(d, b);
  const PlanarDiagram& nd = res.diagram;
  if (!nd.is_connected()) not_computable("band result is split");
  const int n = d.crossing_count();
  const auto& regions = nd.regions();
  // Old regions met by each new region, through surviving corners.
  std::vector<std::vector<int>> old_of(regions.size());
  for (const auto& r : regions)
    for (CornerId y : r.corners)
      if (crossing_of(y) < n) old_of[static_cast<std::size_t>(r.id)].push_back(d.region_of_corner(y));
  for (auto& v : old_of) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  // Extend the colouring: every new region inherits a consistent colour.
  const auto [c0, c1] = chessboard(nd);
  const Colouring* ext = nullptr;
  for (const Colouring* cand : {&c0, &c1}) {
    bool ok = true;
    for (const auto& r : regions)
      for (int o : old_of[static_cast<std::size_t>(r.id)])
        ok = ok && cand->colour[static_cast<std::size_t>(r.id)] == c.colour[static_cast<std::size_t>(o)];
    if (ok) ext = cand;
  }
  if (ext == nullptr) not_computable("colouring does not extend across the band");
  // Image of every old white region.
  std::map<int, std::vector<int>> image;
  for (const auto& r : regions)
    for (int o : old_of[static_cast<std::size_t>(r.id)])
      if (c.is_white(o)) image[o].push_back(r.id);
  const CornerId first = d.regions()[static_cast<std::size_t>(b.region)].corners.front();
  const int kept = nd.region_of_corner(first);
  int fresh = -1;
  for (int r : image[b.region])
    if (r != kept) fresh = r;
  if (image[b.region].size() != 2 || fresh < 0) not_computable("band does not split its region in two");
  for (int w : c.white_regions)
    if (w != b.region && image[w].size() != 1) not_computable("white region does not survive the band");
  const GoeritzForm g = goeritz_hat(nd, *ext);
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < g.white_basis.size(); ++i) index[g.white_basis[i]] = i + 1;
  index[g.omitted] = 0;
  auto entry = [&](int a, int bb) { return g.hat(index.at(a), index.at(bb)); };
  NewGeneratorData data;
  for (std::size_t i = 1; i < c.white_regions.size(); ++i) {
    const int w = c.white_regions[i];
    std::int64_t v = 0;
    for (int r : image[w]) v += entry(fresh, r);
    data.pairings.push_back(v);
  }
  data.self_pairing = entry(fresh, fresh);
  return data;
}

bool band_obstructed(const std::vector<Embedding>& embeddings, const NewGeneratorData& data) {
  for (const auto& e : embeddings)
    if (!extend(e, data.pairings, data.self_pairing).empty()) return false;
  return true;
}

}  // namespace knotslice
