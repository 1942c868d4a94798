#include "knotslice/slot_graph.hpp"

namespace knotslice {

SlotGraph::SlotGraph(const PlanarDiagram& d)
    : partner_(d.partners()), parity_(static_cast<std::size_t>(d.crossing_count())),
      removed_(static_cast<std::size_t>(d.crossing_count()), 0), loops_(d.loop_count()), outer_(d.outer_corner()) {
  for (int c = 0; c < d.crossing_count(); ++c) parity_[static_cast<std::size_t>(c)] = d.crossing(c).under_parity;
}

int SlotGraph::add_crossing(std::uint8_t under_parity) {
  const int c = crossing_count();
  parity_.push_back(under_parity);
  removed_.push_back(0);
  for (int k = 0; k < 4; ++k) partner_.push_back(-1);
  return c;
}

void SlotGraph::remove_crossing(int c) { removed_[static_cast<std::size_t>(c)] = 1; }

void SlotGraph::connect(SlotId a, SlotId b) {
  partner_[static_cast<std::size_t>(a)] = b;
  partner_[static_cast<std::size_t>(b)] = a;
}

SlotGraph::Result SlotGraph::build() const {
  const int n = crossing_count();
  Result out;
  out.crossing_map.assign(static_cast<std::size_t>(n), -1);
  int live = 0;
  for (int c = 0; c < n; ++c)
    if (!removed_[static_cast<std::size_t>(c)]) out.crossing_map[static_cast<std::size_t>(c)] = live++;
  auto remap = [&](SlotId s) { return make_slot(out.crossing_map[static_cast<std::size_t>(crossing_of(s))], slot_index(s)); };

  std::vector<char> visited(partner_.size(), 0);
  std::vector<SlotId> partner(static_cast<std::size_t>(4 * live), -1);
  std::vector<std::uint8_t> parity(static_cast<std::size_t>(live));
  for (int c = 0; c < n; ++c) {
    if (removed_[static_cast<std::size_t>(c)]) continue;
    parity[static_cast<std::size_t>(out.crossing_map[static_cast<std::size_t>(c)])] = parity_[static_cast<std::size_t>(c)];
    for (int k = 0; k < 4; ++k) {
      const SlotId s = make_slot(c, k);
      SlotId p = partner_[static_cast<std::size_t>(s)];
      if (p < 0) throw Error(ErrorCode::malformed_code, "unconnected slot in rewrite");
      while (removed_[static_cast<std::size_t>(crossing_of(p))]) {
        visited[static_cast<std::size_t>(p)] = 1;
        const SlotId o = opposite(p);
        visited[static_cast<std::size_t>(o)] = 1;
        p = partner_[static_cast<std::size_t>(o)];
        if (p < 0) throw Error(ErrorCode::malformed_code, "unconnected slot in rewrite");
      }
      partner[static_cast<std::size_t>(remap(s))] = remap(p);
    }
  }
  // Strands running only through removed crossings close up into loops.
  int loops = loops_;
  for (int c = 0; c < n; ++c) {
    if (!removed_[static_cast<std::size_t>(c)]) continue;
    for (int k = 0; k < 4; ++k) {
      const SlotId s = make_slot(c, k);
      if (visited[static_cast<std::size_t>(s)]) continue;
      ++loops;
      SlotId p = s;
      do {
        visited[static_cast<std::size_t>(p)] = 1;
        const SlotId o = opposite(p);
        visited[static_cast<std::size_t>(o)] = 1;
        p = partner_[static_cast<std::size_t>(o)];
      } while (p != s);
    }
  }
  CornerId outer = -1;
  if (outer_ >= 0 && outer_ < 4 * n && !removed_[static_cast<std::size_t>(crossing_of(outer_))]) outer = remap(outer_);
  out.diagram = PlanarDiagram::from_partners(std::move(partner), std::move(parity), loops, outer);
  return out;
}

}  // namespace knotslice
