#pragma once

#include <optional>
#include <vector>

#include "knotslice/moves.hpp"
#include "knotslice/slot_graph.hpp"

namespace knotslice::detail {

// Builds the workspace and picks an unbounded region when the old one was
// removed.
PlanarDiagram finish(const SlotGraph& g);

std::vector<Move> r1_matches(const PlanarDiagram& d);
PlanarDiagram apply_r1(const PlanarDiagram& d, const Move& mv);
std::vector<Move> r2_matches(const PlanarDiagram& d);
PlanarDiagram apply_r2(const PlanarDiagram& d, const Move& mv);

std::optional<PlanarDiagram> r3(const PlanarDiagram& d, CornerId corner);
std::vector<CornerId> r3_triangles(const PlanarDiagram& d);

std::vector<Move> flype_matches(const PlanarDiagram& d);
PlanarDiagram apply_flype(const PlanarDiagram& d, const Move& mv);

std::vector<Move> untongue_matches(const PlanarDiagram& d);
PlanarDiagram apply_untongue(const PlanarDiagram& d, const Move& mv);

std::vector<Move> r1_stabilize_matches(const PlanarDiagram& d);
PlanarDiagram apply_r1_stabilize(const PlanarDiagram& d, const Move& mv);
std::vector<Move> r2_stabilize_matches(const PlanarDiagram& d);
PlanarDiagram apply_r2_stabilize(const PlanarDiagram& d, const Move& mv);
std::vector<Move> tongue_matches(const PlanarDiagram& d);
PlanarDiagram apply_tongue(const PlanarDiagram& d, const Move& mv);

}  // namespace knotslice::detail
