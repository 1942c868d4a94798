#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotslice/error.hpp"

namespace knotslice {

// A slot is one of the four edge-ends at a crossing: 4 * crossing + k, with
// k = 0..3 in counterclockwise order. A corner is the sector between slot k
// and slot k + 1 and shares the numbering of its first slot.
using SlotId = int;
using CornerId = int;

constexpr int crossing_of(SlotId s) noexcept { return s >> 2; }
constexpr int slot_index(SlotId s) noexcept { return s & 3; }
constexpr SlotId make_slot(int crossing, int k) noexcept { return 4 * crossing + (k & 3); }
constexpr SlotId opposite(SlotId s) noexcept { return make_slot(crossing_of(s), slot_index(s) + 2); }
constexpr SlotId next_ccw(SlotId s) noexcept { return make_slot(crossing_of(s), slot_index(s) + 1); }
constexpr SlotId next_cw(SlotId s) noexcept { return make_slot(crossing_of(s), slot_index(s) + 3); }

struct Crossing {
  // Edge labels in counterclockwise order.
  std::array<int, 4> edges{};
  // Slots whose index has this parity carry the under strand.
  std::uint8_t under_parity = 0;

  bool is_under(int k) const noexcept { return (k & 1) == under_parity; }
  bool operator==(const Crossing&) const = default;
};

enum class Colour : std::uint8_t { black, white };

constexpr Colour flip(Colour c) noexcept { return c == Colour::white ? Colour::black : Colour::white; }

struct Region {
  int id = 0;
  int piece = 0;
  // Corners met while walking the boundary with the region on the right.
  std::vector<CornerId> corners;
  // sides[i] is the slot through which the walk leaves corners[i]; every
  // slot is a side of exactly one region.
  std::vector<SlotId> sides;
  // For the two regions of a crossingless loop: the loop index, else -1.
  int loop = -1;
};

// Combinatorial link diagram on the sphere: a 4-valent rotation system with
// over/under data, plus crossingless loop components. Connected pieces are
// treated as lying on separate spheres (a split union). Values are
// immutable; all derived tables are computed on construction.
class PlanarDiagram {
 public:
  PlanarDiagram() { rebuild(); }

  static PlanarDiagram unknot() { return from_crossings({}, 1); }
  static PlanarDiagram unlink(int components) { return from_crossings({}, components); }

  // Crossings given with arbitrary edge labels; each label must occur in
  // exactly two slots. Throws MalformedCode or NonPlanar.
  static PlanarDiagram from_crossings(std::vector<Crossing> crossings, int loops,
                                      CornerId outer_corner = -1);

  // Standard PD tuples: counterclockwise, under strand in positions 0 and 2.
  static PlanarDiagram from_pd(const std::vector<std::array<int, 4>>& tuples, int loops = 0);

  // Rotation-system form: partner[s] is the slot joined to s by an edge.
  static PlanarDiagram from_partners(std::vector<SlotId> partner, std::vector<std::uint8_t> under_parity,
                                     int loops, CornerId outer_corner = -1);

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int loop_count() const noexcept { return loops_; }
  int edge_count() const noexcept { return 2 * crossing_count(); }
  int component_count() const noexcept { return components_; }
  bool is_crossingless() const noexcept { return crossings_.empty(); }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int c) const { return crossings_.at(static_cast<std::size_t>(c)); }
  SlotId partner(SlotId s) const { return partner_[static_cast<std::size_t>(s)]; }
  const std::vector<SlotId>& partners() const noexcept { return partner_; }
  int edge_of(SlotId s) const { return crossings_[static_cast<std::size_t>(crossing_of(s))].edges[static_cast<std::size_t>(slot_index(s))]; }
  bool is_under(SlotId s) const { return crossing(crossing_of(s)).is_under(slot_index(s)); }

  // Connected pieces: first the crossing pieces in order of their lowest
  // crossing, then one piece per crossingless loop.
  int piece_count() const noexcept { return piece_count_; }
  int crossing_piece_count() const noexcept { return piece_count_ - loops_; }
  int piece_of_crossing(int c) const { return piece_of_[static_cast<std::size_t>(c)]; }
  std::vector<int> crossings_in_piece(int piece) const;
  bool is_connected() const noexcept { return piece_count_ <= 1; }

  const std::vector<Region>& regions() const noexcept { return regions_; }
  int region_of_corner(CornerId c) const { return region_of_corner_[static_cast<std::size_t>(c)]; }
  // Region on the right of the side (slot) s.
  int region_of_side(SlotId s) const { return region_of_corner(next_cw(s)); }
  std::vector<int> regions_in_piece(int piece) const;

  // Distinguished unbounded region, -1 when unset.
  CornerId outer_corner() const noexcept { return outer_corner_; }
  int outer_region() const { return outer_corner_ < 0 ? -1 : region_of_corner(outer_corner_); }
  PlanarDiagram with_outer_corner(CornerId c) const;

  // Oriented PD text with edges relabelled 1.. along components and every
  // tuple starting at its incoming under strand; loops as L[i].
  std::string to_pd() const;

  bool operator==(const PlanarDiagram& o) const {
    return crossings_ == o.crossings_ && loops_ == o.loops_;
  }

 private:
  void rebuild();

  std::vector<Crossing> crossings_;
  int loops_ = 0;
  CornerId outer_corner_ = -1;

  std::vector<SlotId> partner_;
  std::vector<int> piece_of_;
  int piece_count_ = 0;
  int components_ = 0;
  std::vector<Region> regions_;
  std::vector<int> region_of_corner_;
};

// --- parsing -------------------------------------------------------------

// Dowker-Thistlethwaite code of a knot: n signed even integers whose
// absolute values are a permutation of 2..2n. Positive entries give an
// alternating diagram. Throws MalformedCode / NonRealizable.
PlanarDiagram parse_dt(std::span<const int> code);
PlanarDiagram parse_dt(std::string_view text);

// PD text: X[a,b,c,d] tuples (also bare [a,b,c,d] lists and a PD[...]
// wrapper) and L[i] crossingless loops. Throws MalformedCode / NonPlanar.
PlanarDiagram parse_pd(std::string_view text);

// One line of a knot list: optional "name:" prefix then a DT code.
struct NamedCode {
  std::string name;
  std::string code;
};
NamedCode split_name(std::string_view line);

// Builds the diagram whose Tait graph is the given plane multigraph. The
// rotation at each vertex lists incident edge indices counterclockwise; an
// edge sign is the crossing sign with the vertices coloured white.
struct TaitEdge {
  int u = 0;
  int v = 0;
  int sign = 1;
};
PlanarDiagram from_tait_graph(int vertex_count, const std::vector<TaitEdge>& edges,
                              const std::vector<std::vector<int>>& rotation);

// --- regions and colourings ---------------------------------------------

std::vector<Region> faces(const PlanarDiagram& d);

struct Colouring {
  std::vector<Colour> colour;  // indexed by region id
  // White regions in basis order; white_regions[0] plays the role of R_0.
  std::vector<int> white_regions;

  bool is_white(int region) const { return colour.at(static_cast<std::size_t>(region)) == Colour::white; }
  Colouring complement() const;
  // Same colours, R_0 moved to the given white region.
  Colouring with_omitted(int region) const;
  // Same colours, explicit basis order (must list every white region).
  Colouring with_order(std::vector<int> order) const;
  bool operator==(const Colouring&) const = default;
};

// The two chessboard colourings of a connected diagram; the one whose white
// set contains the unbounded region comes first. Throws Disconnected.
std::pair<Colouring, Colouring> chessboard(const PlanarDiagram& d);

// A chessboard colouring of every piece of a possibly split diagram; piece
// by piece, the colouring with the unbounded (or first) region white.
Colouring chessboard_all(const PlanarDiagram& d);

bool is_chessboard(const PlanarDiagram& d, const Colouring& c);

// Goeritz sign of a crossing: +1 when the corners swept by turning the over
// strand counterclockwise are white.
int crossing_sign(const PlanarDiagram& d, const Colouring& c, int crossing);

struct AlternationStats {
  bool is_alternating = true;
  int nonalternating_count = 0;
  bool operator==(const AlternationStats&) const = default;
};

// Per piece, the number of crossings in the minority sign class.
AlternationStats alternation_stats(const PlanarDiagram& d, const Colouring& c);
AlternationStats alternation_stats(const PlanarDiagram& d);

PlanarDiagram mirror(const PlanarDiagram& d);

// Relabel-, start- and reflection-invariant code of the diagram.
std::string canonical_form(const PlanarDiagram& d);

}  // namespace knotslice
