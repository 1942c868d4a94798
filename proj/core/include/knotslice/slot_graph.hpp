#pragma once

#include <cstdint>
#include <vector>

#include "knotslice/diagram.hpp"

namespace knotslice {

// Mutable rotation-system workspace used by every rewrite. Crossings keep
// their indices while editing; removed crossings become pass-through points
// whose opposite slots are joined when the diagram is rebuilt, so removing
// the two crossings of a bigon or the crossing of a kink rewires the
// strands directly.
class SlotGraph {
 public:
  SlotGraph() = default;
  explicit SlotGraph(const PlanarDiagram& d);

  int crossing_count() const noexcept { return static_cast<int>(parity_.size()); }
  int add_crossing(std::uint8_t under_parity);
  void remove_crossing(int c);
  bool is_removed(int c) const { return removed_[static_cast<std::size_t>(c)] != 0; }
  void add_loops(int k) { loops_ += k; }
  int loops() const noexcept { return loops_; }

  SlotId partner(SlotId s) const { return partner_[static_cast<std::size_t>(s)]; }
  void connect(SlotId a, SlotId b);

  std::uint8_t under_parity(int c) const { return parity_[static_cast<std::size_t>(c)]; }
  void set_under_parity(int c, std::uint8_t p) { parity_[static_cast<std::size_t>(c)] = p; }

  void set_outer_corner(CornerId c) { outer_ = c; }

  struct Result {
    PlanarDiagram diagram;
    // New index of every workspace crossing, -1 for removed ones.
    std::vector<int> crossing_map;
  };
  // Throws NonPlanar when the edited rotation system is not spherical.
  Result build() const;

 private:
  std::vector<SlotId> partner_;
  std::vector<std::uint8_t> parity_;
  std::vector<char> removed_;
  int loops_ = 0;
  CornerId outer_ = -1;
};

}  // namespace knotslice
