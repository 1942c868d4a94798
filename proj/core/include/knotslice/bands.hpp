#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "knotslice/diagram.hpp"
#include "knotslice/lattice.hpp"

namespace knotslice {

// The band core crosses the edge at side slot `side` of the region it is
// currently in, passing over or under it.
struct BandPassage {
  SlotId side = -1;
  bool over = true;
  bool operator==(const BandPassage&) const = default;
  auto operator<=>(const BandPassage&) const = default;
};

// A band starting in `region` at side sides[0], crossing the passage edges
// in order and ending at side sides[1] of the region it has reached. The
// half twist sits just before the end. A negative side -1 - l stands for
// crossingless loop l, whose region is then ignored.
struct BandMove {
  int region = -1;
  std::array<int, 2> sides{};
  int half_twists = 0;  // -1, 0 or +1
  std::vector<BandPassage> passages;

  bool operator==(const BandMove&) const = default;
  auto operator<=>(const BandMove&) const = default;
};

std::string to_string(const BandMove& b);

struct BandResult {
  PlanarDiagram diagram;
  // The old crossings keep their indices; a half twist adds the last one.
  int twist_crossing = -1;
};

// Throws InvalidBand for anchors that do not describe a band of d.
BandResult apply_band_traced(const PlanarDiagram& d, const BandMove& b);
PlanarDiagram apply_band(const PlanarDiagram& d, const BandMove& b);

// Every band of the restricted form with at most `max_passages` passages,
// before filtering.
std::vector<BandMove> candidate_bands(const PlanarDiagram& d, int max_passages = 1);

// Whether applying b raises the nullity by one and keeps the diagram as
// close to alternating as possible (one more nonalternating crossing; a
// split result may have fewer).
bool keeps_near_alternating(const PlanarDiagram& d, const BandMove& b);

// Filtered bands lying in regions that are white under c.
std::vector<BandMove> enumerate_bands(const PlanarDiagram& d, const Colouring& c, int max_passages = 1);
// Filtered bands in every region.
std::vector<BandMove> enumerate_bands(const PlanarDiagram& d, int max_passages = 1);

struct NewGeneratorData {
  IntVector pairings;          // against v_1..v_m of the colouring's basis
  std::int64_t self_pairing = 0;
  bool operator==(const NewGeneratorData&) const = default;
};

// The band's region must be white under c: it splits into two white
// regions and the new generator is the half not containing the region's
// first corner. Throws NotComputable for bands with passages, when the
// result is split, or when the colouring does not extend.
NewGeneratorData new_generator_data(const PlanarDiagram& d, const Colouring& c, const BandMove& b);

// True iff no embedding in the list extends to the new generator.
bool band_obstructed(const std::vector<Embedding>& embeddings, const NewGeneratorData& data);

}  // namespace knotslice
