#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotslice/diagram.hpp"

namespace knotslice {

enum class MoveKind : std::uint8_t {
  r1_reduce,
  r2_reduce,
  flype,
  untongue,
  r1_stabilize,
  r2_stabilize,
  tongue,
};

std::string_view to_string(MoveKind k);
// Throws MalformedCode on an unknown name.
MoveKind move_kind_from_string(std::string_view name);

// A pattern match. Anchor layout per kind:
//   r1_reduce     {slot k of the kink crossing whose partner is k + 1}
//   r2_reduce     {corner of the bigon}
//   flype         {slot k of the flyping crossing, side slot of f, side slot of e}
//   untongue      {corner of the triangle, corner of the bigon after R3}
//   r1_stabilize  {edge slot or -1 - loop, side 0/1, under parity}
//   r2_stabilize  {side A, side B, under parity}; a negative side is -1 - loop
//   tongue        {side A, side B, under parity, corner of the triangle after R2}
struct Move {
  MoveKind kind = MoveKind::r1_reduce;
  std::vector<int> anchor;

  bool operator==(const Move&) const = default;
  auto operator<=>(const Move&) const = default;
};

std::string to_string(const Move& m);

struct MoveInfo {
  std::string_view name;
  bool reducing = false;  // lowers the crossing count
  bool active = false;    // used by simplify
};

// Every move kind known to the library, including the two Tsukamoto-type
// reductions that are recorded but not implemented (kind = nullopt).
struct RegistryEntry {
  std::optional<MoveKind> kind;
  MoveInfo info;
};
const std::vector<RegistryEntry>& move_registry();

class MoveSet {
 public:
  constexpr MoveSet() = default;
  constexpr MoveSet(std::initializer_list<MoveKind> kinds) {
    for (auto k : kinds) bits_ |= bit(k);
  }
  constexpr bool contains(MoveKind k) const noexcept { return (bits_ & bit(k)) != 0; }
  // Active reductions plus flypes.
  static MoveSet simplification() {
    return {MoveKind::r1_reduce, MoveKind::r2_reduce, MoveKind::flype, MoveKind::untongue};
  }
  static MoveSet stabilizations() { return {MoveKind::r1_stabilize, MoveKind::r2_stabilize, MoveKind::tongue}; }
  static MoveSet all() { return MoveSet(simplification().bits_ | stabilizations().bits_); }

 private:
  constexpr explicit MoveSet(std::uint32_t bits) : bits_(bits) {}
  static constexpr std::uint32_t bit(MoveKind k) { return 1u << static_cast<unsigned>(k); }
  std::uint32_t bits_ = 0;
};

// All matches of the given kinds, deterministic order (by kind, then anchor).
std::vector<Move> applicable_moves(const PlanarDiagram& d, MoveSet kinds = MoveSet::simplification());

// Throws Inapplicable unless mv is among applicable_moves(d, {mv.kind}).
PlanarDiagram apply_move(const PlanarDiagram& d, const Move& mv);

// Same without the membership check; throws Inapplicable when the anchor
// does not describe a valid match.
PlanarDiagram apply_move_unchecked(const PlanarDiagram& d, const Move& mv);

// Ordering key for simplification: (nonalternating count, crossing count).
struct SimplifyKey {
  int nonalternating = 0;
  int crossings = 0;
  auto operator<=>(const SimplifyKey&) const = default;
};
SimplifyKey simplify_key(const PlanarDiagram& d);

struct SimplifyResult {
  PlanarDiagram diagram;
  std::vector<Move> moves;  // path from the input to diagram
  std::size_t states = 0;   // states expanded
  bool budget_exhausted = false;
};

// Greedy key-lowering moves, then a best-first search over reductions and
// flypes memoized on canonical forms, expanding at most `budget` states.
SimplifyResult simplify(const PlanarDiagram& d, std::size_t budget = 10000);

// R3 on a triangle face, exposed for tests; nullopt when the triangle is
// not a valid R3 configuration.
std::optional<PlanarDiagram> reidemeister3(const PlanarDiagram& d, CornerId triangle_corner);

}  // namespace knotslice
