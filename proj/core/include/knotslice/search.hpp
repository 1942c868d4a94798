#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "knotslice/bands.hpp"
#include "knotslice/diagram.hpp"
#include "knotslice/moves.hpp"

namespace knotslice {

enum class MirrorMode { both, only_input };

struct SearchConfig {
  int max_bands = 6;
  std::size_t max_states = 100000;
  std::size_t simplify_budget = 10000;
  int max_passages = 1;  // strands a band core may cross
  MirrorMode mirror = MirrorMode::both;
  bool seedless = true;  // no randomness is used anywhere; kept for the CLI

  bool operator==(const SearchConfig&) const = default;
};

enum class VerdictKind { obstructed, algorithmically_ribbon, unknown };
enum class ObstructionCheck { no_embedding, coset_failure };
enum class UnknownReason { exhausted, budget };

std::string_view to_string(VerdictKind k);
std::string_view to_string(ObstructionCheck k);
std::string_view to_string(UnknownReason k);

struct Obstruction {
  ObstructionCheck check = ObstructionCheck::no_embedding;
  // False: the positive definite colouring of the input diagram; true: the
  // other colouring, i.e. the positive definite side of the mirror.
  bool on_mirror = false;
  bool operator==(const Obstruction&) const = default;
};

struct CertificateStep {
  BandMove band;
  std::vector<Move> moves;  // simplification after the band
  std::string pd;           // diagram after the moves
  bool operator==(const CertificateStep&) const = default;
};

struct Certificate {
  std::vector<CertificateStep> steps;
  std::string final_pd;
  bool operator==(const Certificate&) const = default;
};

struct SearchStats {
  std::size_t states = 0;
  std::size_t bands_tried = 0;
  std::size_t bands_obstructed = 0;
  bool operator==(const SearchStats&) const = default;
};

struct Verdict {
  VerdictKind kind = VerdictKind::unknown;
  std::optional<Obstruction> obstruction;
  std::optional<Certificate> certificate;
  UnknownReason reason = UnknownReason::exhausted;
  SearchStats stats;
  bool operator==(const Verdict&) const = default;
};

// Step (1) on both colourings, then depth-first band search. Throws
// NotAKnot or NotAlternating.
Verdict classify(const PlanarDiagram& d, const SearchConfig& cfg = {});

// Re-applies every band and move; true iff each applies, each band raises
// the nullity by one and the end is the crossingless unlink with one more
// component than there are bands.
bool replay(const PlanarDiagram& d, const Certificate& cert);

// When the band's region is white in the positive definite colouring the
// data is checked there, otherwise against the mirror's lattice. Bands on
// non-alternating or split diagrams, or without computable data, are never
// obstructed.
struct ObstructionContext {
  Colouring positive;
  Colouring negative;
  std::vector<Embedding> positive_embeddings;  // passing the coset test
  std::vector<Embedding> negative_embeddings;
  bool check_negative = true;
};

ObstructionContext obstruction_context(const PlanarDiagram& d);
bool is_band_obstructed(const PlanarDiagram& d, const ObstructionContext& ctx, const BandMove& b);

}  // namespace knotslice
