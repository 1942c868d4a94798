#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "knotslice/diagram.hpp"
#include "knotslice/error.hpp"
#include "support.hpp"

using namespace knotslice;

namespace {

// Same diagram with crossings renumbered and slots rotated by two.
PlanarDiagram relabelled(const PlanarDiagram& d, std::mt19937_64& rng) {
  const int n = d.crossing_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> shift(static_cast<std::size_t>(n));
  for (auto& s : shift) s = static_cast<int>(rng() % 2) * 2;
  auto map = [&](SlotId s) {
    const int c = crossing_of(s);
    return make_slot(perm[static_cast<std::size_t>(c)], slot_index(s) + shift[static_cast<std::size_t>(c)]);
  };
  std::vector<SlotId> partner(static_cast<std::size_t>(4 * n));
  std::vector<std::uint8_t> parity(static_cast<std::size_t>(n));
  for (SlotId s = 0; s < 4 * n; ++s) partner[static_cast<std::size_t>(map(s))] = map(d.partner(s));
  for (int c = 0; c < n; ++c) parity[static_cast<std::size_t>(perm[static_cast<std::size_t>(c)])] = d.crossing(c).under_parity;
  return PlanarDiagram::from_partners(partner, parity, d.loop_count());
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("trefoil from its DT code") {
    const auto d = parse_dt("4 6 2");
    CHECK(d.crossing_count() == 3);
    CHECK(d.component_count() == 1);
    CHECK(d.regions().size() == 5);
    CHECK(d.is_connected());
    CHECK(alternation_stats(d).is_alternating);
  }

  TEST_CASE("every table diagram is a connected alternating knot") {
    for (const auto& k : testing::knot_table()) {
      const auto d = parse_dt(k.dt);
      CAPTURE(k.name);
      CHECK(d.component_count() == 1);
      CHECK(d.is_connected());
      CHECK(static_cast<int>(d.regions().size()) == d.crossing_count() + 2);
      CHECK(alternation_stats(d).nonalternating_count == 0);
      const auto [a, b] = chessboard(d);
      CHECK(is_chessboard(d, a));
      CHECK(is_chessboard(d, b));
      // Alternating: one colouring sees every crossing with the same sign.
      int plus = 0;
      for (int c = 0; c < d.crossing_count(); ++c) plus += crossing_sign(d, a, c) > 0;
      CHECK((plus == 0 || plus == d.crossing_count()));
    }
  }

  TEST_CASE("PD text round trips") {
    for (const auto& k : testing::knot_table(8)) {
      const auto d = parse_dt(k.dt);
      const auto back = parse_pd(d.to_pd());
      CHECK(canonical_form(back) == canonical_form(d));
      CHECK(back.to_pd() == d.to_pd());
    }
    const auto hopf = parse_pd("X[1,3,2,4] X[3,1,4,2]");
    CHECK(hopf.component_count() == 2);
    const auto unknot = parse_pd("L[1]");
    CHECK(unknot.is_crossingless());
    CHECK(unknot.component_count() == 1);
  }

  TEST_CASE("canonical form ignores labels") {
    std::mt19937_64 rng(3);
    for (const auto& k : testing::knot_table(9)) {
      const auto d = parse_dt(k.dt);
      CHECK(canonical_form(relabelled(d, rng)) == canonical_form(d));
    }
    CHECK(canonical_form(parse_dt("4 6 2")) != canonical_form(parse_dt("4 6 8 2")));
  }

  TEST_CASE("mirror swaps crossing signs") {
    const auto d = parse_dt("4 8 12 10 2 6");
    const auto m = mirror(d);
    const auto [a, b] = chessboard(d);
    for (int c = 0; c < d.crossing_count(); ++c) CHECK(crossing_sign(m, a, c) == -crossing_sign(d, a, c));
    CHECK(canonical_form(mirror(m)) == canonical_form(d));
  }

  TEST_CASE("split names and codes") {
    const auto nc = split_name("6_1: 4 8 12 10 2 6\r");
    CHECK(nc.name == "6_1");
    CHECK(nc.code == "4 8 12 10 2 6");
    CHECK(split_name("4 6 2").name.empty());
  }

  TEST_CASE("malformed codes are rejected") {
    auto code_of = [](auto&& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::invalid_embedding;
    };
    CHECK(code_of([] { parse_dt("bogus"); }) == ErrorCode::malformed_code);
    CHECK(code_of([] { parse_dt("4 6 3"); }) == ErrorCode::malformed_code);
    CHECK(code_of([] { parse_dt("4 4 2"); }) == ErrorCode::malformed_code);
    CHECK(code_of([] { parse_pd("X[1,2,3"); }) == ErrorCode::malformed_code);
    CHECK(code_of([] { parse_pd("X[1,2,3,4]"); }) == ErrorCode::malformed_code);
  }

  TEST_CASE("Tait graph construction") {
    const auto f = testing::stevedore();
    CHECK(f.diagram.crossing_count() == 6);
    CHECK(f.diagram.component_count() == 1);
    const auto dt = canonical_form(parse_dt("4 8 12 10 2 6"));
    CHECK((canonical_form(f.diagram) == dt || canonical_form(mirror(f.diagram)) == dt));
    const auto c = testing::colouring_with_white(f.diagram, f.vertex_regions);
    for (int x = 0; x < f.diagram.crossing_count(); ++x) CHECK(crossing_sign(f.diagram, c, x) == 1);
  }
}
