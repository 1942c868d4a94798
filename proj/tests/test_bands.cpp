#include "doctest.h"
#include "knotslice/bands.hpp"
#include "knotslice/error.hpp"
#include "knotslice/goeritz.hpp"
#include "support.hpp"

using namespace knotslice;

namespace {

struct Stevedore {
  testing::TaitFixture f = testing::stevedore();
  Colouring c = testing::colouring_with_white(f.diagram, f.vertex_regions);
  Embedding e{IntMatrix{{2, -1}, {1, 1}}};
  int region = f.vertex_regions[0];
};

const BandMove good_band{1, {10, 22}, -1, {}};
const BandMove purple_band{1, {14, 22}, 0, {}};

}  // namespace

TEST_SUITE("bands") {
  TEST_CASE("stevedore good band") {
    Stevedore s;
    REQUIRE(s.region == good_band.region);
    const auto data = new_generator_data(s.f.diagram, s.c, good_band);
    CHECK(data.pairings == IntVector{-1, -1});
    CHECK(data.self_pairing == 1);
    CHECK(extend(s.e, data.pairings, data.self_pairing) == std::vector<IntVector>{{0, -1}});
    CHECK_FALSE(band_obstructed({s.e}, data));
    CHECK(keeps_near_alternating(s.f.diagram, good_band));
    const auto nd = apply_band(s.f.diagram, good_band);
    CHECK(nd.component_count() == 2);
    CHECK(nullity(nd) == 1);
    CHECK(alternation_stats(nd).nonalternating_count == 1);
  }

  TEST_CASE("stevedore purple band") {
    Stevedore s;
    const auto data = new_generator_data(s.f.diagram, s.c, purple_band);
    CHECK(data.pairings == IntVector{0, -1});
    // A^T x = (0,-1) has only the rational solution (1/3, -2/3).
    const auto x = solve_rational(s.e.matrix().transposed(), data.pairings);
    REQUIRE(x);
    CHECK((*x)[0] == Rational(1, 3));
    CHECK((*x)[1] == Rational(-2, 3));
    CHECK(band_obstructed({s.e}, data));
  }

  TEST_CASE("half twists add one crossing, passages two") {
    Stevedore s;
    const auto& d = s.f.diagram;
    int with_passage = 0;
    for (const auto& b : candidate_bands(d, 1)) {
      const auto res = apply_band_traced(d, b);
      const int added = 2 * static_cast<int>(b.passages.size()) + (b.half_twists != 0);
      CHECK(res.diagram.crossing_count() == d.crossing_count() + added);
      CHECK((res.twist_crossing >= 0) == (b.half_twists != 0));
      CHECK(static_cast<int>(res.diagram.regions().size()) ==
            res.diagram.crossing_count() + 2 * res.diagram.crossing_piece_count() + 2 * res.diagram.loop_count());
      if (!b.passages.empty()) {
        ++with_passage;
        if (s.c.is_white(b.region))
          CHECK_THROWS_AS(new_generator_data(d, s.c, b), Error);
      }
    }
    CHECK(with_passage > 0);
  }

  TEST_CASE("filtered bands raise the nullity by one") {
    Stevedore s;
    const auto& d = s.f.diagram;
    const auto bands = enumerate_bands(d);
    CHECK_FALSE(bands.empty());
    for (const auto& b : bands) {
      const auto nd = apply_band(d, b);
      CHECK(nullity(nd) == 1);
      CHECK(nd.component_count() == 2);
    }
    for (const auto& b : enumerate_bands(d, s.c)) CHECK(s.c.is_white(b.region));
  }

  TEST_CASE("invalid bands are rejected") {
    Stevedore s;
    const auto& d = s.f.diagram;
    CHECK_THROWS_AS(apply_band(d, BandMove{1, {10, 10}, 0, {}}), Error);
    CHECK_THROWS_AS(apply_band(d, BandMove{1, {10, d.partner(10)}, 0, {}}), Error);
    CHECK_THROWS_AS(apply_band(d, BandMove{1, {10, 22}, 2, {}}), Error);
    CHECK_THROWS_AS(apply_band(d, BandMove{0, {10, 22}, 0, {}}), Error);
    CHECK_THROWS_AS(apply_band(d, BandMove{1, {10, 999}, 0, {}}), Error);
  }

  TEST_CASE("bands on a lone loop") {
    const auto loop = PlanarDiagram::unknot();
    CHECK(apply_band(loop, BandMove{0, {-1, -1}, 0, {}}).loop_count() == 2);
    const auto kink = apply_band(loop, BandMove{0, {-1, -1}, 1, {}});
    CHECK(kink.crossing_count() == 1);
    CHECK(kink.component_count() == 1);
    CHECK(candidate_bands(loop).size() == 3);
  }
}
