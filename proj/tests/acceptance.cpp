// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "knotslice/bands.hpp"
#include "knotslice/goeritz.hpp"
#include "knotslice/lattice.hpp"
#include "knotslice/moves.hpp"
#include "knotslice/search.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace knotslice;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

using Criterion = std::function<void(Outcome&)>;

Integer link_det(const PlanarDiagram& d) {
  if (!d.is_connected() || d.is_crossingless()) return d.piece_count() == 1 ? 1 : 0;
  return abs(determinant(goeritz_hat(d, chessboard(d).first)));
}

// Step (1) status of an alternating knot diagram.
bool gate_obstructed(const PlanarDiagram& d) {
  const auto ctx = obstruction_context(d);
  return ctx.positive_embeddings.empty() || ctx.negative_embeddings.empty();
}

void goeritz_example(Outcome& out) {
  const auto f = testing::goeritz_example();
  const auto c = testing::colouring_with_white(f.diagram, f.vertex_regions);
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = goeritz_hat(f.diagram, c);
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
  out.require(g.hat == IntMatrix{{2, -1, -1}, {-1, -2, 3}, {-1, 3, -2}}, "hat matrix");
  out.require(g.reduced == IntMatrix{{-2, 3}, {3, -2}}, "reduced matrix");
  out.require(us < 1000, "goeritz_hat under 1 ms");
  out.note << "hat " << g.hat.to_array_text() << " G " << g.reduced.to_array_text() << " in " << us << " us";
}

void stevedore_pipeline(Outcome& out) {
  const auto f = testing::stevedore();
  const auto c = testing::colouring_with_white(f.diagram, f.vertex_regions);
  const auto g = goeritz_hat(f.diagram, c);
  out.require(g.reduced == IntMatrix{{5, -1}, {-1, 2}}, "G = [[5,-1],[-1,2]]");
  const auto embs = enumerate_embeddings(g.lattice());
  out.require(embs.size() == 1, "exactly one embedding orbit");
  if (embs.size() != 1) return;
  const auto& e = embs[0];
  out.require(e.image(0) == IntVector{2, 1} && e.image(1) == IntVector{-1, 1}, "orbit {(2,1),(-1,1)}");
  out.require(oracle::all_embeddings(g.reduced).size() == oracle::orbit(e.matrix()).size(), "orbit covers all");

  const BandMove purple{1, {14, 22}, 0, {}};
  const auto pd = new_generator_data(f.diagram, c, purple);
  const auto x = solve_rational(e.matrix().transposed(), pd.pairings);
  out.require(x && (*x)[0] == Rational(1, 3) && (*x)[1] == Rational(-2, 3), "purple solution (1/3,-2/3)");
  out.require(band_obstructed(embs, pd), "purple band obstructed");

  const BandMove good{1, {10, 22}, -1, {}};
  const auto gd = new_generator_data(f.diagram, c, good);
  out.require(extend(e, gd.pairings, gd.self_pairing) == std::vector<IntVector>{{0, -1}}, "good solution (0,-1)");
  out.require(!band_obstructed(embs, gd), "good band unobstructed");

  const auto d = parse_dt("4 8 12 10 2 6");
  const auto v = classify(d);
  out.require(v.kind == VerdictKind::algorithmically_ribbon, "classify ribbon");
  out.require(v.certificate && v.certificate->steps.size() == 1 && replay(d, *v.certificate), "1-band replay");
  out.note << "bands tried " << v.stats.bands_tried;
}

void small_obstructed(Outcome& out) {
  for (const auto& [name, code] : std::vector<std::pair<std::string, std::string>>{{"4_1", "4 6 8 2"}, {"3_1", "4 6 2"}}) {
    const auto d = parse_dt(code);
    const auto v = classify(d);
    out.require(v.kind == VerdictKind::obstructed && v.obstruction &&
                    v.obstruction->check == ObstructionCheck::no_embedding,
                name + " obstructed by missing embedding");
    // Oracle: no embedding on either side.
    const auto [pc, pg] = definite_colouring(d);
    const auto ng = goeritz_hat(d, pc.complement());
    out.require(oracle::all_embeddings(pg.reduced).empty() && oracle::all_embeddings(-ng.reduced).empty(),
                name + " brute force finds no embedding");
    out.note << name << " det " << determinant(pg) << " ";
  }
}

void definite_suite(Outcome& out) {
  int n = 0;
  for (const auto& k : testing::knot_table()) {
    const auto d = parse_dt(k.dt);
    const auto [a, b] = chessboard(d);
    const auto ga = goeritz_hat(d, a);
    const auto gb = goeritz_hat(d, b);
    const bool a_pos = is_positive_definite(ga.reduced), b_pos = is_positive_definite(gb.reduced);
    const bool a_neg = is_positive_definite(-ga.reduced), b_neg = is_positive_definite(-gb.reduced);
    out.require(a_pos != b_pos && (a_pos ? b_neg : a_neg), k.name + " one definite colouring of each sign");
    out.require(determinant(ga) != 0 && determinant(gb) != 0, k.name + " nonzero determinant");
    ++n;
  }
  out.require(n == 196, "table has 196 diagrams");
  out.note << n << " diagrams";
}

void embedding_oracle(Outcome& out) {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<int> off(-2, 2), diag(1, 5);
  int with = 0, without = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(1 + trial % 4);
    IntMatrix g;
    if (trial % 2 == 0) {
      g = testing::random_definite_gram(rng, n);
    } else {
      // A random definite form, which need not embed.
      do {
        g = IntMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i) {
          g(i, i) = diag(rng);
          for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i) = off(rng);
        }
      } while (!is_positive_definite(g));
    }
    const auto reps = enumerate_embeddings(Lattice{g});
    std::set<oracle::MatrixKey> expanded;
    for (const auto& e : reps) {
      const auto o = oracle::orbit(e.matrix());
      expanded.insert(o.begin(), o.end());
      out.require(e.gram() == g, "A^T A = G");
      const Integer da = determinant(e.matrix());
      out.require(da * da == determinant(g), "|det A|^2 = det G");
    }
    out.require(expanded == oracle::all_embeddings(g), "orbit-expanded set equals brute force");
    (reps.empty() ? without : with) += 1;
  }
  out.note << with << " with embeddings, " << without << " without";
}

void greene_jabuka_suite(Outcome& out) {
  std::size_t count = 0;
  for (const auto& k : testing::knot_table()) {
    const auto d = parse_dt(k.dt);
    const auto [pc, pg] = definite_colouring(d);
    const auto ng = goeritz_hat(d, pc.complement());
    for (const Lattice& lat : {pg.lattice(), Lattice{-ng.reduced}}) {
      for (const auto& e : enumerate_embeddings(lat)) {
        const oracle::CosetOracle o(e.matrix());
        out.require(Integer(o.count()) == e.index(), k.name + " coset count = |det A|");
        out.require(Integer(coset_representatives(e).size()) == e.index(), k.name + " representatives");
        out.require(greene_jabuka(e).cosets_covered == o.cube_covers(), k.name + " cube test agrees");
        ++count;
      }
    }
  }
  const Embedding stevedore(IntMatrix{{2, -1}, {1, 1}});
  out.require(greene_jabuka(stevedore).cosets_covered && oracle::CosetOracle(stevedore.matrix()).cube_covers(),
              "stevedore embedding passes the cube test");
  out.note << count << " embeddings checked";
}

// A random match: kinds are tried in random order and the first kind that
// applies gives a uniformly chosen match.
std::optional<Move> random_move(const PlanarDiagram& d, std::vector<MoveKind> kinds, std::mt19937_64& rng) {
  std::shuffle(kinds.begin(), kinds.end(), rng);
  for (auto k : kinds)
    if (auto m = applicable_moves(d, {k}); !m.empty()) return m[rng() % m.size()];
  return std::nullopt;
}

void tsukamoto_corpus(Outcome& out) {
  std::mt19937_64 rng(777);
  const std::vector<MoveKind> growth{MoveKind::r1_stabilize, MoveKind::r2_stabilize, MoveKind::tongue, MoveKind::flype};
  std::set<std::string> seen;
  std::vector<PlanarDiagram> corpus;
  for (int walk = 0; walk < 2000 && corpus.size() < 200; ++walk) {
    PlanarDiagram d = PlanarDiagram::unlink(2);
    for (int s = 0; s < 10; ++s) {
      const auto mv = random_move(d, growth, rng);
      if (!mv) break;
      const auto nd = apply_move(d, *mv);
      if (nd.crossing_count() > 12) break;
      d = nd;
      if (d.component_count() == 2 && alternation_stats(d).nonalternating_count == 1 &&
          seen.insert(canonical_form(d)).second)
        corpus.push_back(d);
    }
  }
  out.require(corpus.size() >= 100, "at least 100 instances");
  int reduced = 0, max_crossings = 0;
  for (const auto& d : corpus) {
    max_crossings = std::max(max_crossings, d.crossing_count());
    const auto s = simplify(d);
    const bool ok = s.diagram.is_crossingless() && s.diagram.loop_count() == 2;
    reduced += ok;
    if (!ok && out.ok) out.note << "stuck on " << d.to_pd() << "; ";
  }
  out.require(reduced == static_cast<int>(corpus.size()), "every instance reaches the crossingless diagram");
  out.note << reduced << "/" << corpus.size() << " reduced, up to " << max_crossings << " crossings";
}

void census(Outcome& out) {
  int ribbon = 0, obstructed = 0, unknown = 0, knots = 0;
  for (const auto& k : testing::knot_table(9)) {
    const auto d = parse_dt(k.dt);
    const auto v = classify(d);
    ++knots;
    if (v.kind == VerdictKind::algorithmically_ribbon) {
      ++ribbon;
      out.require(v.certificate && replay(d, *v.certificate), k.name + " certificate replays");
    } else if (v.kind == VerdictKind::obstructed) {
      ++obstructed;
      out.require(!k.slice, k.name + " is slice but was obstructed");
    } else {
      ++unknown;
    }
    if (!is_perfect_square(Integer(k.det)))
      out.require(v.kind == VerdictKind::obstructed, k.name + " non-square determinant obstructed");
  }
  out.note << knots << " knots: " << ribbon << " ribbon, " << obstructed << " obstructed, " << unknown << " unknown";
}

void invariance(Outcome& out) {
  std::mt19937_64 rng(4242);
  std::vector<PlanarDiagram> pool;
  for (const auto& k : testing::knot_table(9)) {
    const auto d = parse_dt(k.dt);
    pool.push_back(d);
    const auto ups = applicable_moves(d, MoveSet::stabilizations());
    if (!ups.empty()) pool.push_back(apply_move(d, ups[rng() % ups.size()]));
  }
  std::vector<MoveKind> all_kinds;
  for (const auto& e : move_registry())
    if (e.kind) all_kinds.push_back(*e.kind);
  std::map<std::string, int> by_kind;
  int pairs = 0, gated = 0;
  while (pairs < 1000) {
    const auto& d = pool[rng() % pool.size()];
    const auto pick = random_move(d, all_kinds, rng);
    if (!pick) continue;
    const Move& mv = *pick;
    const auto nd = apply_move(d, mv);
    ++pairs;
    ++by_kind[std::string(to_string(mv.kind))];
    out.require(link_det(nd) == link_det(d), "|det| preserved by " + to_string(mv));
    out.require(nullity(nd) == nullity(d), "nullity preserved by " + to_string(mv));
    if (alternation_stats(d).nonalternating_count == 0 && alternation_stats(nd).nonalternating_count == 0) {
      ++gated;
      out.require(gate_obstructed(nd) == gate_obstructed(d), "obstruction preserved by " + to_string(mv));
    }
  }
  out.note << pairs << " pairs (" << gated << " alternating on both sides):";
  for (const auto& [k, n] : by_kind) out.note << ' ' << k << '=' << n;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    double limit_ms;
    Criterion run;
  };
  const std::vector<Entry> entries = {
      {1, "Goeritz worked example", 1000, goeritz_example},
      {2, "stevedore pipeline", 1000, stevedore_pipeline},
      {3, "figure-eight and trefoil obstructed", 1000, small_obstructed},
      {4, "definite colourings on the table", 60000, definite_suite},
      {5, "embedding enumeration against brute force", 120000, embedding_oracle},
      {6, "Greene-Jabuka coset counts", 60000, greene_jabuka_suite},
      {7, "almost-alternating unlink corpus simplifies", 120000, tsukamoto_corpus},
      {8, "census up to nine crossings", std::numeric_limits<double>::infinity(), census},
      {9, "move invariance", 60000, invariance},
  };
  bool all = true;
  for (const auto& e : entries) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(out);
    } catch (const std::exception& ex) {
      out.require(false, std::string("exception: ") + ex.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.require(ms < e.limit_ms, "time limit");
    all = all && out.ok;
    std::cout << "criterion " << e.id << " [" << e.title << "]: " << (out.ok ? "PASS" : "FAIL") << " (" << ms
              << " ms) " << out.note.str() << std::endl;
  }
  return all ? 0 : 1;
}
