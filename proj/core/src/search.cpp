#include "knotslice/search.hpp"

#include <algorithm>
#include <set>

#include "knotslice/goeritz.hpp"

namespace knotslice {

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::obstructed: return "Obstructed";
    case VerdictKind::algorithmically_ribbon: return "AlgorithmicallyRibbon";
    case VerdictKind::unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(ObstructionCheck k) {
  return k == ObstructionCheck::no_embedding ? "no_embedding" : "coset_failure";
}

std::string_view to_string(UnknownReason k) { return k == UnknownReason::exhausted ? "exhausted" : "budget"; }

namespace {

Lattice negated(const GoeritzForm& g) { return Lattice{-g.reduced}; }

std::vector<Embedding> coset_good(std::vector<Embedding> all) {
  std::erase_if(all, [](const Embedding& e) { return !greene_jabuka(e).cosets_covered; });
  return all;
}

NewGeneratorData negated(NewGeneratorData data) {
  for (auto& x : data.pairings) x = -x;
  data.self_pairing = -data.self_pairing;
  return data;
}

}  // namespace

ObstructionContext obstruction_context(const PlanarDiagram& d) {
  ObstructionContext ctx;
  auto [pos, g_pos] = definite_colouring(d);
  ctx.positive = pos;
  ctx.negative = pos.complement();
  if (d.outer_region() >= 0 && ctx.negative.is_white(d.outer_region()))
    ctx.negative = ctx.negative.with_omitted(d.outer_region());
  const GoeritzForm g_neg = goeritz_hat(d, ctx.negative);
  ctx.positive_embeddings = coset_good(enumerate_embeddings(g_pos.lattice()));
  ctx.negative_embeddings = coset_good(enumerate_embeddings(negated(g_neg)));
  return ctx;
}

bool is_band_obstructed(const PlanarDiagram& d, const ObstructionContext& ctx, const BandMove& b) {
  if (b.sides[0] < 0) return false;
  const bool on_positive = ctx.positive.is_white(b.region);
  if (!on_positive && !ctx.check_negative) return false;
  try {
    if (on_positive) return band_obstructed(ctx.positive_embeddings, new_generator_data(d, ctx.positive, b));
    return band_obstructed(ctx.negative_embeddings, negated(new_generator_data(d, ctx.negative, b)));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::not_computable) return false;
    throw;
  }
}

namespace {

struct Searcher {
  const SearchConfig& cfg;
  const ObstructionContext& ctx;
  SearchStats stats;
  std::set<std::pair<std::string, int>> seen;
  std::vector<CertificateStep> path;
  bool out_of_budget = false;

  // True when a certificate has been completed in `path`.
  bool visit(const PlanarDiagram& d, int bands, bool at_root) {
    if (bands >= cfg.max_bands) return false;
    struct Child {
      int crossings;
      std::string canon;
      CertificateStep step;
      PlanarDiagram diagram;
    };
    std::vector<Child> children;
    for (const auto& b : enumerate_bands(d, cfg.max_passages)) {
      ++stats.bands_tried;
      if (at_root && is_band_obstructed(d, ctx, b)) {
        ++stats.bands_obstructed;
        continue;
      }
      const auto simplified = simplify(apply_band(d, b), cfg.simplify_budget);
      const PlanarDiagram& nd = simplified.diagram;
      std::string canon = canonical_form(nd);
      if (!seen.insert({canon, bands + 1}).second) continue;
      if (++stats.states > cfg.max_states) {
        out_of_budget = true;
        return false;
      }
      children.push_back({nd.crossing_count(), std::move(canon), {b, simplified.moves, nd.to_pd()}, nd});
    }
    std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
      return std::tie(a.crossings, a.canon) < std::tie(b.crossings, b.canon);
    });
    for (auto& ch : children) {
      path.push_back(ch.step);
      if (ch.diagram.is_crossingless() && ch.diagram.loop_count() == bands + 2) return true;
      if (!ch.diagram.is_crossingless() && visit(ch.diagram, bands + 1, false)) return true;
      path.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

Verdict classify(const PlanarDiagram& d, const SearchConfig& cfg) {
  if (d.component_count() != 1) throw Error(ErrorCode::not_a_knot, "classification needs a knot");
  if (alternation_stats(d).nonalternating_count != 0)
    throw Error(ErrorCode::not_alternating, "classification needs an alternating diagram");
  Verdict v;
  if (d.is_crossingless()) {
    v.kind = VerdictKind::algorithmically_ribbon;
    v.certificate = Certificate{{}, d.to_pd()};
    return v;
  }
  ObstructionContext ctx = obstruction_context(d);
  ctx.check_negative = cfg.mirror == MirrorMode::both;

  // Step (1): embedding existence and the coset condition on each side.
  const auto [pos, g_pos] = definite_colouring(d);
  const GoeritzForm g_neg = goeritz_hat(d, ctx.negative);
  const std::vector<std::pair<Lattice, bool>> sides = {{g_pos.lattice(), false}, {negated(g_neg), true}};
  for (const auto& [lattice, on_mirror] : sides) {
    if (on_mirror && !ctx.check_negative) continue;
    const auto& good = on_mirror ? ctx.negative_embeddings : ctx.positive_embeddings;
    if (good.empty()) {
      v.kind = VerdictKind::obstructed;
      v.obstruction = Obstruction{has_embedding(lattice) ? ObstructionCheck::coset_failure : ObstructionCheck::no_embedding,
                                  on_mirror};
      return v;
    }
  }

  Searcher s{cfg, ctx, {}, {}, {}, false};
  s.seen.insert({canonical_form(d), 0});
  const bool found = s.visit(d, 0, true);
  v.stats = s.stats;
  if (found) {
    v.kind = VerdictKind::algorithmically_ribbon;
    Certificate cert;
    cert.steps = std::move(s.path);
    cert.final_pd = cert.steps.back().pd;
    v.certificate = std::move(cert);
  } else {
    v.kind = VerdictKind::unknown;
    v.reason = s.out_of_budget ? UnknownReason::budget : UnknownReason::exhausted;
  }
  return v;
}

bool replay(const PlanarDiagram& d, const Certificate& cert) {
  try {
    PlanarDiagram cur = d;
    int null = nullity(cur);
    for (const auto& step : cert.steps) {
      cur = apply_band(cur, step.band);
      const int next = nullity(cur);
      if (next != null + 1) return false;
      null = next;
      for (const auto& m : step.moves) cur = apply_move(cur, m);
      if (!step.pd.empty() && step.pd != cur.to_pd()) return false;
    }
    if (!cert.final_pd.empty() && cert.final_pd != cur.to_pd()) return false;
    return cur.is_crossingless() && cur.loop_count() == static_cast<int>(cert.steps.size()) + 1;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace knotslice
