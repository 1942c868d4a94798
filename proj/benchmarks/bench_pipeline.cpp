#include <benchmark/benchmark.h>

#include <fstream>
#include <string>
#include <vector>

#include "knotslice/goeritz.hpp"
#include "knotslice/lattice.hpp"
#include "knotslice/moves.hpp"
#include "knotslice/search.hpp"

namespace {

using namespace knotslice;

std::vector<PlanarDiagram> table(int max_crossings) {
  std::vector<PlanarDiagram> out;
  std::ifstream in(std::string(KNOTSLICE_DATA_DIR) + "/alternating_le10.dt");
  std::string line;
  while (std::getline(in, line)) {
    const auto nc = split_name(line);
    if (nc.code.empty() || std::stoi(nc.name) > max_crossings) continue;
    out.push_back(parse_dt(nc.code));
  }
  return out;
}

const PlanarDiagram& stevedore() {
  static const PlanarDiagram d = parse_dt("4 8 12 10 2 6");
  return d;
}

void BM_parse_dt(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_dt("4 10 14 12 2 8 6 16 20 18"));
}
BENCHMARK(BM_parse_dt);

void BM_canonical_form(benchmark::State& state) {
  const auto d = parse_dt("4 10 14 12 2 8 6 16 20 18");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_canonical_form);

void BM_definite_goeritz(benchmark::State& state) {
  const auto knots = table(10);
  for (auto _ : state)
    for (const auto& d : knots) benchmark::DoNotOptimize(definite_colouring(d));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(knots.size()));
}
BENCHMARK(BM_definite_goeritz)->Unit(benchmark::kMillisecond);

void BM_enumerate_embeddings(benchmark::State& state) {
  const auto g = definite_colouring(parse_dt("4 8 12 2 16 14 6 10")).second.lattice();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_embeddings(g));
}
BENCHMARK(BM_enumerate_embeddings);

void BM_simplify_tongue(benchmark::State& state) {
  const auto d = stevedore();
  const auto up = apply_move(d, applicable_moves(d, {MoveKind::tongue}).front());
  for (auto _ : state) benchmark::DoNotOptimize(simplify(up));
}
BENCHMARK(BM_simplify_tongue)->Unit(benchmark::kMicrosecond);

void BM_classify_stevedore(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(stevedore()));
}
BENCHMARK(BM_classify_stevedore)->Unit(benchmark::kMillisecond);

void BM_census(benchmark::State& state) {
  const auto knots = table(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& d : knots) benchmark::DoNotOptimize(classify(d));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(knots.size()));
}
BENCHMARK(BM_census)->Arg(8)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
