#pragma once

#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "knotslice/diagram.hpp"
#include "knotslice/goeritz.hpp"
#include "knotslice/matrix.hpp"

namespace knotslice::testing {

// Region holding Tait vertex `vertex`, read off a corner of edge `edge`.
inline int tait_region(const PlanarDiagram& d, const std::vector<TaitEdge>& edges, int edge, int vertex) {
  const bool west = edges[static_cast<std::size_t>(edge)].u == vertex;
  return d.region_of_corner(make_slot(edge, west ? 1 : 3));
}

// A colouring in which the given regions are white, in that order.
inline Colouring colouring_with_white(const PlanarDiagram& d, const std::vector<int>& order) {
  auto [a, b] = chessboard(d);
  return (a.is_white(order.front()) ? a : b).with_order(order);
}

struct TaitFixture {
  std::vector<TaitEdge> edges;
  std::vector<std::vector<int>> rotation;
  PlanarDiagram diagram;
  // Regions of the Tait vertices, by vertex.
  std::vector<int> vertex_regions;
};

inline TaitFixture make_tait(int vertices, std::vector<TaitEdge> edges, std::vector<std::vector<int>> rotation) {
  TaitFixture f{std::move(edges), std::move(rotation), {}, {}};
  f.diagram = from_tait_graph(vertices, f.edges, f.rotation);
  f.vertex_regions.assign(static_cast<std::size_t>(vertices), -1);
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    f.vertex_regions[static_cast<std::size_t>(f.edges[e].u)] = tait_region(f.diagram, f.edges, static_cast<int>(e), f.edges[e].u);
    f.vertex_regions[static_cast<std::size_t>(f.edges[e].v)] = tait_region(f.diagram, f.edges, static_cast<int>(e), f.edges[e].v);
  }
  return f;
}

// Five crossings: one positive edge from R_0 to each of R_1, R_2 and three
// negative edges between R_1 and R_2.
inline TaitFixture goeritz_example() {
  return make_tait(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}, {1, 2, -1}, {1, 2, -1}}, {{0, 1}, {0, 2, 3, 4}, {1, 4, 3, 2}});
}

// Stevedore knot: four parallel edges and a path of length two.
inline TaitFixture stevedore() {
  return make_tait(3, {{0, 1, 1}, {0, 1, 1}, {0, 1, 1}, {0, 1, 1}, {1, 2, 1}, {0, 2, 1}},
                   {{5, 3, 2, 1, 0}, {0, 1, 2, 3, 4}, {4, 5}});
}

// Connected sums of two trefoils: opposite and equal handedness.
inline PlanarDiagram square_knot() {
  return make_tait(4, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 3, 1}, {2, 3, 1}, {2, 3, 1}},
                   {{0, 2}, {1, 0}, {3, 4, 5, 2, 1}, {5, 4, 3}})
      .diagram;
}

inline PlanarDiagram granny_knot() {
  return make_tait(5, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 3, 1}, {3, 4, 1}, {4, 2, 1}},
                   {{0, 2}, {1, 0}, {3, 5, 2, 1}, {4, 3}, {5, 4}})
      .diagram;
}

struct TableKnot {
  std::string name;
  std::string dt;
  long det = 0;
  bool slice = false;
};

// Prime alternating knots up to ten crossings with determinants and slice
// status from the bundled table.
inline std::vector<TableKnot> knot_table(int max_crossings = 10) {
  std::map<std::string, std::pair<long, bool>> meta;
  {
    std::ifstream in(std::string(KNOTSLICE_DATA_DIR) + "/alternating_le10_meta.tsv");
    std::string name, genus;
    long det;
    std::string header;
    std::getline(in, header);
    while (in >> name >> det >> genus) meta[name] = {det, genus == "0"};
  }
  std::vector<TableKnot> out;
  std::ifstream in(std::string(KNOTSLICE_DATA_DIR) + "/alternating_le10.dt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto nc = split_name(line);
    const int n = std::stoi(nc.name.substr(0, nc.name.find('_')));
    if (n > max_crossings) continue;
    const auto it = meta.find(nc.name);
    out.push_back({nc.name, nc.code, it == meta.end() ? 0 : it->second.first, it != meta.end() && it->second.second});
  }
  return out;
}

// A random positive definite Gram matrix A^T A of rank n with small entries.
inline IntMatrix random_definite_gram(std::mt19937_64& rng, std::size_t n, int spread = 2) {
  std::uniform_int_distribution<int> entry(-spread, spread);
  for (;;) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    if (determinant(a) != 0) return a.transposed() * a;
  }
}

}  // namespace knotslice::testing
