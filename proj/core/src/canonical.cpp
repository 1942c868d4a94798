#include <algorithm>
#include <sstream>

#include "knotslice/diagram.hpp"

namespace knotslice {

namespace {

// Code of one crossing piece read from a starting slot, walking slots in
// the given rotational direction. Crossings are numbered in BFS order; each
// crossing contributes its under bit followed by (neighbour, entry offset)
// for its four slots.
std::vector<int> piece_code(const PlanarDiagram& d, SlotId start, int dir, int piece_size) {
  std::vector<int> label(static_cast<std::size_t>(d.crossing_count()), -1);
  std::vector<int> entry(static_cast<std::size_t>(d.crossing_count()), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(piece_size));
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(9 * piece_size));
  label[static_cast<std::size_t>(crossing_of(start))] = 0;
  entry[static_cast<std::size_t>(crossing_of(start))] = slot_index(start);
  order.push_back(crossing_of(start));
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int c = order[head];
    const int e = entry[static_cast<std::size_t>(c)];
    code.push_back(d.crossing(c).is_under(e) ? 1 : 0);
    for (int i = 0; i < 4; ++i) {
      const SlotId s = make_slot(c, e + dir * i);
      const SlotId p = d.partner(s);
      const int nc = crossing_of(p);
      if (label[static_cast<std::size_t>(nc)] < 0) {
        label[static_cast<std::size_t>(nc)] = static_cast<int>(order.size());
        entry[static_cast<std::size_t>(nc)] = slot_index(p);
        order.push_back(nc);
      }
      const int offset = (((slot_index(p) - entry[static_cast<std::size_t>(nc)]) * dir) % 4 + 4) % 4;
      code.push_back(label[static_cast<std::size_t>(nc)]);
      code.push_back(offset);
    }
  }
  return code;
}

}  // namespace

std::string canonical_form(const PlanarDiagram& d) {
  std::vector<std::vector<int>> pieces;
  for (int p = 0; p < d.crossing_piece_count(); ++p) {
    const auto crossings = d.crossings_in_piece(p);
    const int size = static_cast<int>(crossings.size());
    std::vector<int> best;
    for (const int c : crossings)
      for (int k = 0; k < 4; ++k)
        for (const int dir : {1, -1}) {
          auto code = piece_code(d, make_slot(c, k), dir, size);
          if (best.empty() || code < best) best = std::move(code);
        }
    best.insert(best.begin(), size);
    pieces.push_back(std::move(best));
  }
  std::sort(pieces.begin(), pieces.end());
  std::ostringstream os;
  os << 'L' << d.loop_count();
  for (const auto& code : pieces) {
    os << '|';
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (i) os << '.';
      os << code[i];
    }
  }
  return os.str();
}

}  // namespace knotslice
