#include "knotslice/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace knotslice {

namespace {

// Faces of the rotation system given by partner[], counted per crossing
// piece; returns false as soon as some piece violates V - E + F = 2.
bool rotation_is_planar(const std::vector<SlotId>& partner) {
  const int slots = static_cast<int>(partner.size());
  const int n = slots / 4;
  std::vector<int> piece(static_cast<std::size_t>(n), -1);
  std::vector<int> piece_size;
  for (int c = 0; c < n; ++c) {
    if (piece[static_cast<std::size_t>(c)] >= 0) continue;
    const int id = static_cast<int>(piece_size.size());
    piece_size.push_back(0);
    std::vector<int> stack{c};
    piece[static_cast<std::size_t>(c)] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      ++piece_size[static_cast<std::size_t>(id)];
      for (int k = 0; k < 4; ++k) {
        const int y = crossing_of(partner[static_cast<std::size_t>(make_slot(x, k))]);
        if (piece[static_cast<std::size_t>(y)] < 0) {
          piece[static_cast<std::size_t>(y)] = id;
          stack.push_back(y);
        }
      }
    }
  }
  std::vector<int> face_count(piece_size.size(), 0);
  std::vector<char> seen(static_cast<std::size_t>(slots), 0);
  for (int x = 0; x < slots; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    ++face_count[static_cast<std::size_t>(piece[static_cast<std::size_t>(crossing_of(x))])];
    int y = x;
    do {
      seen[static_cast<std::size_t>(y)] = 1;
      y = partner[static_cast<std::size_t>(next_ccw(y))];
    } while (y != x);
  }
  for (std::size_t p = 0; p < piece_size.size(); ++p)
    if (face_count[p] != piece_size[p] + 2) return false;
  return true;
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r' || ch == '\n' || ch == '[' || ch == ']' ||
        ch == '(' || ch == ')') {
      ++i;
      continue;
    }
    int value = 0;
    const char* begin = text.data() + i;
    const char* end = text.data() + text.size();
    if (*begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin)
      throw Error(ErrorCode::malformed_code, "unexpected character in code: '" + std::string(1, ch) + "'");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

// --- PlanarDiagram ----------------------------------------------------------

PlanarDiagram PlanarDiagram::from_crossings(std::vector<Crossing> crossings, int loops, CornerId outer_corner) {
  if (loops < 0) throw Error(ErrorCode::malformed_code, "negative loop count");
  std::map<int, std::vector<SlotId>> uses;
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    if (crossings[c].under_parity > 1) throw Error(ErrorCode::malformed_code, "bad under parity");
    for (int k = 0; k < 4; ++k) uses[crossings[c].edges[static_cast<std::size_t>(k)]].push_back(make_slot(static_cast<int>(c), k));
  }
  std::vector<SlotId> partner(crossings.size() * 4, -1);
  for (const auto& [label, slots] : uses) {
    if (slots.size() != 2)
      throw Error(ErrorCode::malformed_code,
                  "edge " + std::to_string(label) + " occurs in " + std::to_string(slots.size()) + " slot(s)");
    partner[static_cast<std::size_t>(slots[0])] = slots[1];
    partner[static_cast<std::size_t>(slots[1])] = slots[0];
  }
  std::vector<std::uint8_t> parity(crossings.size());
  for (std::size_t c = 0; c < crossings.size(); ++c) parity[c] = crossings[c].under_parity;
  return from_partners(std::move(partner), std::move(parity), loops, outer_corner);
}

PlanarDiagram PlanarDiagram::from_pd(const std::vector<std::array<int, 4>>& tuples, int loops) {
  std::vector<Crossing> crossings;
  crossings.reserve(tuples.size());
  for (const auto& t : tuples) crossings.push_back(Crossing{t, 0});
  return from_crossings(std::move(crossings), loops);
}

PlanarDiagram PlanarDiagram::from_partners(std::vector<SlotId> partner, std::vector<std::uint8_t> under_parity,
                                           int loops, CornerId outer_corner) {
  const std::size_t n = under_parity.size();
  if (partner.size() != 4 * n) throw Error(ErrorCode::malformed_code, "partner table size mismatch");
  for (std::size_t s = 0; s < partner.size(); ++s) {
    const SlotId p = partner[s];
    if (p < 0 || static_cast<std::size_t>(p) >= partner.size() || p == static_cast<SlotId>(s) ||
        partner[static_cast<std::size_t>(p)] != static_cast<SlotId>(s))
      throw Error(ErrorCode::malformed_code, "slot pairing is not an involution");
  }
  if (!rotation_is_planar(partner)) throw Error(ErrorCode::non_planar, "rotation system fails the Euler count");
  PlanarDiagram d;
  d.crossings_.assign(n, Crossing{});
  // Edge labels in order of first slot occurrence.
  int next_label = 0;
  std::vector<int> label(partner.size(), -1);
  for (std::size_t s = 0; s < partner.size(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next_label;
    label[static_cast<std::size_t>(partner[s])] = next_label;
    ++next_label;
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (int k = 0; k < 4; ++k) d.crossings_[c].edges[static_cast<std::size_t>(k)] = label[4 * c + static_cast<std::size_t>(k)];
    d.crossings_[c].under_parity = under_parity[c];
  }
  d.loops_ = loops;
  d.outer_corner_ = (outer_corner >= 0 && static_cast<std::size_t>(outer_corner) < 4 * n) ? outer_corner : -1;
  d.rebuild();
  return d;
}

void PlanarDiagram::rebuild() {
  const int n = crossing_count();
  partner_.assign(static_cast<std::size_t>(4 * n), -1);
  {
    std::vector<SlotId> first(static_cast<std::size_t>(2 * n), -1);
    for (int s = 0; s < 4 * n; ++s) {
      const int e = edge_of(s);
      if (first[static_cast<std::size_t>(e)] < 0) {
        first[static_cast<std::size_t>(e)] = s;
      } else {
        partner_[static_cast<std::size_t>(s)] = first[static_cast<std::size_t>(e)];
        partner_[static_cast<std::size_t>(first[static_cast<std::size_t>(e)])] = s;
      }
    }
  }
  // Pieces.
  piece_of_.assign(static_cast<std::size_t>(n), -1);
  int pieces = 0;
  for (int c = 0; c < n; ++c) {
    if (piece_of_[static_cast<std::size_t>(c)] >= 0) continue;
    std::vector<int> stack{c};
    piece_of_[static_cast<std::size_t>(c)] = pieces;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int k = 0; k < 4; ++k) {
        const int y = crossing_of(partner(make_slot(x, k)));
        if (piece_of_[static_cast<std::size_t>(y)] < 0) {
          piece_of_[static_cast<std::size_t>(y)] = pieces;
          stack.push_back(y);
        }
      }
    }
    ++pieces;
  }
  piece_count_ = pieces + loops_;
  // Components: strand cycles through crossings plus free loops.
  components_ = loops_;
  {
    std::vector<char> seen(static_cast<std::size_t>(4 * n), 0);
    for (int s = 0; s < 4 * n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      ++components_;
      int cur = s;
      do {
        seen[static_cast<std::size_t>(cur)] = 1;
        const int o = opposite(cur);
        seen[static_cast<std::size_t>(o)] = 1;
        cur = partner(o);
      } while (cur != s);
    }
  }
  // Regions.
  regions_.clear();
  region_of_corner_.assign(static_cast<std::size_t>(4 * n), -1);
  for (int x = 0; x < 4 * n; ++x) {
    if (region_of_corner_[static_cast<std::size_t>(x)] >= 0) continue;
    Region r;
    r.id = static_cast<int>(regions_.size());
    r.piece = piece_of_[static_cast<std::size_t>(crossing_of(x))];
    int y = x;
    do {
      region_of_corner_[static_cast<std::size_t>(y)] = r.id;
      r.corners.push_back(y);
      r.sides.push_back(next_ccw(y));
      y = partner(next_ccw(y));
    } while (y != x);
    regions_.push_back(std::move(r));
  }
  for (int l = 0; l < loops_; ++l) {
    for (int side = 0; side < 2; ++side) {
      Region r;
      r.id = static_cast<int>(regions_.size());
      r.piece = pieces + l;
      r.loop = l;
      regions_.push_back(std::move(r));
    }
  }
}

std::vector<int> PlanarDiagram::crossings_in_piece(int piece) const {
  std::vector<int> out;
  for (int c = 0; c < crossing_count(); ++c)
    if (piece_of_[static_cast<std::size_t>(c)] == piece) out.push_back(c);
  return out;
}

std::vector<int> PlanarDiagram::regions_in_piece(int piece) const {
  std::vector<int> out;
  for (const auto& r : regions_)
    if (r.piece == piece) out.push_back(r.id);
  return out;
}

PlanarDiagram PlanarDiagram::with_outer_corner(CornerId c) const {
  PlanarDiagram d = *this;
  d.outer_corner_ = (c >= 0 && c < 4 * crossing_count()) ? c : -1;
  return d;
}

std::string PlanarDiagram::to_pd() const {
  const int n = crossing_count();
  std::vector<int> label(static_cast<std::size_t>(2 * n), 0);
  std::vector<SlotId> incoming_under(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(4 * n), 0);
  int next = 1;
  for (int s = 0; s < 4 * n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int cur = s;
    do {
      seen[static_cast<std::size_t>(cur)] = 1;
      if (label[static_cast<std::size_t>(edge_of(cur))] == 0) label[static_cast<std::size_t>(edge_of(cur))] = next++;
      if (is_under(cur)) incoming_under[static_cast<std::size_t>(crossing_of(cur))] = cur;
      const int o = opposite(cur);
      seen[static_cast<std::size_t>(o)] = 1;
      cur = partner(o);
    } while (cur != s);
  }
  std::ostringstream os;
  bool first = true;
  for (int c = 0; c < n; ++c) {
    const SlotId start = incoming_under[static_cast<std::size_t>(c)];
    os << (first ? "" : ",") << "X[";
    first = false;
    for (int i = 0; i < 4; ++i) {
      if (i) os << ',';
      os << label[static_cast<std::size_t>(edge_of(make_slot(c, slot_index(start) + i)))];
    }
    os << ']';
  }
  for (int l = 0; l < loops_; ++l) {
    os << (first ? "" : ",") << "L[" << next++ << ']';
    first = false;
  }
  return os.str();
}

// --- parsing -------------------------------------------------------------------

NamedCode split_name(std::string_view line) {
  NamedCode out;
  const auto colon = line.find(':');
  std::string_view code = line;
  if (colon != std::string_view::npos) {
    std::string_view name = line.substr(0, colon);
    while (!name.empty() && (name.front() == ' ' || name.front() == '\t')) name.remove_prefix(1);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.remove_suffix(1);
    out.name = std::string(name);
    code = line.substr(colon + 1);
  }
  while (!code.empty() && (code.front() == ' ' || code.front() == '\t')) code.remove_prefix(1);
  while (!code.empty() && (code.back() == ' ' || code.back() == '\t' || code.back() == '\r' || code.back() == '\n'))
    code.remove_suffix(1);
  out.code = std::string(code);
  return out;
}

PlanarDiagram parse_dt(std::string_view text) {
  const auto ints = parse_ints(text);
  return parse_dt(std::span<const int>(ints));
}

PlanarDiagram parse_dt(std::span<const int> code) {
  const int n = static_cast<int>(code.size());
  if (n == 0) return PlanarDiagram::unknot();
  std::vector<int> mate(static_cast<std::size_t>(2 * n + 1), 0);
  for (int i = 0; i < n; ++i) {
    const int a = std::abs(code[static_cast<std::size_t>(i)]);
    if (a % 2 != 0 || a < 2 || a > 2 * n)
      throw Error(ErrorCode::malformed_code, "DT entry " + std::to_string(code[static_cast<std::size_t>(i)]) + " out of range");
    if (mate[static_cast<std::size_t>(a)] != 0) throw Error(ErrorCode::malformed_code, "DT entries repeat " + std::to_string(a));
    mate[static_cast<std::size_t>(a)] = 2 * i + 1;
    mate[static_cast<std::size_t>(2 * i + 1)] = a;
  }
  // Edge j runs from pass j to pass j + 1; pass p enters on edge p - 1.
  auto in_edge = [&](int p) { return p == 1 ? 2 * n : p - 1; };
  auto out_edge = [&](int p) { return p; };
  auto build = [&](std::uint32_t mask) {
    std::vector<Crossing> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const int p = 2 * i + 1;
      const int q = mate[static_cast<std::size_t>(p)];
      auto& x = xs[static_cast<std::size_t>(i)];
      if ((mask >> i) & 1u)
        x.edges = {in_edge(p), out_edge(q), out_edge(p), in_edge(q)};
      else
        x.edges = {in_edge(p), in_edge(q), out_edge(p), out_edge(q)};
      // Odd passes run under at positive entries.
      x.under_parity = code[static_cast<std::size_t>(i)] > 0 ? 0 : 1;
    }
    return xs;
  };
  if (n > 24) throw Error(ErrorCode::non_realizable, "DT codes above 24 crossings are not supported");
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    // Crossing 0 is fixed; flipping every bit only reflects the plane.
    const std::uint32_t full = mask << 1;
    auto xs = build(full);
    std::vector<SlotId> partner(static_cast<std::size_t>(4 * n));
    std::vector<SlotId> first(static_cast<std::size_t>(2 * n + 1), -1);
    for (int s = 0; s < 4 * n; ++s) {
      const int e = xs[static_cast<std::size_t>(crossing_of(s))].edges[static_cast<std::size_t>(slot_index(s))];
      if (first[static_cast<std::size_t>(e)] < 0) {
        first[static_cast<std::size_t>(e)] = s;
      } else {
        partner[static_cast<std::size_t>(s)] = first[static_cast<std::size_t>(e)];
        partner[static_cast<std::size_t>(first[static_cast<std::size_t>(e)])] = s;
      }
    }
    if (!rotation_is_planar(partner)) continue;
    PlanarDiagram d = PlanarDiagram::from_crossings(std::move(xs), 0);
    // The largest region is drawn as the unbounded one.
    const Region* best = nullptr;
    for (const auto& r : d.regions())
      if (best == nullptr || r.corners.size() > best->corners.size()) best = &r;
    return d.with_outer_corner(best->corners.front());
  }
  throw Error(ErrorCode::non_realizable, "DT code has no planar realization");
}

PlanarDiagram parse_pd(std::string_view text) {
  std::vector<std::array<int, 4>> tuples;
  int loops = 0;
  std::size_t i = 0;
  // Strip a PD[...] wrapper.
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  if (text.substr(i, 3) == "PD[" || text.substr(i, 3) == "PD(") {
    i += 3;
    const auto close = text.find_last_of("])");
    if (close == std::string_view::npos || close < i) throw Error(ErrorCode::malformed_code, "unterminated PD[");
    text = text.substr(i, close - i);
    i = 0;
  }
  // A single outer [...] around bare tuples.
  {
    std::string_view t = text;
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\n' || t.back() == '\r')) t.remove_suffix(1);
    if (t.size() >= 2 && t.front() == '[' && t[1] == '[' && t.back() == ']') text = t.substr(1, t.size() - 2);
    i = 0;
  }
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\n' || ch == '\r') {
      ++i;
      continue;
    }
    bool is_loop = false;
    if (ch == 'X' || ch == 'x' || ch == 'L' || ch == 'l') {
      is_loop = (ch == 'L' || ch == 'l');
      ++i;
    }
    if (i >= text.size() || (text[i] != '[' && text[i] != '('))
      throw Error(ErrorCode::malformed_code, "expected '[' in PD code");
    const char closing = text[i] == '[' ? ']' : ')';
    const auto close = text.find(closing, i);
    if (close == std::string_view::npos) throw Error(ErrorCode::malformed_code, "unterminated tuple in PD code");
    const auto values = parse_ints(text.substr(i + 1, close - i - 1));
    if (is_loop) {
      if (values.size() != 1) throw Error(ErrorCode::malformed_code, "L[...] takes one label");
      ++loops;
    } else {
      if (values.size() != 4) throw Error(ErrorCode::malformed_code, "crossing tuple needs four labels");
      tuples.push_back({values[0], values[1], values[2], values[3]});
    }
    i = close + 1;
  }
  return PlanarDiagram::from_pd(tuples, loops);
}

PlanarDiagram from_tait_graph(int vertex_count, const std::vector<TaitEdge>& edges,
                              const std::vector<std::vector<int>>& rotation) {
  if (static_cast<int>(rotation.size()) != vertex_count)
    throw Error(ErrorCode::malformed_code, "rotation must list every vertex");
  if (edges.empty()) return PlanarDiagram::unknot();
  const int n = static_cast<int>(edges.size());
  // Crossing e has slots [pred at v, succ at u, pred at u, succ at v] when
  // drawn with u on the west and v on the east.
  std::vector<SlotId> partner(static_cast<std::size_t>(4 * n), -1);
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < vertex_count; ++x) {
    const auto& rot = rotation[static_cast<std::size_t>(x)];
    const int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
      const int e = rot[static_cast<std::size_t>(i)];
      const int f = rot[static_cast<std::size_t>((i + 1) % deg)];
      if (e < 0 || e >= n || f < 0 || f >= n) throw Error(ErrorCode::malformed_code, "rotation names unknown edge");
      const auto& ee = edges[static_cast<std::size_t>(e)];
      const auto& ff = edges[static_cast<std::size_t>(f)];
      if (ee.u == ee.v) throw Error(ErrorCode::malformed_code, "Tait graph loops are not supported");
      const SlotId succ = make_slot(e, x == ee.u ? 1 : 3);
      const SlotId pred = make_slot(f, x == ff.u ? 2 : 0);
      partner[static_cast<std::size_t>(succ)] = pred;
      partner[static_cast<std::size_t>(pred)] = succ;
      ++seen[static_cast<std::size_t>(e)];
    }
  }
  for (int e = 0; e < n; ++e)
    if (seen[static_cast<std::size_t>(e)] != 2) throw Error(ErrorCode::malformed_code, "each edge must appear at both ends");
  std::vector<std::uint8_t> parity(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) parity[static_cast<std::size_t>(e)] = edges[static_cast<std::size_t>(e)].sign > 0 ? 0 : 1;
  return PlanarDiagram::from_partners(std::move(partner), std::move(parity), 0);
}

// --- regions and colourings -----------------------------------------------------

std::vector<Region> faces(const PlanarDiagram& d) { return d.regions(); }

Colouring Colouring::complement() const {
  Colouring c;
  c.colour.resize(colour.size());
  for (std::size_t i = 0; i < colour.size(); ++i) {
    c.colour[i] = flip(colour[i]);
    if (c.colour[i] == Colour::white) c.white_regions.push_back(static_cast<int>(i));
  }
  return c;
}

Colouring Colouring::with_omitted(int region) const {
  if (!is_white(region)) throw Error(ErrorCode::malformed_code, "omitted region must be white");
  Colouring c = *this;
  c.white_regions.erase(std::find(c.white_regions.begin(), c.white_regions.end(), region));
  c.white_regions.insert(c.white_regions.begin(), region);
  return c;
}

Colouring Colouring::with_order(std::vector<int> order) const {
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  auto mine = white_regions;
  std::sort(mine.begin(), mine.end());
  if (sorted != mine) throw Error(ErrorCode::malformed_code, "order must list exactly the white regions");
  Colouring c = *this;
  c.white_regions = std::move(order);
  return c;
}

namespace {

// Colours one piece, starting from `seed` white.
void colour_piece(const PlanarDiagram& d, int seed, std::vector<Colour>& colour, std::vector<char>& done) {
  const auto& regions = d.regions();
  const Region& s = regions[static_cast<std::size_t>(seed)];
  if (s.loop >= 0) {
    const int other = s.id % 2 == 0 ? s.id + 1 : s.id - 1;
    colour[static_cast<std::size_t>(s.id)] = Colour::white;
    colour[static_cast<std::size_t>(other)] = Colour::black;
    done[static_cast<std::size_t>(s.id)] = done[static_cast<std::size_t>(other)] = 1;
    return;
  }
  std::queue<int> q;
  q.push(seed);
  colour[static_cast<std::size_t>(seed)] = Colour::white;
  done[static_cast<std::size_t>(seed)] = 1;
  while (!q.empty()) {
    const int r = q.front();
    q.pop();
    for (const CornerId x : regions[static_cast<std::size_t>(r)].corners) {
      const int nb = d.region_of_corner(next_ccw(x));
      const Colour want = flip(colour[static_cast<std::size_t>(r)]);
      if (!done[static_cast<std::size_t>(nb)]) {
        done[static_cast<std::size_t>(nb)] = 1;
        colour[static_cast<std::size_t>(nb)] = want;
        q.push(nb);
      } else if (colour[static_cast<std::size_t>(nb)] != want) {
        throw Error(ErrorCode::non_planar, "diagram admits no chessboard colouring");
      }
    }
  }
}

Colouring finish(const PlanarDiagram& d, std::vector<Colour> colour) {
  Colouring c;
  c.colour = std::move(colour);
  for (std::size_t i = 0; i < c.colour.size(); ++i)
    if (c.colour[i] == Colour::white) c.white_regions.push_back(static_cast<int>(i));
  const int outer = d.outer_region();
  if (outer >= 0 && c.is_white(outer)) c = c.with_omitted(outer);
  return c;
}

}  // namespace

std::pair<Colouring, Colouring> chessboard(const PlanarDiagram& d) {
  if (d.piece_count() > 1) throw Error(ErrorCode::disconnected, "chessboard colouring of a split diagram");
  if (d.regions().empty()) return {Colouring{}, Colouring{}};
  const int seed = d.outer_region() >= 0 ? d.outer_region() : 0;
  std::vector<Colour> colour(d.regions().size(), Colour::black);
  std::vector<char> done(d.regions().size(), 0);
  colour_piece(d, seed, colour, done);
  Colouring first = finish(d, colour);
  Colouring second = finish(d, first.complement().colour);
  return {std::move(first), std::move(second)};
}

Colouring chessboard_all(const PlanarDiagram& d) {
  std::vector<Colour> colour(d.regions().size(), Colour::black);
  std::vector<char> done(d.regions().size(), 0);
  const int outer = d.outer_region();
  if (outer >= 0) colour_piece(d, outer, colour, done);
  for (const auto& r : d.regions())
    if (!done[static_cast<std::size_t>(r.id)]) colour_piece(d, r.id, colour, done);
  return finish(d, std::move(colour));
}

bool is_chessboard(const PlanarDiagram& d, const Colouring& c) {
  if (c.colour.size() != d.regions().size()) return false;
  for (const auto& r : d.regions()) {
    for (const CornerId x : r.corners)
      if (c.colour[static_cast<std::size_t>(d.region_of_corner(next_ccw(x)))] == c.colour[static_cast<std::size_t>(r.id)])
        return false;
    if (r.loop >= 0) {
      const int other = r.id % 2 == 0 ? r.id + 1 : r.id - 1;
      if (c.colour[static_cast<std::size_t>(other)] == c.colour[static_cast<std::size_t>(r.id)]) return false;
    }
  }
  return true;
}

int crossing_sign(const PlanarDiagram& d, const Colouring& c, int crossing) {
  // The over strand sits on the slots of parity 1 - under_parity, and the
  // corner counterclockwise of an over slot has the same index.
  const int k = d.crossing(crossing).under_parity == 0 ? 1 : 0;
  return c.is_white(d.region_of_corner(make_slot(crossing, k))) ? 1 : -1;
}

AlternationStats alternation_stats(const PlanarDiagram& d, const Colouring& c) {
  std::vector<std::array<int, 2>> counts(static_cast<std::size_t>(d.piece_count()), {0, 0});
  for (int x = 0; x < d.crossing_count(); ++x)
    ++counts[static_cast<std::size_t>(d.piece_of_crossing(x))][crossing_sign(d, c, x) > 0 ? 0 : 1];
  AlternationStats s;
  for (const auto& [pos, neg] : counts) s.nonalternating_count += std::min(pos, neg);
  s.is_alternating = s.nonalternating_count == 0;
  return s;
}

AlternationStats alternation_stats(const PlanarDiagram& d) { return alternation_stats(d, chessboard_all(d)); }

PlanarDiagram mirror(const PlanarDiagram& d) {
  auto xs = d.crossings();
  for (auto& x : xs) x.under_parity ^= 1;
  return PlanarDiagram::from_crossings(std::move(xs), d.loop_count(), d.outer_corner());
}

}  // namespace knotslice
