#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "compact.hpp"
#include "perm_engine.hpp"
#include "search.hpp"

namespace linepush {

// A compact configuration whose empty bounding-box cells carry labels too.
// Cell values: token id (>= 0) for full cells, -(k+1) for the k-th empty label.
struct ExtendedBoard {
  Configuration config;
  std::vector<int> cells;  // row-major, y = 0 at the bottom

  int at(int x, int y) const { return cells[config.index(x, y)]; }
  friend bool operator==(const ExtendedBoard&, const ExtendedBoard&) = default;
};

inline bool consistent(const ExtendedBoard& e) {
  if (e.cells.size() != static_cast<std::size_t>(e.config.area())) return false;
  std::set<int> seen;
  for (int y = 0; y < e.config.height(); ++y)
    for (int x = 0; x < e.config.width(); ++x) {
      const int v = e.at(x, y);
      if (e.config.full(x, y) ? v != e.config.at(x, y) : v >= 0) return false;
      if (!seen.insert(v).second) return false;
    }
  return true;
}

// Empty cells are labeled in reading order (top row first).
inline ExtendedBoard extend(const Configuration& c) {
  require_compact(c);
  ExtendedBoard e{c, std::vector<int>(static_cast<std::size_t>(c.area()))};
  int next = -1;
  for (int y = c.height() - 1; y >= 0; --y)
    for (int x = 0; x < c.width(); ++x) e.cells[c.index(x, y)] = c.full(x, y) ? c.at(x, y) : next--;
  return e;
}

// Every line whose d-most cell is empty rotates cyclically by one unit toward
// d; the empty label at the far end wraps around.
inline ExtendedBoard extended_push(const ExtendedBoard& e, Direction d) {
  if (!consistent(e)) throw std::invalid_argument("extended board is inconsistent");
  const Configuration& c = e.config;
  const int w = c.width(), h = c.height();
  ExtendedBoard out{push(c, d), e.cells};
  if (is_horizontal(d)) {
    const int edge = d == Direction::right ? w - 1 : 0;
    const int step = d == Direction::right ? 1 : w - 1;
    for (int y = 0; y < h; ++y) {
      if (c.full(edge, y)) continue;
      for (int x = 0; x < w; ++x) out.cells[c.index((x + step) % w, y)] = e.cells[c.index(x, y)];
    }
  } else {
    const int edge = d == Direction::up ? h - 1 : 0;
    const int step = d == Direction::up ? 1 : h - 1;
    for (int x = 0; x < w; ++x) {
      if (c.full(x, edge)) continue;
      for (int y = 0; y < h; ++y) out.cells[c.index(x, (y + step) % h)] = e.cells[c.index(x, y)];
    }
  }
  if (out.config.width() != w || out.config.height() != h || !consistent(out))
    throw std::logic_error("extended push disagrees with push");
  return out;
}

struct ClosedParity {
  Parity all;   // full and empty cells together
  Parity full;  // tokens only
};

// Parities of a push sequence that returns a canonical configuration to its
// own shape.
inline ClosedParity closed_sequence_parity(const Configuration& k, const PushSequence& s) {
  require_canonical(k);
  ExtendedBoard e = extend(k);
  for (Direction d : s) e = extended_push(e, d);
  if (!e.config.same_shape(k)) throw shape_changed_error("sequence does not return to the starting shape");
  const ExtendedBoard start = extend(k);
  std::unordered_map<int, int> where;
  for (std::size_t i = 0; i < e.cells.size(); ++i) where[e.cells[i]] = static_cast<int>(i);
  std::vector<int> img(start.cells.size());
  for (std::size_t i = 0; i < start.cells.size(); ++i) img[i] = where.at(start.cells[i]);
  return {Permutation(std::move(img)).parity(), place_permutation(k, e.config).parity()};
}

// All rows of equal length occupy the same columns, and likewise for columns.
inline bool lines_aligned(const Configuration& c) {
  std::map<int, detail::Interval> rows, cols;
  auto agree = [](std::map<int, detail::Interval>& m, const detail::Interval& iv) {
    auto [it, fresh] = m.try_emplace(iv.length(), iv);
    return fresh || (it->second.lo == iv.lo && it->second.hi == iv.hi);
  };
  for (int y = 0; y < c.height(); ++y) {
    const auto iv = detail::run_of_row(c, y);
    if (!iv || !agree(rows, *iv)) return false;
  }
  for (int x = 0; x < c.width(); ++x) {
    const auto iv = detail::run_of_column(c, x);
    if (!iv || !agree(cols, *iv)) return false;
  }
  return true;
}

inline constexpr int dual_vacant = 0;  // empty labels are negative

// The empty cells of a compact board, viewed on the torus with the full
// columns rotated to the left and the full rows to the bottom. What remains is
// an a'' x b'' box. Cell values are the empty labels of the extended board, or
// dual_vacant. The origin is the torus cell holding the primal (0,0), counted
// from the corner of the full block; it is what lets pulls be computed from
// the dual alone.
struct DualBoard {
  int width = 0;
  int height = 0;
  std::vector<int> cells;  // row-major, y = 0 at the bottom
  int full_columns = 0;
  int full_rows = 0;
  int origin_x = 0;
  int origin_y = 0;

  int at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](int v) { return v != dual_vacant; }));
  }
  friend bool operator==(const DualBoard&, const DualBoard&) = default;
};

namespace detail {

// Cyclic offset that brings the marked lines to the front, if any.
inline int front_rotation(const std::vector<char>& marked) {
  const int n = static_cast<int>(marked.size());
  const int k = static_cast<int>(std::count(marked.begin(), marked.end(), 1));
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = marked[static_cast<std::size_t>((s + i) % n)];
    if (ok) return s;
  }
  return -1;
}

}  // namespace detail

inline DualBoard dual_of(const ExtendedBoard& e) {
  const Configuration& c = e.config;
  const int w = c.width(), h = c.height();
  std::vector<char> full_col(static_cast<std::size_t>(w)), full_row(static_cast<std::size_t>(h));
  for (int x = 0; x < w; ++x) full_col[static_cast<std::size_t>(x)] = c.column_count(x) == static_cast<std::size_t>(h);
  for (int y = 0; y < h; ++y) full_row[static_cast<std::size_t>(y)] = c.row_count(y) == static_cast<std::size_t>(w);
  const int sx = detail::front_rotation(full_col), sy = detail::front_rotation(full_row);
  if (sx < 0 || sy < 0) throw std::invalid_argument("full lines are not contiguous on the torus");
  const int a_full = static_cast<int>(std::count(full_col.begin(), full_col.end(), 1));
  const int b_full = static_cast<int>(std::count(full_row.begin(), full_row.end(), 1));
  DualBoard d{w - a_full, h - b_full, {}, a_full, b_full, (w - sx) % w, (h - sy) % h};
  d.cells.assign(static_cast<std::size_t>(d.width) * d.height, dual_vacant);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (c.full(x, y)) continue;
      const int tx = (x - sx + w) % w - a_full, ty = (y - sy + h) % h - b_full;
      d.cells[static_cast<std::size_t>(ty) * d.width + tx] = e.at(x, y);
    }
  return d;
}

inline DualBoard dual_config(const Configuration& k) {
  require_canonical(k);
  return dual_of(extend(k));
}

// A primal push toward d leaves the dual alone when the only lines touching
// the d-side are full ones.
inline bool pull_is_identity(const Configuration& c, Direction d) {
  const int w = c.width(), h = c.height();
  if (is_horizontal(d)) {
    const int edge = d == Direction::right ? w - 1 : 0;
    for (int y = 0; y < h; ++y)
      if (c.full(edge, y) && c.row_count(y) != static_cast<std::size_t>(w)) return false;
  } else {
    const int edge = d == Direction::up ? h - 1 : 0;
    for (int x = 0; x < w; ++x)
      if (c.full(x, edge) && c.column_count(x) != static_cast<std::size_t>(h)) return false;
  }
  return true;
}

// Pull induced by a primal push toward d. Each dual line, together with the
// full block, spells out a primal line; the primal lines whose d-end is empty
// rotate one unit toward d, and the picture is re-anchored on the full block.
// When every non-full line rotates the cells do not change at all; otherwise
// the lines touching the d-side slide against d relative to the others.
inline DualBoard dual_pull(const DualBoard& db, Direction d) {
  const bool horiz = is_horizontal(d);
  const bool toward_high = d == Direction::right || d == Direction::up;
  const int lines = horiz ? db.height : db.width;
  const int block = horiz ? db.full_columns : db.full_rows;
  const int span = (horiz ? db.width : db.height) + block;
  const int origin = horiz ? db.origin_x : db.origin_y;
  auto index = [&](int line, int i) {
    return horiz ? static_cast<std::size_t>(line) * db.width + i : static_cast<std::size_t>(i) * db.width + line;
  };
  auto mod = [span](int v) { return ((v % span) + span) % span; };

  // Token interval [p, p + len) of every primal line, in plane coordinates.
  std::vector<int> shift(static_cast<std::size_t>(lines), 0);
  int new_anchor = 0;  // left (or bottom) end of the full block after the push
  for (int l = 0; l < lines; ++l) {
    int p = span, len = 0;
    for (int t = 0; t < span; ++t)
      if (t < block || db.cells[index(l, t - block)] == dual_vacant) {
        p = std::min(p, mod(t - origin));
        ++len;
      }
    if (len == 0) throw std::invalid_argument("dual line without primal tokens");
    const bool rotates = toward_high ? p + len < span : p > 0;
    if (rotates) shift[static_cast<std::size_t>(l)] = toward_high ? 1 : -1;
    new_anchor = std::max(new_anchor, p + shift[static_cast<std::size_t>(l)]);
  }
  if (block == 0) new_anchor = 0;  // no full block: the plane frame is kept
  DualBoard out = db;
  (horiz ? out.origin_x : out.origin_y) = mod(-new_anchor);
  std::fill(out.cells.begin(), out.cells.end(), dual_vacant);
  for (int l = 0; l < lines; ++l)
    for (int t = block; t < span; ++t) {
      const int v = db.cells[index(l, t - block)];
      if (v == dual_vacant) continue;
      const int u = mod(t - origin) + shift[static_cast<std::size_t>(l)];
      const int nt = mod(u - new_anchor);
      if (nt < block) throw std::logic_error("pull moved an empty cell into the full block");
      out.cells[index(l, nt - block)] = v;
    }
  return out;
}

inline std::string format_dual(const DualBoard& db) {
  std::string out;
  for (int y = db.height - 1; y >= 0; --y) {
    for (int x = 0; x < db.width; ++x) out.push_back(db.at(x, y) == dual_vacant ? '.' : 'o');
    if (y) out.push_back('\n');
  }
  return out;
}

struct GroupEnumeration {
  std::map<Permutation, PushSequence> elements;  // with a shortest witness each
  bool complete = false;
  std::size_t states = 0;
};

// Breadth-first search over labeled configurations reachable from k, reading
// the place permutation at every state with k's shape.
inline GroupEnumeration enumerate_group(const Configuration& k, std::size_t max_states = 5'000'000) {
  require_canonical(k);
  struct Node {
    std::uint32_t parent;
    Direction via;
  };
  std::vector<Node> nodes{{0, Direction::left}};
  std::unordered_map<std::string, std::uint32_t> seen{{k.state_key(), 0}};
  std::deque<std::pair<Configuration, std::uint32_t>> queue{{k, 0}};
  auto witness = [&nodes](std::uint32_t i) {
    PushSequence out;
    for (; i != 0; i = nodes[i].parent) out.push_back(nodes[i].via);
    return PushSequence(out.rbegin(), out.rend());
  };
  GroupEnumeration g;
  g.elements.emplace(Permutation(k.size()), PushSequence{});
  while (!queue.empty()) {
    auto [conf, idx] = std::move(queue.front());
    queue.pop_front();
    for (Direction d : all_directions) {
      Configuration child = push(conf, d);
      auto [it, fresh] = seen.try_emplace(child.state_key(), static_cast<std::uint32_t>(nodes.size()));
      if (!fresh) continue;
      nodes.push_back({idx, d});
      if (child.same_shape(k)) g.elements.try_emplace(place_permutation(k, child), witness(it->second));
      if (nodes.size() >= max_states) {
        g.states = nodes.size();
        return g;
      }
      queue.emplace_back(std::move(child), it->second);
    }
  }
  g.complete = true;
  g.states = nodes.size();
  return g;
}

// True when the generated group maps some ordered pair of distinct points onto
// every ordered pair; the orbit of one pair decides it.
inline bool is_two_transitive(const std::vector<Permutation>& gens, std::size_t domain) {
  if (domain < 2) return false;
  for (const auto& g : gens)
    if (g.size() != domain) throw std::invalid_argument("generator does not act on the domain");
  std::set<std::pair<int, int>> orbit{{0, 1}};
  std::deque<std::pair<int, int>> todo{{0, 1}};
  while (!todo.empty()) {
    const auto [x, y] = todo.front();
    todo.pop_front();
    for (const auto& g : gens)
      if (orbit.insert({g(x), g(y)}).second) todo.push_back({g(x), g(y)});
  }
  return orbit.size() == domain * (domain - 1);
}

// {shape, order, class, sample_words}
inline nlohmann::json group_report(const CanonicalShape& shape, const GroupEnumeration& g,
                                   std::size_t samples = 5) {
  const auto cls = classify_shape(shape);
  nlohmann::json words = nlohmann::json::array();
  for (const auto& [perm, word] : g.elements) {
    if (words.size() >= samples) break;
    if (perm.is_identity()) continue;
    words.push_back({{"permutation", perm.to_string()}, {"moves", format_sequence(word)}});
  }
  return {{"shape", shape.to_string()},
          {"order", g.elements.size()},
          {"complete", g.complete},
          {"states", g.states},
          {"class", to_string(cls.group.kind)},
          {"predicted_order", cls.group.order()},
          {"sample_words", words}};
}

}  // namespace linepush
