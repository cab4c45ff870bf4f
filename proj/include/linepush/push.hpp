#pragma once

#include <vector>

#include "configuration.hpp"
#include "direction.hpp"

namespace linepush {

// One push toward d. Lines are swept in increasing distance from the d-side
// of the bounding box; a token moves one unit iff its d-neighbour is empty at
// the time its line is processed, so cells vacated earlier in the same sweep
// can be refilled.
inline Configuration push(const Configuration& c, Direction d) {
  const int w = c.width();
  const int h = c.height();
  std::vector<TokenId> cells(c.cells().begin(), c.cells().end());
  auto idx = [w](int x, int y) { return static_cast<std::size_t>(y) * w + x; };
  const int dx = step_x(d);
  const int dy = step_y(d);
  bool moved = false;

  if (is_horizontal(d)) {
    for (int layer = 1; layer < w; ++layer) {
      const int x = dx < 0 ? layer : w - 1 - layer;
      for (int y = 0; y < h; ++y) {
        auto& from = cells[idx(x, y)];
        auto& to = cells[idx(x + dx, y)];
        if (from != no_token && to == no_token) {
          to = from;
          from = no_token;
          moved = true;
        }
      }
    }
  } else {
    for (int layer = 1; layer < h; ++layer) {
      const int y = dy < 0 ? layer : h - 1 - layer;
      for (int x = 0; x < w; ++x) {
        auto& from = cells[idx(x, y)];
        auto& to = cells[idx(x, y + dy)];
        if (from != no_token && to == no_token) {
          to = from;
          from = no_token;
          moved = true;
        }
      }
    }
  }
  if (!moved) return c;
  std::vector<char> labels(c.labels().begin(), c.labels().end());
  return Configuration(w, h, std::move(cells), std::move(labels));
}

inline Configuration apply_sequence(Configuration c, const PushSequence& seq) {
  for (Direction d : seq) c = push(c, d);
  return c;
}

// Every intermediate configuration, starting with c itself.
inline std::vector<Configuration> apply_with_trace(const Configuration& c, const PushSequence& seq) {
  std::vector<Configuration> trace;
  trace.reserve(seq.size() + 1);
  trace.push_back(c);
  for (Direction d : seq) trace.push_back(push(trace.back(), d));
  return trace;
}

// No row and no column holds more than one token.
inline bool is_sparse(const Configuration& c) {
  std::vector<int> rows(static_cast<std::size_t>(c.height()), 0);
  std::vector<int> cols(static_cast<std::size_t>(c.width()), 0);
  for (int y = 0; y < c.height(); ++y)
    for (int x = 0; x < c.width(); ++x)
      if (c.full(x, y) && (++rows[y] > 1 || ++cols[x] > 1)) return false;
  return true;
}

inline bool has_full_row(const Configuration& c) {
  for (int y = 0; y < c.height(); ++y)
    if (c.row_count(y) == static_cast<std::size_t>(c.width())) return true;
  return false;
}

inline bool has_full_column(const Configuration& c) {
  for (int x = 0; x < c.width(); ++x)
    if (c.column_count(x) == static_cast<std::size_t>(c.height())) return true;
  return false;
}

// Some push shrinks the bounding box unless it has both a full row and a full
// column.
inline bool is_compressible(const Configuration& c) {
  return !(has_full_row(c) && has_full_column(c));
}

// Occupied cells form an a-column by b-row rectangle.
inline bool is_box(const Configuration& c, int a, int b) {
  return c.width() == a && c.height() == b && c.size() == static_cast<std::size_t>(a) * b;
}

}  // namespace linepush
