#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "configuration.hpp"
#include "push.hpp"

namespace linepush {

// Bottom-left justified staircase, stored as its column lengths (a partition
// of the token count, non-increasing).
class CanonicalShape {
 public:
  explicit CanonicalShape(std::vector<int> column_lengths) : columns_(std::move(column_lengths)) {
    if (columns_.empty()) throw std::invalid_argument("shape needs at least one column");
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (columns_[i] <= 0) throw std::invalid_argument("column lengths must be positive");
      if (i && columns_[i] > columns_[i - 1])
        throw std::invalid_argument("column lengths must be non-increasing");
    }
  }

  // Row lengths in any order; the longest row is placed at the bottom.
  static CanonicalShape from_row_lengths(std::vector<int> rows) {
    std::sort(rows.begin(), rows.end(), std::greater<>());
    if (rows.empty() || rows.back() <= 0) throw std::invalid_argument("row lengths must be positive");
    return CanonicalShape(conjugate(rows));
  }

  const std::vector<int>& column_lengths() const noexcept { return columns_; }
  // Bottom row first.
  std::vector<int> row_lengths() const { return conjugate(columns_); }
  int size() const { return std::accumulate(columns_.begin(), columns_.end(), 0); }
  int width() const { return static_cast<int>(columns_.size()); }
  int height() const { return columns_.front(); }

  // Tokens get ids in reading order (top row first, left to right) and the
  // given labels; with no labels, 'A','B',... are used.
  Configuration to_configuration(std::string labels = {}) const {
    const auto rows = row_lengths();
    const int n = size();
    if (labels.empty()) {
      for (int i = 0; i < n; ++i) labels.push_back(default_label(i));
    }
    if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("label count mismatch");
    std::vector<Placement> ps;
    ps.reserve(static_cast<std::size_t>(n));
    std::size_t k = 0;
    for (int y = static_cast<int>(rows.size()) - 1; y >= 0; --y)
      for (int x = 0; x < rows[static_cast<std::size_t>(y)]; ++x) ps.push_back({{x, y}, labels[k++]});
    return Configuration::from_placements(ps);
  }

  static char default_label(int i) {
    constexpr std::string_view alphabet =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
    return alphabet[static_cast<std::size_t>(i) % alphabet.size()];
  }

  friend bool operator==(const CanonicalShape&, const CanonicalShape&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(columns_[i]);
    }
    return s + ")";
  }

 private:
  static std::vector<int> conjugate(const std::vector<int>& parts) {
    std::vector<int> out(static_cast<std::size_t>(parts.front()), 0);
    for (int p : parts)
      for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
    return out;
  }

  std::vector<int> columns_;
};

// All partitions of n, each non-increasing, in reverse lexicographic order.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace detail {

struct Interval {
  int lo = 0;
  int hi = -1;  // inclusive; hi < lo when the line is empty
  int length() const { return hi - lo + 1; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
};

// Occupied span of a line, or nullopt if the line is not one contiguous run.
inline std::optional<Interval> run_of_row(const Configuration& c, int y) {
  Interval iv{c.width(), -1};
  int count = 0;
  for (int x = 0; x < c.width(); ++x)
    if (c.full(x, y)) {
      iv.lo = std::min(iv.lo, x);
      iv.hi = std::max(iv.hi, x);
      ++count;
    }
  if (count == 0 || iv.length() != count) return std::nullopt;
  return iv;
}

inline std::optional<Interval> run_of_column(const Configuration& c, int x) {
  Interval iv{c.height(), -1};
  int count = 0;
  for (int y = 0; y < c.height(); ++y)
    if (c.full(x, y)) {
      iv.lo = std::min(iv.lo, y);
      iv.hi = std::max(iv.hi, y);
      ++count;
    }
  if (count == 0 || iv.length() != count) return std::nullopt;
  return iv;
}

inline bool nested(const std::vector<Interval>& lines) {
  for (const auto& r : lines)
    for (const auto& s : lines)
      if (r.length() <= s.length() && !s.contains(r)) return false;
  return true;
}

}  // namespace detail

// Every row and column is one contiguous run, and the run of a line lies
// inside the run of every line that is at least as long.
inline bool is_compact(const Configuration& c) {
  std::vector<detail::Interval> rows, cols;
  for (int y = 0; y < c.height(); ++y) {
    auto iv = detail::run_of_row(c, y);
    if (!iv) return false;
    rows.push_back(*iv);
  }
  for (int x = 0; x < c.width(); ++x) {
    auto iv = detail::run_of_column(c, x);
    if (!iv) return false;
    cols.push_back(*iv);
  }
  return detail::nested(rows) && detail::nested(cols);
}

// Bottom-left justified staircase: every column starts at row 0, every row
// starts at column 0.
inline bool is_canonical(const Configuration& c) {
  for (int x = 0; x < c.width(); ++x) {
    const auto n = static_cast<int>(c.column_count(x));
    for (int y = 0; y < n; ++y)
      if (!c.full(x, y)) return false;
  }
  for (int y = 0; y < c.height(); ++y) {
    const auto n = static_cast<int>(c.row_count(y));
    for (int x = 0; x < n; ++x)
      if (!c.full(x, y)) return false;
  }
  return true;
}

inline void require_compact(const Configuration& c) {
  if (!is_compact(c)) throw not_compact_error("configuration is not compact");
}

struct Canonicalized {
  Configuration config;
  PushSequence sequence;
};

// Alternates D,L,D,L,... until two consecutive pushes change nothing. The
// returned sequence omits the trailing no-op pushes.
inline Canonicalized canonicalize(const Configuration& c) {
  Configuration cur = c;
  PushSequence seq;
  int idle = 0;
  std::size_t effective_len = 0;
  const long limit = 2 * (static_cast<long>(c.size()) * (c.width() + c.height()) + 2);
  Direction next = Direction::down;
  for (long step = 0; idle < 2; ++step) {
    if (step > limit) throw std::logic_error("canonicalize failed to converge");
    Configuration after = push(cur, next);
    seq.push_back(next);
    if (after == cur) {
      ++idle;
    } else {
      idle = 0;
      effective_len = seq.size();
      cur = std::move(after);
    }
    next = next == Direction::down ? Direction::left : Direction::down;
  }
  seq.resize(effective_len);
  return {std::move(cur), std::move(seq)};
}

// Down until nothing moves, then left until nothing moves.
inline Canonicalized canonical_form(const Configuration& c) {
  require_compact(c);
  Configuration cur = c;
  PushSequence seq;
  for (Direction d : {Direction::down, Direction::left}) {
    for (;;) {
      Configuration after = push(cur, d);
      if (after == cur) break;
      seq.push_back(d);
      cur = std::move(after);
    }
  }
  return {std::move(cur), std::move(seq)};
}

// Shape of the canonical configuration of c's compatibility class.
inline CanonicalShape canonical_shape(const Configuration& c) {
  require_compact(c);
  std::vector<int> cols;
  for (int x = 0; x < c.width(); ++x) cols.push_back(static_cast<int>(c.column_count(x)));
  std::sort(cols.begin(), cols.end(), std::greater<>());
  return CanonicalShape(std::move(cols));
}

inline bool compatible(const Configuration& a, const Configuration& b) {
  require_compact(a);
  require_compact(b);
  auto lengths = [](const Configuration& c) {
    std::vector<std::size_t> rows, cols;
    for (int y = 0; y < c.height(); ++y) rows.push_back(c.row_count(y));
    for (int x = 0; x < c.width(); ++x) cols.push_back(c.column_count(x));
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    return std::pair{rows, cols};
  };
  return lengths(a) == lengths(b);
}

namespace detail {

// Distance of p from the d-side of the bounding box.
inline int depth(const Configuration& c, Point p, Direction d) {
  switch (d) {
    case Direction::left: return p.x;
    case Direction::right: return c.width() - 1 - p.x;
    case Direction::down: return p.y;
    case Direction::up: return c.height() - 1 - p.y;
  }
  return 0;
}

inline int line_of(Point p, Direction d) { return is_horizontal(d) ? p.y : p.x; }

inline int extent(const Configuration& c, Direction d) {
  return is_horizontal(d) ? c.width() : c.height();
}

}  // namespace detail

// A sequence s with apply_sequence(push(c, d), s) == c, token ids included.
// Follows the reversal argument for compact configurations: among the lines
// touching the d-side, take the shortest run's far end as the reference
// token, push opposite to d until that token reaches the far boundary (k
// pushes), then push d k-1 times. The candidate is verified by simulation;
// should it fail, every k up to the extent is tried.
inline PushSequence invert_push(const Configuration& c, Direction d) {
  require_compact(c);
  const Configuration pushed = push(c, d);
  if (pushed == c) return {};
  const Direction back = opposite(d);
  const int max_k = detail::extent(c, d) + 2;

  auto candidate = [&](int k) {
    PushSequence s = repeat(back, static_cast<std::size_t>(k));
    append(s, repeat(d, static_cast<std::size_t>(k - 1)));
    return s;
  };

  // Reference token: farthest token of the shortest run starting at the d-side.
  const auto pos = c.positions();
  std::vector<int> reach(static_cast<std::size_t>(std::max(c.width(), c.height())), -1);
  std::vector<char> touches(reach.size(), 0);
  for (const auto& p : pos)
    if (detail::depth(c, p, d) == 0) touches[static_cast<std::size_t>(detail::line_of(p, d))] = 1;
  for (const auto& p : pos) {
    const auto line = static_cast<std::size_t>(detail::line_of(p, d));
    if (touches[line]) reach[line] = std::max(reach[line], detail::depth(c, p, d));
  }
  TokenId ref = no_token;
  int best = -1;
  for (std::size_t id = 0; id < pos.size(); ++id) {
    const auto line = static_cast<std::size_t>(detail::line_of(pos[id], d));
    if (!touches[line] || detail::depth(c, pos[id], d) != reach[line]) continue;
    if (ref == no_token || reach[line] < best) {
      best = reach[line];
      ref = static_cast<TokenId>(id);
    }
  }

  std::optional<int> analytic;
  Configuration cur = pushed;
  for (int k = 1; k <= max_k; ++k) {
    cur = push(cur, back);
    if (detail::depth(cur, cur.position_of(ref), back) == 0) {
      analytic = k;
      break;
    }
  }
  if (analytic) {
    PushSequence s = candidate(*analytic);
    if (apply_sequence(pushed, s) == c) return s;
  }
  for (int k = 1; k <= max_k; ++k) {
    PushSequence s = candidate(k);
    if (apply_sequence(pushed, s) == c) return s;
  }
  throw std::logic_error("no inverse found for a push on a compact configuration");
}

// A sequence r with apply_sequence(apply_sequence(c, s), r) == c.
inline PushSequence invert_sequence(const Configuration& c, const PushSequence& s) {
  require_compact(c);
  const auto trace = apply_with_trace(c, s);
  PushSequence out;
  for (std::size_t i = s.size(); i-- > 0;) append(out, invert_push(trace[i], s[i]));
  return out;
}

}  // namespace linepush
