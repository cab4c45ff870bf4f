#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "compact.hpp"
#include "configuration.hpp"
#include "push.hpp"

namespace linepush {

// a columns by b rows.
struct BoxSpec {
  int a = 1;
  int b = 1;
  std::size_t size() const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(b); }
};

// Tokens at (i,i) for i in [0,n).
inline Configuration diagonal_config(int n) {
  if (n < 1) throw std::invalid_argument("diagonal needs at least one token");
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({i, i});
  return Configuration::from_points(pts);
}

// The sparse configuration that cannot be pushed into an a x b box: half the
// tokens on the diagonal of the upper-left quadrant, the rest on the diagonal
// of the lower-right quadrant.
inline Configuration counterexample(int a, int b) {
  if (!((a >= 4 && b >= 3) || (a >= 3 && b >= 4)))
    throw std::invalid_argument("counterexample needs a>=4,b>=3 or a>=3,b>=4");
  const int n = a * b;
  const int n1 = n / 2;
  const int n2 = n - n1;
  std::vector<Point> pts;
  for (int i = 0; i < n1; ++i) pts.push_back({i, n2 + i});
  for (int j = 0; j < n2; ++j) pts.push_back({n1 + j, j});
  return Configuration::from_points(pts);
}

namespace detail {

// Pushes with bookkeeping shared by the constructive solvers: records the
// sequence, bounds the number of steps, and checks that an effective push on
// a sparse configuration shrinks the bounding box.
class Driver {
 public:
  explicit Driver(Configuration start)
      : cur_(std::move(start)),
        limit_(4 * (static_cast<long>(cur_.size()) + cur_.width() + cur_.height()) + 16) {}

  void step(Direction d) {
    if (++steps_ > limit_) throw std::logic_error("solver exceeded its push limit");
    Configuration next = push(cur_, d);
    if (next != cur_ && is_sparse(cur_) && cur_.size() > 1 && next.area() >= cur_.area())
      throw std::logic_error("push on a sparse configuration did not shrink the bounding box");
    cur_ = std::move(next);
    seq_.push_back(d);
  }

  template <class Pred>
  void push_until(Direction d, Pred done) {
    while (!done(cur_)) step(d);
  }

  const Configuration& current() const noexcept { return cur_; }
  const PushSequence& sequence() const noexcept { return seq_; }

 private:
  Configuration cur_;
  PushSequence seq_;
  long steps_ = 0;
  long limit_;
};

inline bool tokens_in_row(const Configuration& c, const std::vector<TokenId>& ids, int y) {
  return std::all_of(ids.begin(), ids.end(), [&](TokenId id) { return c.position_of(id).y == y; });
}

}  // namespace detail

// Sequence taking the diagonal of n tokens to the canonical staircase with the
// given column lengths: for each column, push left until it has the required
// length, then push down until the remaining diagonal rests on the bottom row.
inline PushSequence realize_partition(int n, const CanonicalShape& shape) {
  if (shape.size() != n) throw std::invalid_argument("shape does not partition n");
  const auto& cols = shape.column_lengths();
  detail::Driver drv(diagonal_config(n));
  int placed = 0;
  for (std::size_t t = 0; t < cols.size(); ++t) {
    const int x = static_cast<int>(t);
    const int want = cols[t];
    drv.push_until(Direction::left, [&](const Configuration& c) {
      return static_cast<int>(c.column_count(x)) >= want;
    });
    if (static_cast<int>(drv.current().column_count(x)) != want)
      throw std::logic_error("column overshoot while realizing partition");
    placed += want;
    if (placed == n) break;
    drv.push_until(Direction::down, [&](const Configuration& c) {
      for (int xx = x + 1; xx < c.width(); ++xx)
        if (c.full(xx, 0)) return true;
      return false;
    });
  }
  const auto& end = drv.current();
  if (!is_canonical(end) || !(canonical_shape(end) == shape))
    throw std::logic_error("partition construction did not reach the requested shape");
  return drv.sequence();
}

enum class BoxStatus { solved, unsupported, none_found };

struct BoxResult {
  BoxStatus status = BoxStatus::unsupported;
  PushSequence moves;
};

namespace detail {

// Gravity into one row, then close the gaps.
inline PushSequence solve_row(const Configuration& c) {
  Driver drv(c);
  drv.push_until(Direction::down, [](const Configuration& s) { return s.height() == 1; });
  const int n = static_cast<int>(c.size());
  drv.push_until(Direction::left, [n](const Configuration& s) { return s.width() == n; });
  return drv.sequence();
}

// Two rows of n/2: gather half of the tokens in the top row, lower that row
// until the other half lies directly beneath it, then close the gaps.
inline PushSequence solve_two_rows(const Configuration& c) {
  const int n = static_cast<int>(c.size());
  const int half = n / 2;
  Driver drv(c);
  drv.push_until(Direction::up, [half](const Configuration& s) {
    return static_cast<int>(s.row_count(s.height() - 1)) >= half;
  });
  const auto& gathered_conf = drv.current();
  std::vector<TokenId> gathered;
  for (int x = 0; x < gathered_conf.width(); ++x)
    if (TokenId id = gathered_conf.at(x, gathered_conf.height() - 1); id != no_token) gathered.push_back(id);
  if (static_cast<int>(gathered.size()) != half) throw std::logic_error("top row overshoot");
  drv.push_until(Direction::down, [&](const Configuration& s) {
    return s.position_of(gathered.front()).y == 1;
  });
  if (!tokens_in_row(drv.current(), gathered, 1) || drv.current().height() != 2)
    throw std::logic_error("gathered row did not settle above the other half");
  drv.push_until(Direction::left, [half](const Configuration& s) { return s.width() == half; });
  return drv.sequence();
}

// 3x3: three tokens into the leftmost column, three into the rightmost, then
// align the middle three vertically around the middle one and close gaps.
inline PushSequence solve_three_by_three(const Configuration& c) {
  Driver drv(c);
  drv.push_until(Direction::left, [](const Configuration& s) { return s.column_count(0) >= 3; });
  std::vector<TokenId> left;
  for (int y = 0; y < drv.current().height(); ++y)
    if (TokenId id = drv.current().at(0, y); id != no_token) left.push_back(id);
  drv.push_until(Direction::right, [](const Configuration& s) {
    return s.column_count(s.width() - 1) >= 3;
  });
  const auto& mid_conf = drv.current();
  std::vector<TokenId> right;
  for (int y = 0; y < mid_conf.height(); ++y)
    if (TokenId id = mid_conf.at(mid_conf.width() - 1, y); id != no_token) right.push_back(id);
  if (left.size() != 3 || right.size() != 3) throw std::logic_error("column gathering overshoot");
  std::vector<std::pair<int, TokenId>> middle;
  for (TokenId id = 0; id < static_cast<TokenId>(mid_conf.size()); ++id) {
    if (std::find(left.begin(), left.end(), id) != left.end()) continue;
    if (std::find(right.begin(), right.end(), id) != right.end()) continue;
    middle.emplace_back(mid_conf.position_of(id).y, id);
  }
  std::sort(middle.begin(), middle.end());
  const TokenId t2 = middle[1].second;
  drv.push_until(Direction::down, [t2](const Configuration& s) { return s.position_of(t2).y <= 1; });
  drv.push_until(Direction::up, [t2](const Configuration& s) {
    return s.position_of(t2).y >= s.height() - 2;
  });
  drv.push_until(Direction::left, [](const Configuration& s) { return s.width() <= 3; });
  return drv.sequence();
}

}  // namespace detail

// Pushes a sparse configuration of a*b tokens into an a x b box for the cases
// where this is always possible (a<=2, b<=2, or a=b=3); any other box is
// reported as unsupported. Every returned sequence has been replayed.
inline BoxResult solve_box(const Configuration& c, BoxSpec spec) {
  if (spec.a < 1 || spec.b < 1) throw std::invalid_argument("box extents must be positive");
  if (c.size() != spec.size()) throw std::invalid_argument("token count does not match box size");
  if (!is_sparse(c)) throw std::invalid_argument("configuration is not sparse");

  BoxResult res;
  if (spec.b == 1) {
    res.moves = detail::solve_row(c);
  } else if (spec.a == 1) {
    res.moves = transposed(detail::solve_row(c.transposed()));
  } else if (spec.b == 2) {
    res.moves = detail::solve_two_rows(c);
  } else if (spec.a == 2) {
    res.moves = transposed(detail::solve_two_rows(c.transposed()));
  } else if (spec.a == 3 && spec.b == 3) {
    res.moves = detail::solve_three_by_three(c);
  } else {
    return res;
  }
  res.status = is_box(apply_sequence(c, res.moves), spec.a, spec.b) ? BoxStatus::solved
                                                                    : BoxStatus::none_found;
  if (res.status != BoxStatus::solved) res.moves.clear();
  return res;
}

}  // namespace linepush
