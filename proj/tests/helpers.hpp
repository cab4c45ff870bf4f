#pragma once

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "linepush/linepush.hpp"
#include "oracle/reference_stepper.hpp"

namespace testing_support {

using namespace linepush;

inline Configuration grid(const std::string& text) { return parse_grid(text); }

inline Configuration replay(Configuration c, const PushSequence& s) {
  for (Direction d : s) c = oracle::reference_push(c, d);
  return c;
}

inline std::string distinct_labels(int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s.push_back(CanonicalShape::default_label(i));
  return s;
}

inline CanonicalShape random_shape(std::mt19937& rng, int min_n, int max_n) {
  const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  const auto parts = partitions(n);
  return CanonicalShape(parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)]);
}

inline Configuration random_walk(Configuration c, std::mt19937& rng, int steps) {
  for (int i = 0; i < steps; ++i) c = push(c, all_directions[rng() % 4]);
  return c;
}

inline Configuration random_sparse(std::mt19937& rng, int n, int spread = 2) {
  std::vector<int> xs(static_cast<std::size_t>(spread * n)), ys(xs.size());
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), 0);
  std::shuffle(xs.begin(), xs.end(), rng);
  std::shuffle(ys.begin(), ys.end(), rng);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]});
  return Configuration::from_points(pts);
}

// Random configuration of n tokens in a w x h box.
inline Configuration random_config(std::mt19937& rng, int n, int w, int h) {
  std::vector<int> cells(static_cast<std::size_t>(w * h));
  std::iota(cells.begin(), cells.end(), 0);
  std::shuffle(cells.begin(), cells.end(), rng);
  std::vector<Placement> ps;
  for (int i = 0; i < n; ++i) {
    const int c = cells[static_cast<std::size_t>(i)];
    ps.push_back({{c % w, c / w}, CanonicalShape::default_label(i)});
  }
  return Configuration::from_placements(ps);
}

}  // namespace testing_support
