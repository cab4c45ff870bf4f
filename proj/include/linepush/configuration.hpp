#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linepush {

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

using TokenId = int;
inline constexpr TokenId no_token = -1;

// Label of an unlabeled token in the grid text format.
inline constexpr char unlabeled = '#';

struct Placement {
  Point at;
  char label = unlabeled;
};

class grid_parse_error : public std::invalid_argument {
 public:
  grid_parse_error(const std::string& what, std::size_t line, std::size_t column)
      : std::invalid_argument(what), line_(line), column_(column) {}
  // 1-based; 0 when the error concerns the grid as a whole.
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class not_compact_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tokens on the square lattice, translated so that the bounding box has its
// lower-left corner at (0,0). Each token has a unique id (its index) and a
// label; labels may repeat. y grows upward.
class Configuration {
 public:
  // Takes ownership of a width*height row-major grid of token ids (row 0 is
  // the bottom row). Ids must be exactly 0..labels.size()-1, each once.
  Configuration(int width, int height, std::vector<TokenId> cells, std::vector<char> labels)
      : width_(width), height_(height), cells_(std::move(cells)), labels_(std::move(labels)) {
    if (width_ <= 0 || height_ <= 0 ||
        cells_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_))
      throw std::invalid_argument("configuration grid has inconsistent extents");
    std::vector<char> seen(labels_.size(), 0);
    std::size_t count = 0;
    for (TokenId id : cells_) {
      if (id == no_token) continue;
      if (id < 0 || static_cast<std::size_t>(id) >= labels_.size() || seen[id])
        throw std::invalid_argument("configuration grid has invalid token ids");
      seen[id] = 1;
      ++count;
    }
    if (count == 0) throw std::invalid_argument("configuration has no tokens");
    if (count != labels_.size())
      throw std::invalid_argument("configuration grid is missing token ids");
    normalize();
  }

  // Token ids follow the order of `tokens`.
  static Configuration from_placements(std::span<const Placement> tokens) {
    if (tokens.empty()) throw std::invalid_argument("configuration has no tokens");
    int min_x = tokens[0].at.x, max_x = min_x, min_y = tokens[0].at.y, max_y = min_y;
    for (const auto& t : tokens) {
      min_x = std::min(min_x, t.at.x);
      max_x = std::max(max_x, t.at.x);
      min_y = std::min(min_y, t.at.y);
      max_y = std::max(max_y, t.at.y);
    }
    const int w = max_x - min_x + 1;
    const int h = max_y - min_y + 1;
    std::vector<TokenId> cells(static_cast<std::size_t>(w) * h, no_token);
    std::vector<char> labels;
    labels.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      auto& slot = cells[static_cast<std::size_t>(tokens[i].at.y - min_y) * w +
                         (tokens[i].at.x - min_x)];
      if (slot != no_token) throw std::invalid_argument("two tokens share a position");
      slot = static_cast<TokenId>(i);
      labels.push_back(tokens[i].label);
    }
    return Configuration(w, h, std::move(cells), std::move(labels));
  }

  static Configuration from_points(std::span<const Point> points, char label = unlabeled) {
    std::vector<Placement> ps;
    ps.reserve(points.size());
    for (auto p : points) ps.push_back({p, label});
    return from_placements(ps);
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  long area() const noexcept { return static_cast<long>(width_) * height_; }
  std::size_t size() const noexcept { return labels_.size(); }

  bool in_box(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  TokenId at(int x, int y) const noexcept {
    return in_box(x, y) ? cells_[index(x, y)] : no_token;
  }
  TokenId at(Point p) const noexcept { return at(p.x, p.y); }
  bool full(int x, int y) const noexcept { return at(x, y) != no_token; }
  bool full(Point p) const noexcept { return full(p.x, p.y); }

  char label(TokenId id) const { return labels_.at(static_cast<std::size_t>(id)); }
  std::span<const char> labels() const noexcept { return labels_; }
  std::span<const TokenId> cells() const noexcept { return cells_; }

  // Positions indexed by token id.
  std::vector<Point> positions() const {
    std::vector<Point> out(labels_.size());
    for (int y = 0; y < height_; ++y)
      for (int x = 0; x < width_; ++x)
        if (TokenId id = cells_[index(x, y)]; id != no_token) out[id] = {x, y};
    return out;
  }

  Point position_of(TokenId id) const {
    for (int y = 0; y < height_; ++y)
      for (int x = 0; x < width_; ++x)
        if (cells_[index(x, y)] == id) return {x, y};
    throw std::out_of_range("unknown token id");
  }

  std::size_t row_count(int y) const {
    std::size_t c = 0;
    for (int x = 0; x < width_; ++x) c += full(x, y);
    return c;
  }
  std::size_t column_count(int x) const {
    std::size_t c = 0;
    for (int y = 0; y < height_; ++y) c += full(x, y);
    return c;
  }

  // Same set of full positions.
  bool same_shape(const Configuration& o) const noexcept {
    if (width_ != o.width_ || height_ != o.height_) return false;
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if ((cells_[i] == no_token) != (o.cells_[i] == no_token)) return false;
    return true;
  }

  // Same shape and the same label at every full position.
  bool label_equal(const Configuration& o) const noexcept {
    if (!same_shape(o)) return false;
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i] != no_token && labels_[cells_[i]] != o.labels_[o.cells_[i]]) return false;
    return true;
  }

  // Exact equality: positions, ids and labels.
  friend bool operator==(const Configuration&, const Configuration&) = default;

  // Same grid with the positions of all tokens kept and labels replaced.
  Configuration with_labels(std::vector<char> labels) const {
    if (labels.size() != labels_.size()) throw std::invalid_argument("label count mismatch");
    return Configuration(width_, height_, cells_, std::move(labels));
  }

  // Key usable for hashing exact states (extents, then cell ids).
  std::string state_key() const {
    std::string key;
    key.reserve(cells_.size() * 2 + 4);
    auto put16 = [&key](int v) {
      key.push_back(static_cast<char>(v & 0xff));
      key.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    put16(width_);
    put16(height_);
    for (TokenId id : cells_) put16(id + 1);
    return key;
  }

  // Key of the unlabeled shape only.
  std::string shape_key() const {
    std::string key;
    key.reserve(cells_.size() / 8 + 5);
    key.push_back(static_cast<char>(width_ & 0xff));
    key.push_back(static_cast<char>(width_ >> 8));
    key.push_back(static_cast<char>(height_ & 0xff));
    key.push_back(static_cast<char>(height_ >> 8));
    unsigned char acc = 0;
    int bits = 0;
    for (TokenId id : cells_) {
      acc = static_cast<unsigned char>(acc | ((id != no_token) << bits));
      if (++bits == 8) {
        key.push_back(static_cast<char>(acc));
        acc = 0;
        bits = 0;
      }
    }
    if (bits) key.push_back(static_cast<char>(acc));
    return key;
  }

  // Mirror across the main diagonal; ids and labels are kept.
  Configuration transposed() const {
    std::vector<TokenId> out(cells_.size(), no_token);
    for (int y = 0; y < height_; ++y)
      for (int x = 0; x < width_; ++x) out[static_cast<std::size_t>(x) * height_ + y] = cells_[index(x, y)];
    return Configuration(height_, width_, std::move(out), labels_);
  }

  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

 private:
  void normalize() {
    int min_x = width_, max_x = -1, min_y = height_, max_y = -1;
    for (int y = 0; y < height_; ++y)
      for (int x = 0; x < width_; ++x)
        if (cells_[index(x, y)] != no_token) {
          min_x = std::min(min_x, x);
          max_x = std::max(max_x, x);
          min_y = std::min(min_y, y);
          max_y = std::max(max_y, y);
        }
    if (min_x == 0 && min_y == 0 && max_x == width_ - 1 && max_y == height_ - 1) return;
    const int w = max_x - min_x + 1;
    const int h = max_y - min_y + 1;
    std::vector<TokenId> out(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        out[static_cast<std::size_t>(y) * w + x] = cells_[index(x + min_x, y + min_y)];
    width_ = w;
    height_ = h;
    cells_ = std::move(out);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<TokenId> cells_;
  std::vector<char> labels_;
};

inline bool is_label_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
         c == unlabeled;
}

// Grid text: first line is the topmost row, '.' is empty, '#' an unlabeled
// token, any letter or digit a token with that label. Ragged lines are padded
// with '.', CRLF is accepted. Token ids are assigned in reading order.
inline Configuration parse_grid(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw grid_parse_error("empty grid", 0, 0);

  const int rows = static_cast<int>(lines.size());
  std::vector<Placement> tokens;
  for (int r = 0; r < rows; ++r) {
    const auto& line = lines[static_cast<std::size_t>(r)];
    for (std::size_t c = 0; c < line.size(); ++c) {
      const char ch = line[c];
      if (ch == '.') continue;
      if (!is_label_char(ch))
        throw grid_parse_error("illegal character '" + std::string(1, ch) + "' at line " +
                                   std::to_string(r + 1) + ", column " + std::to_string(c + 1),
                               static_cast<std::size_t>(r + 1), c + 1);
      tokens.push_back({{static_cast<int>(c), rows - 1 - r}, ch});
    }
  }
  if (tokens.empty()) throw grid_parse_error("empty grid: no tokens", 0, 0);
  return Configuration::from_placements(tokens);
}

// Inverse of parse_grid: rows top to bottom joined by '\n', no trailing newline.
inline std::string format_grid(const Configuration& c) {
  std::string out;
  out.reserve(static_cast<std::size_t>(c.width() + 1) * c.height());
  for (int y = c.height() - 1; y >= 0; --y) {
    for (int x = 0; x < c.width(); ++x) {
      const TokenId id = c.at(x, y);
      out.push_back(id == no_token ? '.' : c.label(id));
    }
    if (y) out.push_back('\n');
  }
  return out;
}

}  // namespace linepush

template <>
struct std::hash<linepush::Point> {
  std::size_t operator()(const linepush::Point& p) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(p.x) << 32) ^ static_cast<unsigned>(p.y));
  }
};
