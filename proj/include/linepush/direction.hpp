#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linepush {

// A push in direction d makes every token fall one unit toward d inside the
// bounding box.
enum class Direction : std::uint8_t { left = 0, right = 1, up = 2, down = 3 };

inline constexpr std::array<Direction, 4> all_directions = {
    Direction::left, Direction::right, Direction::up, Direction::down};

constexpr Direction opposite(Direction d) {
  switch (d) {
    case Direction::left: return Direction::right;
    case Direction::right: return Direction::left;
    case Direction::up: return Direction::down;
    case Direction::down: return Direction::up;
  }
  return d;
}

// Quarter turn clockwise: left -> up -> right -> down -> left.
constexpr Direction rotate_cw(Direction d) {
  switch (d) {
    case Direction::left: return Direction::up;
    case Direction::up: return Direction::right;
    case Direction::right: return Direction::down;
    case Direction::down: return Direction::left;
  }
  return d;
}

constexpr Direction rotate_ccw(Direction d) { return rotate_cw(rotate_cw(rotate_cw(d))); }

// Reflection across the main diagonal (x <-> y).
constexpr Direction transpose(Direction d) {
  switch (d) {
    case Direction::left: return Direction::down;
    case Direction::down: return Direction::left;
    case Direction::right: return Direction::up;
    case Direction::up: return Direction::right;
  }
  return d;
}

constexpr bool is_horizontal(Direction d) {
  return d == Direction::left || d == Direction::right;
}

constexpr char to_char(Direction d) {
  constexpr std::array<char, 4> letters = {'L', 'R', 'U', 'D'};
  return letters[static_cast<std::size_t>(d)];
}

// Unit step of a token moving toward d (y grows upward).
constexpr int step_x(Direction d) {
  return d == Direction::left ? -1 : d == Direction::right ? 1 : 0;
}
constexpr int step_y(Direction d) {
  return d == Direction::down ? -1 : d == Direction::up ? 1 : 0;
}

class sequence_parse_error : public std::invalid_argument {
 public:
  sequence_parse_error(const std::string& what, std::size_t offset)
      : std::invalid_argument(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline Direction direction_from_char(char c) {
  switch (c) {
    case 'L': return Direction::left;
    case 'R': return Direction::right;
    case 'U': return Direction::up;
    case 'D': return Direction::down;
    default:
      throw sequence_parse_error(std::string("illegal direction '") + c + "'", 0);
  }
}

using PushSequence = std::vector<Direction>;

// Text form: letters over {L,R,U,D}; whitespace is ignored.
inline PushSequence parse_sequence(std::string_view text) {
  PushSequence seq;
  seq.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (c) {
      case 'L': seq.push_back(Direction::left); break;
      case 'R': seq.push_back(Direction::right); break;
      case 'U': seq.push_back(Direction::up); break;
      case 'D': seq.push_back(Direction::down); break;
      default:
        throw sequence_parse_error("illegal move character '" + std::string(1, c) +
                                       "' at offset " + std::to_string(i),
                                   i);
    }
  }
  return seq;
}

inline std::string format_sequence(const PushSequence& seq) {
  std::string out;
  out.reserve(seq.size());
  for (Direction d : seq) out.push_back(to_char(d));
  return out;
}

// d repeated k times.
inline PushSequence repeat(Direction d, std::size_t k) { return PushSequence(k, d); }

inline PushSequence concat(std::initializer_list<PushSequence> parts) {
  PushSequence out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline void append(PushSequence& dst, const PushSequence& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

inline PushSequence transposed(const PushSequence& seq) {
  PushSequence out;
  out.reserve(seq.size());
  for (Direction d : seq) out.push_back(transpose(d));
  return out;
}

}  // namespace linepush
