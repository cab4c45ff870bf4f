#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "compact.hpp"
#include "configuration.hpp"
#include "permutation.hpp"
#include "push.hpp"

namespace linepush {

class shape_changed_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_canonical(const Configuration& k) {
  if (!is_canonical(k)) throw std::invalid_argument("configuration is not canonical");
}

// Places of a canonical configuration: topmost row first, left to right.
inline std::vector<Point> index_positions(const Configuration& k) {
  require_canonical(k);
  std::vector<Point> out;
  out.reserve(k.size());
  for (int y = k.height() - 1; y >= 0; --y)
    for (int x = 0; x < k.width(); ++x)
      if (k.full(x, y)) out.push_back({x, y});
  return out;
}

// Place index for every cell of the box (-1 for empty cells).
inline std::vector<int> place_table(const Configuration& k) {
  std::vector<int> table(static_cast<std::size_t>(k.area()), -1);
  const auto pos = index_positions(k);
  for (std::size_t i = 0; i < pos.size(); ++i) table[k.index(pos[i].x, pos[i].y)] = static_cast<int>(i);
  return table;
}

// Permutation of places between two same-shaped configurations carrying the
// same token ids: the token at place p of `from` sits at place result(p) of `to`.
inline Permutation place_permutation(const Configuration& from, const Configuration& to) {
  if (!from.same_shape(to)) throw shape_changed_error("push sequence changed the shape");
  const auto table = place_table(from);
  const auto end_pos = to.positions();
  std::vector<int> img(from.size());
  const auto start = index_positions(from);
  for (std::size_t p = 0; p < start.size(); ++p) {
    const TokenId id = from.at(start[p]);
    const Point q = end_pos[static_cast<std::size_t>(id)];
    img[p] = table[from.index(q.x, q.y)];
  }
  return Permutation(std::move(img));
}

inline Permutation induced_permutation(const Configuration& k, const PushSequence& s) {
  require_canonical(k);
  return place_permutation(k, apply_sequence(k, s));
}

// Bounding box a x b; a_full/b_full count full columns/rows.
struct CoreGeometry {
  int a = 0, b = 0;
  int a_full = 0, b_full = 0;
  int a_rest = 0, b_rest = 0;  // a - a_full, b - b_full
  std::vector<Point> core;      // cells no push sequence can move

  bool in_core(Point p) const {
    return !core.empty() && p.x >= a_rest && p.x < a - a_rest && p.y >= b_rest && p.y < b - b_rest;
  }
};

inline CoreGeometry core_geometry_from_counts(int a, int b, int a_full, int b_full) {
  CoreGeometry g;
  g.a = a;
  g.b = b;
  g.a_full = a_full;
  g.b_full = b_full;
  g.a_rest = a - a_full;
  g.b_rest = b - b_full;
  if (g.a_full > g.a_rest && g.b_full > g.b_rest)
    for (int y = g.b_rest; y < b - g.b_rest; ++y)
      for (int x = g.a_rest; x < a - g.a_rest; ++x) g.core.push_back({x, y});
  return g;
}

inline CoreGeometry core_geometry(const Configuration& k) {
  require_compact(k);
  int a_full = 0, b_full = 0;
  for (int x = 0; x < k.width(); ++x) a_full += k.column_count(x) == static_cast<std::size_t>(k.height());
  for (int y = 0; y < k.height(); ++y) b_full += k.row_count(y) == static_cast<std::size_t>(k.width());
  return core_geometry_from_counts(k.width(), k.height(), a_full, b_full);
}

struct GeneratorSequence {
  std::string name;  // "A0", "B1", "C0", ...
  PushSequence word;
  PushSequence inverse_word;
  Permutation perm;
};

// Type-A k: R^(k+1) U L D L^k      for k < a''
// Type-B k: U^(k+1) R D L D^k      for k < b''
// Type-C k: R^k U R D L^(k+1)      for k < a''
inline std::vector<GeneratorSequence> generator_sequences(const Configuration& k) {
  require_canonical(k);
  const auto g = core_geometry(k);
  using D = Direction;
  std::vector<std::pair<std::string, PushSequence>> words;
  for (int i = 0; i < g.a_rest; ++i)
    words.emplace_back("A" + std::to_string(i),
                       concat({repeat(D::right, static_cast<std::size_t>(i) + 1), {D::up, D::left, D::down},
                               repeat(D::left, static_cast<std::size_t>(i))}));
  for (int i = 0; i < g.b_rest; ++i)
    words.emplace_back("B" + std::to_string(i),
                       concat({repeat(D::up, static_cast<std::size_t>(i) + 1), {D::right, D::down, D::left},
                               repeat(D::down, static_cast<std::size_t>(i))}));
  for (int i = 0; i < g.a_rest; ++i)
    words.emplace_back("C" + std::to_string(i),
                       concat({repeat(D::right, static_cast<std::size_t>(i)), {D::up, D::right, D::down},
                               repeat(D::left, static_cast<std::size_t>(i) + 1)}));
  std::vector<GeneratorSequence> out;
  for (auto& [name, word] : words) {
    GeneratorSequence gs;
    gs.name = name;
    gs.perm = induced_permutation(k, word);
    gs.inverse_word = invert_sequence(k, word);
    gs.word = std::move(word);
    out.push_back(std::move(gs));
  }
  return out;
}

// Words over generators: letter 2*i is generator i, 2*i+1 its inverse.
using GeneratorWord = std::vector<int>;

inline PushSequence expand_word(const GeneratorWord& w, const std::vector<GeneratorSequence>& gens) {
  PushSequence out;
  for (int letter : w) {
    const auto& g = gens[static_cast<std::size_t>(letter / 2)];
    append(out, letter % 2 ? g.inverse_word : g.word);
  }
  return out;
}

inline GeneratorWord inverse_word(const GeneratorWord& w) {
  GeneratorWord out(w.rbegin(), w.rend());
  for (int& letter : out) letter ^= 1;
  return out;
}

inline std::vector<Permutation> letter_perms(const std::vector<Permutation>& gens) {
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    out.push_back(g);
    out.push_back(g.inverse());
  }
  return out;
}

struct WordTable {
  std::vector<Permutation> elements;  // breadth-first order
  std::unordered_map<Permutation, GeneratorWord> words;
  bool complete = true;
};

// Breadth-first closure of the generated group, keeping a shortest word for
// every element. Stops (incomplete) after `limit` elements.
inline WordTable closure_with_words(const std::vector<Permutation>& gens, std::size_t size,
                                    std::size_t limit) {
  WordTable t;
  const auto letters = letter_perms(gens);
  Permutation id(size);
  t.elements.push_back(id);
  t.words.emplace(id, GeneratorWord{});
  for (std::size_t head = 0; head < t.elements.size(); ++head) {
    const Permutation cur = t.elements[head];
    const GeneratorWord cur_word = t.words.at(cur);
    for (std::size_t l = 0; l < letters.size(); ++l) {
      Permutation nxt = cur * letters[l];
      if (t.words.contains(nxt)) continue;
      if (t.elements.size() >= limit) {
        t.complete = false;
        return t;
      }
      GeneratorWord w = cur_word;
      w.push_back(static_cast<int>(l));
      t.words.emplace(nxt, std::move(w));
      t.elements.push_back(std::move(nxt));
    }
  }
  return t;
}

enum class GroupKind { trivial, cyclic, alt_five, alternating };

inline const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::trivial: return "trivial";
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::alt_five: return "alt5";
    case GroupKind::alternating: return "alternating";
  }
  return "?";
}

struct GroupElement {
  Permutation perm;
  PushSequence word;
};

// Decimal m!/2 (1 when m < 2).
inline std::string half_factorial(int m) {
  std::vector<int> digits{1};  // little-endian base 10
  auto mul = [&digits](int f) {
    int carry = 0;
    for (int& d : digits) {
      const int v = d * f + carry;
      d = v % 10;
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(carry % 10);
      carry /= 10;
    }
  };
  for (int f = 3; f <= m; ++f) mul(f);
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s.push_back(static_cast<char>('0' + *it));
  return s;
}

// Group of place permutations reachable on a compact shape.
struct GroupClass {
  GroupKind kind = GroupKind::trivial;
  Permutation generator;              // cyclic
  std::uint64_t cyclic_order = 1;     // cyclic: 2a+2b-5
  std::vector<GroupElement> elements; // alt_five: all 60 elements
  std::vector<int> non_core;          // alternating: places acted on

  std::string order() const {
    switch (kind) {
      case GroupKind::trivial: return "1";
      case GroupKind::cyclic: return std::to_string(cyclic_order);
      case GroupKind::alt_five: return std::to_string(elements.size());
      case GroupKind::alternating: return half_factorial(static_cast<int>(non_core.size()));
    }
    return "0";
  }

  // Order as an integer when it fits in 64 bits.
  std::optional<std::uint64_t> order_value() const {
    const std::string s = order();
    if (s.size() > 19) return std::nullopt;
    return std::stoull(s);
  }
};

struct Classification {
  CanonicalShape shape;
  Configuration canonical;  // token id == place index
  CoreGeometry geometry;
  std::vector<GeneratorSequence> generators;
  GroupClass group;
};

inline Classification classify_shape(const CanonicalShape& shape) {
  Configuration k = shape.to_configuration();
  CoreGeometry geom = core_geometry(k);
  auto gens = generator_sequences(k);
  GroupClass gc;
  const long empty = k.area() - static_cast<long>(k.size());
  if (empty == 0) {
    gc.kind = GroupKind::trivial;
  } else if (empty == 1) {
    gc.kind = GroupKind::cyclic;
    gc.generator = gens.front().perm;  // type-A 0-sequence
    gc.cyclic_order = static_cast<std::uint64_t>(2 * k.width() + 2 * k.height() - 5);
  } else if (k.size() == 6 && empty == 2) {
    gc.kind = GroupKind::alt_five;
    std::vector<Permutation> perms;
    for (const auto& g : gens) perms.push_back(g.perm);
    auto table = closure_with_words(perms, k.size(), 1000);
    for (const auto& e : table.elements) gc.elements.push_back({e, expand_word(table.words.at(e), gens)});
  } else {
    gc.kind = GroupKind::alternating;
    const auto pos = index_positions(k);
    for (std::size_t p = 0; p < pos.size(); ++p)
      if (!geom.in_core(pos[p])) gc.non_core.push_back(static_cast<int>(p));
  }
  return {shape, std::move(k), std::move(geom), std::move(gens), std::move(gc)};
}

// Classification of the group of a compact configuration, computed on its
// canonical shape.
inline GroupClass classify(const Configuration& c) {
  return classify_shape(canonical_shape(c)).group;
}

}  // namespace linepush
