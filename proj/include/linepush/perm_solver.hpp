#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "compact.hpp"
#include "perm_engine.hpp"

namespace linepush {

enum class UnsolvableReason {
  none,
  not_compact,
  shape_mismatch,
  label_mismatch,   // label multisets differ
  core_mismatch,    // a core cell carries a different label
  parity,           // distinct non-core labels need an odd permutation
  not_in_group,     // trivial, cyclic or Alt(5) group has no matching element
};

inline const char* to_string(UnsolvableReason r) {
  switch (r) {
    case UnsolvableReason::none: return "none";
    case UnsolvableReason::not_compact: return "not_compact";
    case UnsolvableReason::shape_mismatch: return "shape_mismatch";
    case UnsolvableReason::label_mismatch: return "label_mismatch";
    case UnsolvableReason::core_mismatch: return "core_mismatch";
    case UnsolvableReason::parity: return "parity";
    case UnsolvableReason::not_in_group: return "not_in_group";
  }
  return "?";
}

struct Solvability {
  bool solvable = false;
  UnsolvableReason reason = UnsolvableReason::none;
  std::string detail;
  std::optional<Permutation> target;  // place permutation to realize, when solvable
};

class unsolvable_error : public std::runtime_error {
 public:
  explicit unsolvable_error(const Solvability& s)
      : std::runtime_error(std::string("unsolvable: ") + to_string(s.reason) +
                           (s.detail.empty() ? "" : " (" + s.detail + ")")),
        reason_(s.reason) {}
  UnsolvableReason reason() const noexcept { return reason_; }

 private:
  UnsolvableReason reason_;
};

// Labels of a compact configuration's canonical form, by place index.
inline std::vector<char> labels_by_place(const Configuration& canonical) {
  std::vector<char> out;
  for (Point p : index_positions(canonical)) out.push_back(canonical.label(canonical.at(p)));
  return out;
}

// Decision and word synthesis for one canonical shape. Group tables are built
// on first use and shared by all later calls.
class PermutationSolver {
 public:
  // Groups up to this order are tabulated with a shortest generator word per
  // element; larger alternating groups use a 3-cycle stabilizer chain.
  static constexpr std::size_t table_limit = 20160;

  explicit PermutationSolver(const CanonicalShape& shape)
      : cls_(classify_shape(shape)), positions_(index_positions(cls_.canonical)) {
    for (std::size_t p = 0; p < positions_.size(); ++p)
      (cls_.geometry.in_core(positions_[p]) ? core_ : non_core_).push_back(static_cast<int>(p));
  }

  const Classification& classification() const noexcept { return cls_; }
  const GroupClass& group() const noexcept { return cls_.group; }
  const std::vector<int>& core_places() const noexcept { return core_; }
  const std::vector<int>& non_core_places() const noexcept { return non_core_; }
  std::size_t size() const noexcept { return positions_.size(); }

  bool contains(const Permutation& p) const {
    if (p.size() != size()) return false;
    const auto& g = cls_.group;
    switch (g.kind) {
      case GroupKind::trivial: return p.is_identity();
      case GroupKind::cyclic: return cyclic_exponent(p).has_value();
      case GroupKind::alt_five:
        for (const auto& e : g.elements)
          if (e.perm == p) return true;
        return false;
      case GroupKind::alternating:
        for (int c : core_)
          if (!p.fixes(c)) return false;
        return p.parity() == Parity::even;
    }
    return false;
  }

  // Finds a group element carrying labels `from` (per place) onto `to`.
  Solvability decide(const std::vector<char>& from, const std::vector<char>& to) const {
    Solvability s;
    if (from.size() != size() || to.size() != size()) {
      s.reason = UnsolvableReason::shape_mismatch;
      return s;
    }
    {
      auto a = from, b = to;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        s.reason = UnsolvableReason::label_mismatch;
        s.detail = "label multisets differ";
        return s;
      }
    }
    for (int c : core_)
      if (from[static_cast<std::size_t>(c)] != to[static_cast<std::size_t>(c)]) {
        s.reason = UnsolvableReason::core_mismatch;
        s.detail = "core place " + std::to_string(c + 1) + " differs";
        return s;
      }
    auto maps = [&](const Permutation& p) {
      for (std::size_t i = 0; i < size(); ++i)
        if (to[static_cast<std::size_t>(p(static_cast<int>(i)))] != from[i]) return false;
      return true;
    };
    const auto& g = cls_.group;
    auto accept = [&s](Permutation p) {
      s.solvable = true;
      s.target = std::move(p);
      return s;
    };
    switch (g.kind) {
      case GroupKind::trivial:
        if (from == to) return accept(Permutation(size()));
        break;
      case GroupKind::cyclic: {
        Permutation p(size());
        for (std::uint64_t j = 0; j < g.cyclic_order; ++j, p = p * g.generator)
          if (maps(p)) return accept(p);
        break;
      }
      case GroupKind::alt_five:
        for (const auto& e : g.elements)
          if (maps(e.perm)) return accept(e.perm);
        break;
      case GroupKind::alternating: {
        // Match non-core places label by label; fix parity with a swap of two
        // equally labelled targets when one exists.
        std::map<char, std::vector<int>> slots;
        for (auto it = non_core_.rbegin(); it != non_core_.rend(); ++it)
          slots[to[static_cast<std::size_t>(*it)]].push_back(*it);
        std::vector<int> img(size());
        std::iota(img.begin(), img.end(), 0);
        for (int p : non_core_) {
          auto& v = slots[from[static_cast<std::size_t>(p)]];
          img[static_cast<std::size_t>(p)] = v.back();
          v.pop_back();
        }
        Permutation p(std::move(img));
        if (p.parity() == Parity::odd) {
          std::optional<std::pair<int, int>> twin;
          for (std::size_t i = 0; i < non_core_.size() && !twin; ++i)
            for (std::size_t j = i + 1; j < non_core_.size() && !twin; ++j)
              if (to[static_cast<std::size_t>(non_core_[i])] == to[static_cast<std::size_t>(non_core_[j])])
                twin = std::pair{non_core_[i], non_core_[j]};
          if (!twin) {
            s.reason = UnsolvableReason::parity;
            s.detail = "odd permutation of distinct labels";
            return s;
          }
          p = p * Permutation::from_cycles(size(), {{twin->first, twin->second}});
        }
        return accept(std::move(p));
      }
    }
    s.reason = UnsolvableReason::not_in_group;
    s.detail = std::string("no element of the ") + to_string(g.kind) + " group matches";
    return s;
  }

  // Push sequence on the canonical shape inducing p.
  PushSequence word_for(const Permutation& p) const {
    if (!contains(p)) throw std::invalid_argument("permutation is not in the group of this shape");
    const auto& g = cls_.group;
    switch (g.kind) {
      case GroupKind::trivial: return {};
      case GroupKind::cyclic: {
        const auto j = *cyclic_exponent(p);
        const auto& gen = cls_.generators.front();
        PushSequence out;
        const bool backwards = 2 * j > g.cyclic_order;
        const auto reps = backwards ? g.cyclic_order - j : j;
        for (std::uint64_t i = 0; i < reps; ++i) append(out, backwards ? gen.inverse_word : gen.word);
        return out;
      }
      case GroupKind::alt_five:
        for (const auto& e : g.elements)
          if (e.perm == p) return e.word;
        break;
      case GroupKind::alternating:
        if (p.is_identity()) return {};
        if (const auto* t = table()) return expand_word(t->words.at(p), cls_.generators);
        return expand_word(reduce(chain_word(p)), cls_.generators);
    }
    throw std::logic_error("no word for a group element");
  }

  Solvability check(const Configuration& c, const Configuration& goal) const {
    Solvability s;
    if (!is_compact(c) || !is_compact(goal)) {
      s.reason = UnsolvableReason::not_compact;
      return s;
    }
    if (!c.same_shape(goal)) {
      s.reason = UnsolvableReason::shape_mismatch;
      return s;
    }
    if (!(canonical_shape(c) == cls_.shape)) {
      s.reason = UnsolvableReason::shape_mismatch;
      s.detail = "configuration belongs to a different compatibility class";
      return s;
    }
    return decide(labels_by_place(canonical_form(c).config), labels_by_place(canonical_form(goal).config));
  }

  // Canonicalize, realize the permutation on the canonical shape, then undo
  // the goal's canonicalization. The result is replayed before returning.
  PushSequence solve(const Configuration& c, const Configuration& goal) const {
    const Solvability s = check(c, goal);
    if (!s.solvable) throw unsolvable_error(s);
    if (c.label_equal(goal)) return {};
    const auto from = canonical_form(c);
    const auto to = canonical_form(goal);
    PushSequence out = from.sequence;
    append(out, word_for(*s.target));
    append(out, invert_sequence(goal, to.sequence));
    if (!apply_sequence(c, out).label_equal(goal))
      throw std::logic_error("synthesized sequence failed verification");
    return out;
  }

  // The tabulated group, or null when it is too large to tabulate.
  const WordTable* table() const {
    std::call_once(table_once_, [this] {
      if (cls_.group.kind != GroupKind::alternating || non_core_.size() > 8) return;
      std::vector<Permutation> perms;
      for (const auto& g : cls_.generators) perms.push_back(g.perm);
      table_ = std::make_unique<WordTable>(closure_with_words(perms, size(), table_limit + 1));
      if (!table_->complete) throw std::logic_error("group larger than its classification");
    });
    return table_.get();
  }

 private:
  std::optional<std::uint64_t> cyclic_exponent(const Permutation& p) const {
    const auto& g = cls_.group;
    Permutation q(size());
    for (std::uint64_t j = 0; j < g.cyclic_order; ++j, q = q * g.generator)
      if (q == p) return j;
    return std::nullopt;
  }

  struct Chain {
    GeneratorWord cycle_word;  // realizes (x y z)
    std::array<int, 3> base{};
    std::map<std::array<int, 3>, GeneratorWord> conjugators;  // (x,y,z) -> key
  };

  static GeneratorWord reduce(const GeneratorWord& w) {
    GeneratorWord out;
    for (int l : w) {
      if (!out.empty() && out.back() == (l ^ 1))
        out.pop_back();
      else
        out.push_back(l);
    }
    return out;
  }

  const Chain& chain() const {
    std::call_once(chain_once_, [this] { chain_ = std::make_unique<Chain>(build_chain()); });
    return *chain_;
  }

  Chain build_chain() const {
    std::vector<Permutation> perms;
    for (const auto& g : cls_.generators) perms.push_back(g.perm);
    const auto letters = letter_perms(perms);

    // Shortest-first search for an element with a power that is a 3-cycle.
    Chain ch;
    std::optional<std::size_t> best_cost;
    std::unordered_map<Permutation, GeneratorWord> seen;
    std::deque<Permutation> queue;
    Permutation id(size());
    seen.emplace(id, GeneratorWord{});
    queue.push_back(id);
    constexpr std::size_t search_limit = 400000;
    while (!queue.empty() && seen.size() < search_limit) {
      const Permutation cur = queue.front();
      queue.pop_front();
      const GeneratorWord w = seen.at(cur);
      if (best_cost && *best_cost <= w.size()) break;
      const auto cyc = cur.cycles();
      int threes = 0, multiples = 0;
      std::uint64_t other = 1;
      for (const auto& c : cyc) {
        if (c.size() % 3 == 0) {
          ++multiples;
          threes += c.size() == 3;
        } else {
          other = std::lcm(other, static_cast<std::uint64_t>(c.size()));
        }
      }
      if (multiples == 1 && threes == 1 && other < 64) {
        const std::size_t cost = w.size() * other;
        if (!best_cost || cost < *best_cost) {
          best_cost = cost;
          ch.cycle_word.clear();
          for (std::uint64_t i = 0; i < other; ++i) ch.cycle_word.insert(ch.cycle_word.end(), w.begin(), w.end());
          const auto three = cur.pow(static_cast<long>(other)).cycles().front();
          ch.base = {three[0], three[1], three[2]};
        }
      }
      for (std::size_t l = 0; l < letters.size(); ++l) {
        Permutation nxt = cur * letters[l];
        if (seen.contains(nxt)) continue;
        GeneratorWord nw = w;
        nw.push_back(static_cast<int>(l));
        seen.emplace(nxt, std::move(nw));
        queue.push_back(std::move(nxt));
      }
    }
    if (!best_cost) throw std::logic_error("no 3-cycle found among group elements");

    // Words sending the base triple to every ordered triple of non-core places.
    std::deque<std::array<int, 3>> todo{ch.base};
    ch.conjugators.emplace(ch.base, GeneratorWord{});
    while (!todo.empty()) {
      const auto t = todo.front();
      todo.pop_front();
      const GeneratorWord w = ch.conjugators.at(t);
      for (std::size_t l = 0; l < letters.size(); ++l) {
        const std::array<int, 3> nt{letters[l](t[0]), letters[l](t[1]), letters[l](t[2])};
        if (ch.conjugators.contains(nt)) continue;
        GeneratorWord nw = w;
        nw.push_back(static_cast<int>(l));
        ch.conjugators.emplace(nt, std::move(nw));
        todo.push_back(nt);
      }
    }
    return ch;
  }

  // Sift p through the chain of point stabilizers along the non-core places;
  // each level is fixed with one 3-cycle, itself a conjugate of the base cycle.
  GeneratorWord chain_word(const Permutation& p) const {
    const Chain& ch = chain();
    auto three_cycle = [&ch](int a, int b, int c) {
      const auto it = ch.conjugators.find({a, b, c});
      if (it == ch.conjugators.end()) throw std::logic_error("group is not 3-transitive on non-core places");
      GeneratorWord w = inverse_word(it->second);
      w.insert(w.end(), ch.cycle_word.begin(), ch.cycle_word.end());
      w.insert(w.end(), it->second.begin(), it->second.end());
      return w;
    };
    // goal[q]: place the token now at q must reach.
    std::vector<int> goal = p.images();
    GeneratorWord out;
    for (std::size_t i = 0; i + 2 < non_core_.size(); ++i) {
      const int place = non_core_[i];
      int q = -1;
      for (int s : non_core_)
        if (goal[static_cast<std::size_t>(s)] == place) q = s;
      if (q != place) {
        int r = -1;
        for (std::size_t j = i + 1; j < non_core_.size() && r < 0; ++j)
          if (non_core_[j] != q) r = non_core_[j];
        const GeneratorWord w = three_cycle(q, place, r);
        out.insert(out.end(), w.begin(), w.end());
        // Tokens move q -> place -> r -> q.
        const int gq = goal[static_cast<std::size_t>(q)];
        const int gp = goal[static_cast<std::size_t>(place)];
        const int gr = goal[static_cast<std::size_t>(r)];
        goal[static_cast<std::size_t>(place)] = gq;
        goal[static_cast<std::size_t>(r)] = gp;
        goal[static_cast<std::size_t>(q)] = gr;
      }
    }
    for (std::size_t i = 0; i < goal.size(); ++i)
      if (goal[i] != static_cast<int>(i)) throw std::logic_error("sifting left a residue");
    return out;
  }

  Classification cls_;
  std::vector<Point> positions_;
  std::vector<int> core_;
  std::vector<int> non_core_;
  mutable std::once_flag table_once_;
  mutable std::unique_ptr<WordTable> table_;
  mutable std::once_flag chain_once_;
  mutable std::unique_ptr<Chain> chain_;
};

inline Solvability is_solvable(const Configuration& c, const Configuration& goal) {
  Solvability s;
  if (!is_compact(c) || !is_compact(goal)) {
    s.reason = UnsolvableReason::not_compact;
    return s;
  }
  if (!c.same_shape(goal)) {
    s.reason = UnsolvableReason::shape_mismatch;
    return s;
  }
  return PermutationSolver(canonical_shape(c)).check(c, goal);
}

inline PushSequence solve_permutation(const Configuration& c, const Configuration& goal) {
  if (!is_compact(c) || !is_compact(goal)) {
    Solvability s;
    s.reason = UnsolvableReason::not_compact;
    throw unsolvable_error(s);
  }
  return PermutationSolver(canonical_shape(c)).solve(c, goal);
}

}  // namespace linepush
