#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "configuration.hpp"
#include "push.hpp"

namespace linepush {

struct SearchBudget {
  std::size_t max_states = 10'000'000;
  std::size_t max_depth = std::numeric_limits<std::size_t>::max();
  std::chrono::milliseconds max_time{0};  // zero: no time limit
};

enum class SearchOutcome {
  found,
  refuted,    // whole reachable set enumerated, no state satisfies the goal
  exhausted,  // a budget tripped before the enumeration completed
};

// How states are told apart: by occupied positions only, or by token ids too.
enum class StateIdentity { shape, exact };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  PushSequence witness;  // shortest, lexicographically smallest in L<R<U<D
  std::size_t states = 0;
  std::size_t depth = 0;  // deepest level fully expanded
};

using GoalPredicate = std::function<bool(const Configuration&)>;

inline GoalPredicate box_goal(int a, int b) {
  return [a, b](const Configuration& c) { return is_box(c, a, b); };
}

inline GoalPredicate shape_goal(const Configuration& target) {
  return [target](const Configuration& c) { return c.same_shape(target); };
}

// Breadth-first search over configurations reachable from `start`. Children
// are generated in the order L,R,U,D, so the first hit is the shortest
// witness and, among those, the lexicographically smallest.
inline SearchResult brute_force_search(const Configuration& start, const GoalPredicate& goal,
                                       const SearchBudget& budget = {},
                                       StateIdentity identity = StateIdentity::shape) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  auto key_of = [identity](const Configuration& c) {
    return identity == StateIdentity::shape ? c.shape_key() : c.state_key();
  };

  struct Node {
    std::uint32_t parent;
    Direction via;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::uint32_t> seen;
  auto witness_for = [&nodes](std::uint32_t i) {
    PushSequence out;
    while (i != 0) {
      out.push_back(nodes[i].via);
      i = nodes[i].parent;
    }
    return PushSequence(out.rbegin(), out.rend());
  };

  SearchResult result;
  nodes.push_back({0, Direction::left});
  seen.emplace(key_of(start), 0);
  result.states = 1;
  if (goal(start)) {
    result.outcome = SearchOutcome::found;
    return result;
  }

  std::vector<std::pair<Configuration, std::uint32_t>> level{{start, 0}}, next;
  bool truncated = false;
  for (std::size_t depth = 0; !level.empty(); ++depth) {
    if (depth >= budget.max_depth) {
      truncated = true;
      break;
    }
    next.clear();
    for (const auto& [conf, idx] : level) {
      if (budget.max_time.count() > 0 && clock::now() - t0 > budget.max_time) {
        result.outcome = SearchOutcome::exhausted;
        result.states = nodes.size();
        return result;
      }
      for (Direction d : all_directions) {
        Configuration child = push(conf, d);
        auto [it, inserted] = seen.try_emplace(key_of(child), static_cast<std::uint32_t>(nodes.size()));
        if (!inserted) continue;
        nodes.push_back({idx, d});
        if (goal(child)) {
          result.outcome = SearchOutcome::found;
          result.witness = witness_for(it->second);
          result.states = nodes.size();
          result.depth = depth;
          return result;
        }
        if (nodes.size() >= budget.max_states) {
          result.outcome = SearchOutcome::exhausted;
          result.states = nodes.size();
          result.depth = depth;
          return result;
        }
        next.emplace_back(std::move(child), it->second);
      }
    }
    result.depth = depth;
    level.swap(next);
  }
  result.states = nodes.size();
  result.outcome = truncated ? SearchOutcome::exhausted : SearchOutcome::refuted;
  return result;
}

}  // namespace linepush
