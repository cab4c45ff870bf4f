#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "compaction.hpp"
#include "perm_solver.hpp"
#include "puzzle_file.hpp"
#include "search.hpp"

namespace linepush {

using json = nlohmann::json;

// {a, b, a_full, b_full, core_cells, class, order}; order is a string when it
// does not fit in 64 bits.
inline json classification_json(const Classification& cls) {
  const auto& g = cls.geometry;
  json j = {{"a", g.a},
            {"b", g.b},
            {"a_full", g.a_full},
            {"b_full", g.b_full},
            {"core_cells", g.core.size()},
            {"class", to_string(cls.group.kind)}};
  if (auto v = cls.group.order_value())
    j["order"] = *v;
  else
    j["order"] = cls.group.order();
  return j;
}

inline json classification_json(const Configuration& c) {
  return classification_json(classify_shape(canonical_shape(c)));
}

struct Response {
  int status = 200;
  std::string body;
};

struct ServiceOptions {
  std::chrono::milliseconds solve_budget{2000};
  std::size_t max_states = 2'000'000;
};

// Outcome of a solve request, independent of transport.
struct SolveOutcome {
  bool solvable = false;
  std::string reason;
  PushSequence moves;
  bool timed_out = false;
};

class Service {
 public:
  explicit Service(PuzzleStore store = {}, ServiceOptions opts = {})
      : store_(std::move(store)), opts_(opts) {}

  const PuzzleStore& store() const noexcept { return store_; }

  Response handle(const std::string& method, const std::string& path, const std::string& body) const {
    try {
      if (method == "GET" && path == "/api/puzzles") return list();
      if (method == "GET" && path.rfind("/api/puzzles/", 0) == 0) return get(path.substr(13));
      if (method == "POST") {
        if (path == "/api/push") return push_request(parse_body(body));
        if (path == "/api/classify") return classify_request(parse_body(body));
        if (path == "/api/solve") return solve_request(parse_body(body));
        if (path == "/api/verify") return verify_request(parse_body(body));
      }
      return error(404, "no such endpoint");
    } catch (const bad_request& e) {
      return error(400, e.what());
    } catch (const grid_parse_error& e) {
      return error(400, e.what());
    } catch (const sequence_parse_error& e) {
      return error(400, e.what());
    } catch (const json::exception& e) {
      return error(400, e.what());
    } catch (const std::exception& e) {
      return error(500, e.what());
    }
  }

  // Permutation puzzles go through the group solver; anything else is a
  // compaction, tried constructively first and then by bounded search.
  SolveOutcome solve(const Configuration& start, const Configuration& goal) const {
    SolveOutcome out;
    if (start.label_equal(goal)) {
      out.solvable = true;
      return out;
    }
    if (is_compact(start)) {
      if (!is_compact(goal) || !compatible(start, goal)) {
        out.reason = to_string(UnsolvableReason::shape_mismatch);
        return out;
      }
      const auto& solver = solver_for(canonical_shape(start));
      const Solvability s = solver.check(start, goal);
      if (!s.solvable) {
        out.reason = to_string(s.reason);
        return out;
      }
      out.solvable = true;
      out.moves = solver.solve(start, goal);
      return out;
    }
    const bool uniform = std::all_of(start.labels().begin(), start.labels().end(),
                                     [&](char l) { return l == start.labels().front(); });
    const bool box_goal = goal.area() == static_cast<long>(goal.size());
    if (uniform && box_goal && is_sparse(start)) {
      const auto r = solve_box(start, {goal.width(), goal.height()});
      if (r.status == BoxStatus::solved && apply_sequence(start, r.moves).label_equal(goal)) {
        out.solvable = true;
        out.moves = r.moves;
        return out;
      }
    }
    SearchBudget budget;
    budget.max_states = opts_.max_states;
    budget.max_time = opts_.solve_budget;
    const auto r = brute_force_search(
        start, [&goal](const Configuration& c) { return c.label_equal(goal); }, budget,
        uniform ? StateIdentity::shape : StateIdentity::exact);
    switch (r.outcome) {
      case SearchOutcome::found:
        out.solvable = true;
        out.moves = r.witness;
        break;
      case SearchOutcome::refuted:
        out.reason = "unreachable";
        break;
      case SearchOutcome::exhausted:
        out.timed_out = true;
        out.reason = "budget_exhausted";
        break;
    }
    return out;
  }

 private:
  class bad_request : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  static Response ok(const json& j) { return {200, j.dump()}; }
  static Response error(int status, const std::string& msg) { return {status, json{{"error", msg}}.dump()}; }

  static json parse_body(const std::string& body) {
    json j = json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw bad_request("body is not a JSON object");
    return j;
  }

  static std::string field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end() || !it->is_string()) throw bad_request(std::string("missing string field '") + name + "'");
    return it->get<std::string>();
  }

  Response list() const {
    json arr = json::array();
    for (const auto& [id, p] : store_.all())
      arr.push_back({{"id", id}, {"kind", to_string(p.kind)}, {"size", p.start.size()}});
    return ok(arr);
  }

  Response get(const std::string& id) const {
    const PuzzleInstance* p = store_.find(id);
    if (!p) return error(404, "unknown puzzle '" + id + "'");
    return ok({{"start", format_grid(p->start)}, {"goal", format_grid(p->goal)}, {"kind", to_string(p->kind)}});
  }

  static Response push_request(const json& j) {
    const Configuration c = parse_grid(field(j, "grid"));
    const std::string dir = field(j, "dir");
    if (dir.size() != 1) throw bad_request("dir must be one of L, R, U, D");
    Direction d;
    try {
      d = direction_from_char(dir[0]);
    } catch (const std::exception&) {
      throw bad_request("dir must be one of L, R, U, D");
    }
    const Configuration next = push(c, d);
    return ok({{"grid", format_grid(next)}, {"changed", next != c}});
  }

  static Response classify_request(const json& j) {
    const Configuration c = parse_grid(field(j, "grid"));
    if (!is_compact(c)) return error(422, "configuration is not compact");
    return ok(classification_json(c));
  }

  Response solve_request(const json& j) const {
    const Configuration start = parse_grid(field(j, "start"));
    const Configuration goal = parse_grid(field(j, "goal"));
    if (start.size() != goal.size()) return error(422, "start and goal have different token counts");
    const SolveOutcome r = solve(start, goal);
    if (r.timed_out) return error(503, "solve budget exhausted");
    json out{{"solvable", r.solvable}};
    if (r.solvable)
      out["moves"] = format_sequence(r.moves);
    else
      out["reason"] = r.reason;
    return ok(out);
  }

  static Response verify_request(const json& j) {
    const Configuration start = parse_grid(field(j, "start"));
    const Configuration goal = parse_grid(field(j, "goal"));
    const PushSequence moves = parse_sequence(field(j, "moves"));
    return ok({{"ok", apply_sequence(start, moves).label_equal(goal)}});
  }

  const PermutationSolver& solver_for(const CanonicalShape& shape) const {
    std::lock_guard lock(cache_mutex_);
    auto& slot = solvers_[shape.to_string()];
    if (!slot) slot = std::make_shared<const PermutationSolver>(shape);
    return *slot;
  }

  PuzzleStore store_;
  ServiceOptions opts_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, std::shared_ptr<const PermutationSolver>> solvers_;
};

}  // namespace linepush
