// linepush: command-line front end and HTTP service.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "linepush/http.hpp"
#include "linepush/linepush.hpp"

namespace {

using namespace linepush;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_negative = 2;  // unsolvable, refuted, unsupported, failed check

std::string slurp(const std::string& path) {
  std::stringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

Configuration read_grid(const std::string& path) { return parse_grid(slurp(path)); }

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? v : fallback;
}

int run_serve(int port, const std::string& dir) {
  PuzzleStore store;
  if (!dir.empty()) store = PuzzleStore::load(dir);
  for (const auto& [file, why] : store.rejected()) std::cerr << "skipping " << file << ": " << why << "\n";
  const Service service(std::move(store));
  httplib::Server srv;
  bind_routes(srv, service);
  std::cerr << "serving " << service.store().all().size() << " puzzles on port " << port << "\n";
  if (!srv.listen("0.0.0.0", port)) throw std::runtime_error("cannot listen on port " + std::to_string(port));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global-control push puzzles: simulate, canonicalize, classify and solve."};
  app.require_subcommand(1);

  std::string input;
  auto add_input = [&input](CLI::App* sub) {
    sub->add_option("input", input, "grid file (default: stdin)");
  };

  auto* sim = app.add_subcommand("sim", "apply a push sequence");
  std::string moves;
  bool trace = false;
  sim->add_option("--moves", moves, "sequence over L,R,U,D")->required();
  sim->add_flag("--trace", trace, "print every intermediate grid");
  add_input(sim);

  auto* canon = app.add_subcommand("canon", "canonicalize by alternating down and left pushes");
  add_input(canon);

  auto* cls = app.add_subcommand("classify", "group of reachable permutations of a compact grid");
  add_input(cls);

  auto* box = app.add_subcommand("solve-box", "push a sparse grid into an a x b box");
  int box_a = 0, box_b = 0;
  bool brute = false;
  std::size_t max_states = 10'000'000;
  box->add_option("--a", box_a, "columns")->required()->check(CLI::PositiveNumber);
  box->add_option("--b", box_b, "rows")->required()->check(CLI::PositiveNumber);
  box->add_flag("--brute", brute, "exhaustive breadth-first search");
  box->add_option("--max-states", max_states, "search budget");
  add_input(box);

  auto* perm = app.add_subcommand("solve-perm", "rearrange a compact grid into a same-shaped goal");
  std::string goal_path;
  perm->add_option("--goal", goal_path, "goal grid file")->required();
  add_input(perm);

  auto* verify = app.add_subcommand("verify", "check that a sequence reaches the goal");
  verify->add_option("--moves", moves, "sequence over L,R,U,D")->required();
  verify->add_option("--goal", goal_path, "goal grid file")->required();
  add_input(verify);

  auto* gen = app.add_subcommand("gen", "generate a configuration");
  gen->require_subcommand(1);
  auto* gen_diag = gen->add_subcommand("diagonal", "n tokens on a diagonal");
  int gen_n = 0;
  gen_diag->add_option("--n", gen_n)->required()->check(CLI::PositiveNumber);
  auto* gen_cx = gen->add_subcommand("counterexample", "sparse grid that cannot reach an a x b box");
  int gen_a = 0, gen_b = 0;
  gen_cx->add_option("--a", gen_a)->required();
  gen_cx->add_option("--b", gen_b)->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate the permutation group by search");
  std::size_t budget = 5'000'000;
  enumerate->add_option("--budget", budget, "state budget");
  add_input(enumerate);

  auto* serve = app.add_subcommand("serve", "JSON API over HTTP");
  int port = std::stoi(env_or("PORT", "8080"));
  std::string puzzle_dir = env_or("PUZZLE_DIR", "");
  serve->add_option("--port", port)->check(CLI::Range(1, 65535));
  serve->add_option("--puzzles", puzzle_dir, "directory of .puzzle files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      const auto seq = parse_sequence(moves);
      const Configuration c = read_grid(input);
      if (trace) {
        const auto steps = apply_with_trace(c, seq);
        for (std::size_t i = 0; i < steps.size(); ++i) {
          if (i) std::cout << "\n" << to_char(seq[i - 1]) << "\n";
          std::cout << format_grid(steps[i]) << "\n";
        }
      } else {
        std::cout << format_grid(apply_sequence(c, seq)) << "\n";
      }
      return exit_ok;
    }
    if (*canon) {
      const auto r = canonicalize(read_grid(input));
      std::cout << format_grid(r.config) << "\n" << format_sequence(r.sequence) << "\n";
      return exit_ok;
    }
    if (*cls) {
      const Configuration c = read_grid(input);
      require_compact(c);
      std::cout << classification_json(c).dump() << "\n";
      return exit_ok;
    }
    if (*box) {
      const Configuration c = read_grid(input);
      if (c.size() != static_cast<std::size_t>(box_a) * box_b)
        throw std::invalid_argument("token count does not match box size");
      if (!brute) {
        const auto r = solve_box(c, {box_a, box_b});
        if (r.status == BoxStatus::solved) {
          std::cout << format_sequence(r.moves) << "\n";
          return exit_ok;
        }
        std::cout << (r.status == BoxStatus::unsupported ? "UNSUPPORTED" : "NONE") << "\n";
        return exit_negative;
      }
      SearchBudget b;
      b.max_states = max_states;
      const auto r = brute_force_search(c, box_goal(box_a, box_b), b);
      switch (r.outcome) {
        case SearchOutcome::found:
          std::cout << format_sequence(r.witness) << "\n";
          return exit_ok;
        case SearchOutcome::refuted:
          std::cout << "REFUTED (" << r.states << " states)\n";
          return exit_negative;
        case SearchOutcome::exhausted:
          std::cerr << "error: search budget exceeded after " << r.states << " states\n";
          return exit_error;
      }
    }
    if (*perm) {
      const Configuration c = read_grid(input);
      const Configuration goal = read_grid(goal_path);
      const Solvability s = is_solvable(c, goal);
      if (!s.solvable) {
        std::cout << "UNSOLVABLE(" << to_string(s.reason) << ")\n";
        return exit_negative;
      }
      std::cout << format_sequence(solve_permutation(c, goal)) << "\n";
      return exit_ok;
    }
    if (*verify) {
      const auto seq = parse_sequence(moves);
      const Configuration c = read_grid(input);
      const Configuration goal = read_grid(goal_path);
      const bool ok = apply_sequence(c, seq).label_equal(goal);
      std::cout << (ok ? "OK" : "FAIL") << "\n";
      return ok ? exit_ok : exit_negative;
    }
    if (*gen_diag) {
      std::cout << format_grid(diagonal_config(gen_n)) << "\n";
      return exit_ok;
    }
    if (*gen_cx) {
      std::cout << format_grid(counterexample(gen_a, gen_b)) << "\n";
      return exit_ok;
    }
    if (*enumerate) {
      const Configuration c = read_grid(input);
      const auto k = canonical_form(c).config;
      const auto shape = canonical_shape(k);
      const auto g = enumerate_group(shape.to_configuration(), budget);
      std::cout << group_report(shape, g).dump() << "\n";
      if (!g.complete) {
        std::cerr << "error: enumeration budget exceeded after " << g.states << " states\n";
        return exit_error;
      }
      return exit_ok;
    }
    if (*serve) return run_serve(port, puzzle_dir);
  } catch (const grid_parse_error& e) {
    std::cerr << "error: malformed grid: " << e.what() << "\n";
  } catch (const sequence_parse_error& e) {
    std::cerr << "error: malformed move sequence: " << e.what() << "\n";
  } catch (const not_compact_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return exit_error;
}
