// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linepush/linepush.hpp"
#include "oracle/reference_stepper.hpp"

using namespace linepush;

namespace {

struct Verdict {
  enum Kind { pass, fail, partial } kind = pass;
  std::string detail;
};

int failures = 0;

void run(const std::string& name, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {Verdict::fail, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const char* tag = v.kind == Verdict::pass ? "PASS" : v.kind == Verdict::fail ? "FAIL" : "PARTIAL";
  if (v.kind == Verdict::fail) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << tag << "  " << name << "  [" << timing << "]  " << v.detail << std::endl;
}

Configuration replay(Configuration c, const PushSequence& s) {
  for (Direction d : s) c = oracle::reference_push(c, d);
  return c;
}

std::string distinct_labels(std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(CanonicalShape::default_label(static_cast<int>(i)));
  return s;
}

CanonicalShape random_shape(std::mt19937& rng, int max_n) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const auto parts = partitions(n);
  return CanonicalShape(parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)]);
}

Configuration random_walk(Configuration c, std::mt19937& rng, int steps) {
  for (int i = 0; i < steps; ++i) c = push(c, all_directions[rng() % 4]);
  return c;
}

// Random sparse configuration of n tokens spread over a box of up to 2n x 2n.
Configuration random_sparse(std::mt19937& rng, int n) {
  std::vector<int> xs(static_cast<std::size_t>(2 * n)), ys(static_cast<std::size_t>(2 * n));
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), 0);
  std::shuffle(xs.begin(), xs.end(), rng);
  std::shuffle(ys.begin(), ys.end(), rng);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]});
  return Configuration::from_points(pts);
}

}  // namespace

int main() {
  std::mt19937 rng(20240611);

  run("push semantics match the reference stepper (<=4 tokens, <=4x4)", [] {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t checked = 0, mismatches = 0, bad_area = 0;
    for (int w = 1; w <= 4; ++w)
      for (int h = 1; h <= 4; ++h)
        oracle::for_each_configuration(w, h, 4, [&](const Configuration& c) {
          for (Direction d : all_directions) {
            const Configuration got = push(c, d);
            ++checked;
            if (!(got == oracle::reference_push(c, d))) ++mismatches;
            const bool same = got.width() == c.width() && got.height() == c.height();
            const bool one_col = got.width() == c.width() - 1 && got.height() == c.height();
            const bool one_row = got.width() == c.width() && got.height() == c.height() - 1;
            if (!(same || one_col || one_row)) ++bad_area;
          }
        });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << checked << " pushes, " << mismatches << " mismatches, " << bad_area << " bad area changes";
    return Verdict{mismatches == 0 && bad_area == 0 && secs < 60 ? Verdict::pass : Verdict::fail, os.str()};
  });

  run("type-A sequence on rows (3,2) is one 5-cycle", [] {
    const Configuration k = CanonicalShape::from_row_lengths({3, 2}).to_configuration();
    const auto g = core_geometry(k);
    const Permutation p = induced_permutation(k, parse_sequence("RULD"));
    const auto cycles = p.cycles();
    const std::size_t expected = static_cast<std::size_t>(2 * g.a_full + 2 * g.b_full - 1);
    const bool ok = cycles.size() == 1 && cycles[0].size() == 5 && expected == 5;
    return Verdict{ok ? Verdict::pass : Verdict::fail, "permutation " + p.to_string()};
  });

  run("reversibility: 1000 random compact configurations, all directions", [&rng] {
    std::size_t failures_seen = 0, nontrivial = 0;
    for (int t = 0; t < 1000; ++t) {
      const CanonicalShape s = random_shape(rng, 12);
      std::string labels = distinct_labels(static_cast<std::size_t>(s.size()));
      std::shuffle(labels.begin(), labels.end(), rng);
      const Configuration c = random_walk(s.to_configuration(labels), rng, static_cast<int>(rng() % 40));
      for (Direction d : all_directions) {
        const Configuration pushed = push(c, d);
        if (pushed != c) ++nontrivial;
        if (!(apply_sequence(pushed, invert_push(c, d)) == c)) ++failures_seen;
      }
    }
    std::ostringstream os;
    os << failures_seen << " failures, " << nontrivial << " effective pushes inverted";
    return Verdict{failures_seen == 0 ? Verdict::pass : Verdict::fail, os.str()};
  });

  run("parity: 10^4 random closed sequences (n<=10)", [&rng] {
    std::size_t odd_all = 0, odd_full = 0, moved = 0;
    for (int t = 0; t < 10000; ++t) {
      const CanonicalShape s = random_shape(rng, 10);
      const Configuration k = s.to_configuration();
      PushSequence seq;
      Configuration cur = k;
      const int len = static_cast<int>(rng() % 25);
      for (int i = 0; i < len; ++i) {
        const Direction d = all_directions[rng() % 4];
        seq.push_back(d);
        cur = push(cur, d);
      }
      append(seq, canonical_form(cur).sequence);
      const ClosedParity p = closed_sequence_parity(k, seq);
      if (!induced_permutation(k, seq).is_identity()) ++moved;
      odd_all += p.all == Parity::odd;
      odd_full += p.full == Parity::odd;
    }
    std::ostringstream os;
    os << odd_all << " odd (full+empty), " << odd_full << " odd (full only), " << moved
       << " non-identity permutations";
    return Verdict{odd_all == 0 && odd_full == 0 ? Verdict::pass : Verdict::fail, os.str()};
  });

  run("group orders: enumeration equals classification", [] {
    struct Case {
      std::vector<int> rows;
      std::uint64_t order;
      GroupKind kind;
    };
    const std::vector<Case> cases = {
        {{1}, 1, GroupKind::trivial},          {{3, 3}, 1, GroupKind::trivial},
        {{4, 4, 4}, 1, GroupKind::trivial},    {{2, 1}, 3, GroupKind::cyclic},
        {{3, 3, 2}, 7, GroupKind::cyclic},     {{1, 3}, 12, GroupKind::alternating},
        {{1, 4}, 60, GroupKind::alternating},  {{2, 4}, 60, GroupKind::alt_five},
        {{1, 1, 3}, 60, GroupKind::alternating}, {{2, 5}, 2520, GroupKind::alternating},
        {{1, 3, 3}, 2520, GroupKind::alternating},
    };
    std::ostringstream os;
    bool ok = true;
    for (const auto& c : cases) {
      const auto shape = CanonicalShape::from_row_lengths(c.rows);
      const auto cls = classify_shape(shape);
      const auto g = enumerate_group(shape.to_configuration());
      const bool good = g.complete && g.elements.size() == c.order && cls.group.order() == std::to_string(c.order) &&
                        cls.group.kind == c.kind;
      ok = ok && good;
      os << "rows";
      for (std::size_t i = 0; i < c.rows.size(); ++i) os << (i ? "," : "(") << c.rows[i];
      os << ")=" << g.elements.size() << (good ? " " : "! ");
    }
    return Verdict{ok ? Verdict::pass : Verdict::fail, os.str()};
  });

  run("core immobility and the 10x9 core of 12 cells", [] {
    std::size_t checked_perms = 0, moved_core = 0, shapes_with_core = 0;
    auto check = [&](const Permutation& p, const Classification& cls) {
      ++checked_perms;
      const auto pos = index_positions(cls.canonical);
      for (std::size_t i = 0; i < pos.size(); ++i)
        if (cls.geometry.in_core(pos[i]) && !p.fixes(static_cast<int>(i))) ++moved_core;
    };
    for (int n = 1; n <= 20; ++n)
      for (const auto& parts : partitions(n)) {
        const auto cls = classify_shape(CanonicalShape(parts));
        if (!cls.geometry.core.empty()) ++shapes_with_core;
        for (const auto& g : cls.generators) check(g.perm, cls);
        if (n <= 8 || (!cls.geometry.core.empty() && n <= 11))
          for (const auto& [perm, word] : enumerate_group(cls.canonical).elements) check(perm, cls);
      }
    const auto geom = core_geometry_from_counts(10, 9, 7, 6);
    const auto big = classify_shape(CanonicalShape({9, 9, 9, 9, 9, 9, 9, 8, 7, 6}));
    for (const auto& g : big.generators) check(g.perm, big);
    const bool geometry_ok = geom.core.size() == 12 && big.geometry.core.size() == 12 && big.geometry.a_full == 7 &&
                             big.geometry.b_full == 6 && big.geometry.a_rest == 3 && big.geometry.b_rest == 3;
    std::ostringstream os;
    os << checked_perms << " permutations over " << shapes_with_core << " shapes with a core, " << moved_core
       << " core moves; core of a=10,b=9,a'=7,b'=6 has " << big.geometry.core.size() << " cells";
    return Verdict{moved_core == 0 && geometry_ok ? Verdict::pass : Verdict::fail, os.str()};
  });

  run("compaction: 100 random sparse configurations per box", [&rng] {
    std::vector<BoxSpec> boxes = {{3, 2}, {4, 2}, {3, 3}};
    for (int k = 1; k <= 12; ++k) boxes.push_back({k, 1});
    std::size_t solved = 0, failed = 0;
    std::ostringstream os;
    for (const auto& b : boxes) {
      std::size_t box_failed = 0;
      for (int t = 0; t < 100; ++t) {
        const Configuration c = random_sparse(rng, static_cast<int>(b.size()));
        const auto r = solve_box(c, b);
        if (r.status == BoxStatus::solved && is_box(replay(c, r.moves), b.a, b.b))
          ++solved;
        else
          ++box_failed;
      }
      failed += box_failed;
      if (box_failed) os << b.b << "x" << b.a << " failed " << box_failed << "; ";
    }
    os << solved << " solved, " << failed << " failed";
    return Verdict{failed == 0 ? Verdict::pass : Verdict::fail, os.str()};
  });

  run("counterexample C(4,3) cannot reach a 4x3 box", [] {
    const auto r = brute_force_search(counterexample(4, 3), box_goal(4, 3), SearchBudget{});
    std::ostringstream os;
    os << r.states << " reachable shapes, depth " << r.depth;
    switch (r.outcome) {
      case SearchOutcome::refuted: return Verdict{Verdict::pass, "refuted: " + os.str()};
      case SearchOutcome::exhausted: return Verdict{Verdict::partial, "no witness within budget: " + os.str()};
      case SearchOutcome::found: return Verdict{Verdict::fail, "witness " + format_sequence(r.witness)};
    }
    return Verdict{Verdict::fail, "unknown outcome"};
  });

  run("universality: diagonal of 6 reaches all 11 partitions", [] {
    std::size_t reached = 0;
    const auto parts = partitions(6);
    for (const auto& p : parts) {
      const CanonicalShape shape(p);
      const Configuration end = replay(diagonal_config(6), realize_partition(6, shape));
      if (is_canonical(end) && canonical_shape(end) == shape) ++reached;
    }
    return Verdict{reached == 11 && parts.size() == 11 ? Verdict::pass : Verdict::fail,
                   std::to_string(reached) + " of " + std::to_string(parts.size()) + " partitions"};
  });

  run("decision and solver completeness (n<=7, all distinct-label goals)", [] {
    std::size_t instances = 0, disagreements = 0, solved = 0, bad_solutions = 0, shapes = 0;
    for (int n = 1; n <= 7; ++n)
      for (const auto& parts : partitions(n)) {
        ++shapes;
        const CanonicalShape shape(parts);
        const std::string labels = distinct_labels(static_cast<std::size_t>(n));
        const Configuration start = shape.to_configuration(labels);
        const auto reach = enumerate_group(shape.to_configuration());
        if (!reach.complete) return Verdict{Verdict::fail, "enumeration incomplete for " + shape.to_string()};
        const auto positions = index_positions(start);
        const PermutationSolver solver(shape);
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 0);
        do {
          const Permutation pi(images);
          // Token at place p moves to place pi(p).
          std::string goal_labels(static_cast<std::size_t>(n), ' ');
          for (int p = 0; p < n; ++p) goal_labels[static_cast<std::size_t>(pi(p))] = labels[static_cast<std::size_t>(p)];
          const Configuration goal = shape.to_configuration(goal_labels);
          ++instances;
          const bool reachable = reach.elements.count(pi) > 0;
          const Solvability s = is_solvable(start, goal);
          if (s.solvable != reachable) ++disagreements;
          if (s.solvable) {
            ++solved;
            if (!replay(start, solver.solve(start, goal)).label_equal(goal)) ++bad_solutions;
          }
        } while (std::next_permutation(images.begin(), images.end()));
      }
    std::ostringstream os;
    os << shapes << " shapes, " << instances << " goals, " << disagreements << " disagreements, " << solved
       << " solved, " << bad_solutions << " failed verification";
    return Verdict{disagreements == 0 && bad_solutions == 0 ? Verdict::pass : Verdict::fail, os.str()};
  });

  std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " failing criteria" << std::endl;
  return failures ? 1 : 0;
}
