#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "helpers.hpp"
#include "linepush/http.hpp"

using namespace linepush;

namespace {

json body_of(const Response& r) { return json::parse(r.body); }

PuzzleStore sample_store() {
  PuzzleStore s;
  s.add(parse_puzzle("ABC\nDE.\n---\nDAB\nEC.\n", "corner"));
  s.add(parse_puzzle("o..\n.o.\n..o\n---\nooo\n", "diag"));
  return s;
}

Response post(const Service& s, const std::string& path, const json& j) { return s.handle("POST", path, j.dump()); }

}  // namespace

TEST(Service, ListsAndFetchesPuzzles) {
  const Service s(sample_store());
  const auto list = s.handle("GET", "/api/puzzles", "");
  ASSERT_EQ(list.status, 200);
  const auto arr = body_of(list);
  ASSERT_EQ(arr.size(), 2u);
  EXPECT_EQ(arr[0]["id"], "corner");
  EXPECT_EQ(arr[0]["kind"], "permutation");
  EXPECT_EQ(arr[0]["size"], 5);
  EXPECT_EQ(arr[1]["kind"], "compaction");

  const auto one = s.handle("GET", "/api/puzzles/corner", "");
  ASSERT_EQ(one.status, 200);
  EXPECT_EQ(body_of(one)["start"], "ABC\nDE.");
  EXPECT_EQ(body_of(one)["goal"], "DAB\nEC.");
  EXPECT_EQ(s.handle("GET", "/api/puzzles/nope", "").status, 404);
}

TEST(Service, Push) {
  const Service s;
  const auto r = post(s, "/api/push", {{"grid", "A..\n.B.\n..C"}, {"dir", "L"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(body_of(r)["grid"], "A.\nB.\n.C");
  EXPECT_EQ(body_of(r)["changed"], true);
  const auto same = post(s, "/api/push", {{"grid", "AB\nCD"}, {"dir", "U"}});
  EXPECT_EQ(body_of(same)["changed"], false);
  EXPECT_EQ(post(s, "/api/push", {{"grid", "AB"}, {"dir", "X"}}).status, 400);
  EXPECT_EQ(post(s, "/api/push", {{"grid", "AB"}}).status, 400);
}

TEST(Service, ReplayIsByteIdentical) {
  const Service s;
  std::mt19937 rng(71);
  for (int t = 0; t < 50; ++t) {
    const auto c = testing_support::random_config(rng, 6, 5, 5);
    const json req{{"grid", format_grid(c)}, {"dir", std::string(1, to_char(all_directions[rng() % 4]))}};
    EXPECT_EQ(post(s, "/api/push", req).body, post(s, "/api/push", req).body);
  }
}

TEST(Service, MoveLogReplayReproducesTheGrid) {
  // A client that only keeps the move log must be able to rebuild its board.
  const Service s;
  std::mt19937 rng(72);
  for (int t = 0; t < 20; ++t) {
    const auto start = testing_support::random_config(rng, 7, 6, 6);
    std::string grid = format_grid(start), log;
    for (int i = 0; i < 12; ++i) {
      const char d = to_char(all_directions[rng() % 4]);
      log.push_back(d);
      grid = body_of(post(s, "/api/push", {{"grid", grid}, {"dir", std::string(1, d)}}))["grid"];
    }
    EXPECT_EQ(grid, format_grid(testing_support::replay(start, parse_sequence(log))));
    EXPECT_EQ(body_of(post(s, "/api/verify", {{"start", format_grid(start)}, {"moves", log}, {"goal", grid}}))["ok"],
              true);
  }
}

TEST(Service, Classify) {
  const Service s;
  const auto r = post(s, "/api/classify", {{"grid", "ABC\nDEF"}});
  ASSERT_EQ(r.status, 200);
  const auto j = body_of(r);
  EXPECT_EQ(j["class"], "trivial");
  EXPECT_EQ(j["order"], 1);
  EXPECT_EQ(j["a"], 3);
  EXPECT_EQ(j["b"], 2);
  const auto cyc = body_of(post(s, "/api/classify", {{"grid", "AB.\nCDE\nFGH"}}));
  EXPECT_EQ(cyc["class"], "cyclic");
  EXPECT_EQ(cyc["order"], 7);
  EXPECT_EQ(cyc["core_cells"], 1);
  const auto big = body_of(post(s, "/api/classify", {{"grid", std::string(30, 'o') + "\n" + std::string(30, 'o')}}));
  EXPECT_EQ(big["class"], "trivial");
  const auto alt = body_of(post(s, "/api/classify", {{"grid", "oo.....\noooooo.\nooooooo\nooooooo"}}));
  EXPECT_EQ(alt["class"], "alternating");
  EXPECT_TRUE(alt["order"].is_string());
  EXPECT_EQ(post(s, "/api/classify", {{"grid", "A.\n.B"}}).status, 422);
}

TEST(Service, SolveThenVerify) {
  const Service s(sample_store());
  for (const auto& [id, p] : s.store().all()) {
    const auto r = post(s, "/api/solve", {{"start", format_grid(p.start)}, {"goal", format_grid(p.goal)}});
    ASSERT_EQ(r.status, 200) << id;
    const auto j = body_of(r);
    ASSERT_EQ(j["solvable"], true) << id;
    const auto v = post(s, "/api/verify",
                        {{"start", format_grid(p.start)}, {"moves", j["moves"]}, {"goal", format_grid(p.goal)}});
    EXPECT_EQ(body_of(v)["ok"], true) << id;
  }
  const auto ident = body_of(post(s, "/api/solve", {{"start", "AB"}, {"goal", "AB"}}));
  EXPECT_EQ(ident["solvable"], true);
  EXPECT_EQ(ident["moves"], "");
}

TEST(Service, SolvesShippedPuzzles) {
  const Service s(PuzzleStore::load(LINEPUSH_PUZZLE_DIR));
  for (const auto& [id, p] : s.store().all()) {
    const auto start = format_grid(p.start), goal = format_grid(p.goal);
    const auto j = body_of(post(s, "/api/solve", {{"start", start}, {"goal", goal}}));
    if (id == "counterexample") {
      EXPECT_EQ(j["solvable"], false);
      EXPECT_EQ(j["reason"], "unreachable");
      continue;
    }
    ASSERT_EQ(j["solvable"], true) << id;
    EXPECT_EQ(body_of(post(s, "/api/verify", {{"start", start}, {"moves", j["moves"]}, {"goal", goal}}))["ok"], true)
        << id;
  }
}

TEST(Service, SolveReportsReasons) {
  const Service s;
  auto reason = [&](const std::string& a, const std::string& b) {
    const auto r = post(s, "/api/solve", {{"start", a}, {"goal", b}});
    EXPECT_EQ(r.status, 200);
    return body_of(r)["reason"].get<std::string>();
  };
  EXPECT_EQ(reason("ABCDE\nFGH..", "BACDE\nFGH.."), "parity");
  EXPECT_EQ(reason("AB\nCD", "BA\nCD"), "core_mismatch");
  EXPECT_EQ(reason("ABC\nDE.", "BAC\nDE."), "not_in_group");
  EXPECT_EQ(reason("AB.\nCDE", "ABC\nDE."), "shape_mismatch");
  EXPECT_EQ(reason(format_grid(counterexample(4, 3)), "oooo\noooo\noooo"), "unreachable");
  EXPECT_EQ(post(s, "/api/solve", {{"start", "AB"}, {"goal", "A"}}).status, 422);
}

TEST(Service, SolveTimesOut) {
  ServiceOptions opts;
  opts.max_states = 3;
  const Service s({}, opts);
  const auto r = post(s, "/api/solve", {{"start", "A...\n..B.\n.C..\n...D"}, {"goal", "DC\nBA"}});
  EXPECT_EQ(r.status, 503);
}

TEST(Service, ErrorStatuses) {
  const Service s;
  EXPECT_EQ(s.handle("GET", "/api/nothing", "").status, 404);
  EXPECT_EQ(s.handle("DELETE", "/api/puzzles", "").status, 404);
  EXPECT_EQ(s.handle("POST", "/api/push", "{not json").status, 400);
  EXPECT_EQ(s.handle("POST", "/api/push", "[1,2]").status, 400);
  EXPECT_EQ(post(s, "/api/push", {{"grid", "A B"}, {"dir", "L"}}).status, 400);
  EXPECT_EQ(post(s, "/api/push", {{"grid", "..\n.."}, {"dir", "L"}}).status, 400);
  EXPECT_EQ(post(s, "/api/verify", {{"start", "AB"}, {"moves", "LX"}, {"goal", "AB"}}).status, 400);
  EXPECT_TRUE(body_of(s.handle("GET", "/api/nothing", "")).contains("error"));
}

TEST(Service, ServesOverHttp) {
  const Service service(sample_store());
  httplib::Server srv;
  bind_routes(srv, service);
  const int port = srv.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread t([&] { srv.listen_after_bind(); });
  srv.wait_until_ready();

  httplib::Client cli("127.0.0.1", port);
  const auto list = cli.Get("/api/puzzles");
  ASSERT_TRUE(list);
  EXPECT_EQ(list->status, 200);
  EXPECT_EQ(json::parse(list->body).size(), 2u);
  const auto pushed = cli.Post("/api/push", R"({"grid":"A.\n.B","dir":"D"})", "application/json");
  ASSERT_TRUE(pushed);
  EXPECT_EQ(json::parse(pushed->body)["grid"], "AB");
  EXPECT_EQ(pushed->get_header_value("Access-Control-Allow-Origin"), "*");
  const auto missing = cli.Get("/api/puzzles/none");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  srv.stop();
  t.join();
}
