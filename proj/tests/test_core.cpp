#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "wgraph/colored_graph.hpp"
#include "wgraph/constructions.hpp"
#include "wgraph/cwg_io.hpp"
#include "wgraph/threshold.hpp"

using namespace wgraph;

TEST_CASE("weights are symmetric with zero diagonal") {
  ColoredGraph g(4);
  g.set(0, 2, 2);
  g.set(3, 1, 1);
  CHECK(g.weight(2, 0) == 2);
  CHECK(g.weight(1, 3) == 1);
  CHECK(g.color(0, 2) == Color::Red);
  CHECK(g.co_weight(0, 2) == 0);
  CHECK(g.co_weight(1, 1) == 0);
  for (int x = 0; x < 4; ++x) CHECK(g.weight(x, x) == 0);
  g.set(0, 2, 0);
  CHECK(g.weight(2, 0) == 0);
  CHECK_THROWS_AS(g.set(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.set(0, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.set(0, 4, 1), std::out_of_range);
  CHECK_THROWS_AS(g.at(0, 7), std::out_of_range);
  CHECK_THROWS(ColoredGraph(65));
  CHECK_THROWS(ColoredGraph(-1));
}

TEST_CASE("codes and relabelling") {
  const auto g = ColoredGraph::from_code(4, "012210");
  CHECK(g.code() == "012210");
  CHECK(g.weight(0, 2) == 1);
  CHECK(g.weight(1, 2) == 2);
  CHECK(g.weight(2, 3) == 0);
  CHECK_THROWS(ColoredGraph::from_code(4, "01221"));
  CHECK_THROWS(ColoredGraph::from_code(3, "01x"));
  const auto h = g.relabeled({3, 2, 1, 0});
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) CHECK(h.weight(x, y) == g.weight(3 - x, 3 - y));
  }
  CHECK(g.without_vertex(0).code() == "210");
  CHECK(g.with_vertex({1, 2, 0, 1}).weight(4, 1) == 2);
  CHECK(g.induced({2, 0}).code() == "1");
}

TEST_CASE("degree examples") {
  CHECK(degree(gen_rk(3), 0) == 4);
  CHECK(degree(gen_bk(5), 2) == 4);
  const auto ev = gen_even_extremal(3, 1);
  CHECK(degree(ev.graph, ev.part("B'").first) == 18);
  CHECK_THROWS_AS(degree(gen_rk(3), 3), std::out_of_range);
  CHECK(min_degree(ColoredGraph(4)) == 0);
  CHECK(min_degree(gen_odd_extremal(2, 1).graph) == 4);
  CHECK(min_degree(ev.graph) == 18);
  CHECK_THROWS_AS(min_degree(ColoredGraph(0)), std::invalid_argument);
  CHECK(edge_weight_sum(gen_rk(3)) == 6);
  CHECK(edge_weight_sum(gen_bk(4)) == 6);
  CHECK(edge_weight_sum(ev.graph) == 144);
  CHECK(edge_weight_sum(ColoredGraph(0)) == 0);
}

TEST_CASE("degree sum is twice the edge weight") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = oracle::random_graph(1 + trial % 12, rng);
    long total = 0;
    for (int x = 0; x < g.order(); ++x) total += degree(g, x);
    CHECK(total == 2 * edge_weight_sum(g));
    CHECK(edge_weight_sum(g) == oracle::edge_sum(g));
    const auto c = color_counts(g);
    CHECK(c.green + c.blue + c.red == pair_count(g.order()));
    CHECK(c.blue + 2 * c.red == edge_weight_sum(g));
  }
}

TEST_CASE("threshold examples") {
  CHECK_FALSE(exceeds_threshold(18, 16, Threshold(18, 16)));
  CHECK(exceeds_threshold(19, 16, Threshold(18, 16)));
  CHECK_FALSE(exceeds_threshold(4, 5, Threshold(4, 5)));
  CHECK_THROWS(exceeds_threshold(1, 0, Threshold(1, 2)));
  CHECK(Threshold(18, 16) == Threshold(9, 8));
  CHECK(Threshold(3, -6) == Threshold(-1, 2));
  CHECK_THROWS(Threshold(1, 0));
  CHECK(odd_threshold(2) == Threshold(4, 5));
  CHECK(odd_threshold(3) == Threshold(10, 8));
  CHECK(even_threshold(3) == Threshold(18, 16));
  CHECK(even_threshold(4) == Threshold(32, 23));
  CHECK(simple_threshold(3) == Threshold(5, 8));
  CHECK(Threshold(18, 16).cutoff(6) == 7);
  CHECK(Threshold(18, 16).cutoff(16) == 19);
  CHECK(Threshold(4, 5).cutoff(5) == 5);
  CHECK(Threshold(9, 8).str() == "9/8");
}

TEST_CASE("exceeds_threshold agrees with exact rationals") {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> big(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  for (int i = 0; i < 100000; ++i) {
    auto& dist = i % 2 ? big : small;
    const std::int64_t d = dist(rng);
    std::int64_t n = dist(rng);
    if (n < 1) n = 1 - n;
    const std::int64_t num = dist(rng);
    std::int64_t den = dist(rng);
    if (den == 0) den = 1;
    const Threshold t(num, den);
    const cpp_rational bound = cpp_rational(cpp_int(num) * n) / cpp_rational(cpp_int(den));
    const bool exact = cpp_rational(d) > bound;
    REQUIRE(exceeds_threshold(d, n, t) == exact);
    if (n <= 1000000) {
      const std::int64_t c = t.cutoff(n);
      REQUIRE(exceeds_threshold(c, n, t));
      REQUIRE_FALSE(exceeds_threshold(c - 1, n, t));
    }
  }
}

TEST_CASE("cwg format") {
  const auto g = ColoredGraph::from_code(4, "012210");
  CHECK(to_cwg(g) == "cwg 4\n012210\n");
  CHECK(parse_cwg("cwg 4\n012210\n") == g);
  CHECK(parse_cwg("cwg 4\r\n012210\r\n") == g);
  CHECK(parse_cwg("cwg 0\n").order() == 0);
  CHECK(parse_cwg("cwg 1\n\n").order() == 1);

  auto fails_at = [](const std::string& text, int line, int column) {
    try {
      parse_cwg(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      return;
    }
    FAIL("no parse error for: " << text);
  };
  fails_at("cwg 3\n01x\n", 2, 3);
  fails_at("cwg 3\n01\n", 2, 3);
  fails_at("cwg 3\n0120\n", 2, 4);
  fails_at("cwx 3\n012\n", 1, 1);
  fails_at("cwg -3\n", 1, 5);
  fails_at("cwg 3\n012\ncwg 1\n", 3, 1);

  std::vector<ColoredGraph> all = gen_family(6);
  all.push_back(gen_even_extremal(3, 1).graph);
  std::string text;
  for (std::size_t i = 0; i < all.size(); ++i) text += (i ? "\n" : "") + to_cwg(all[i]);
  CHECK(parse_cwg_list(text) == all);
  CHECK(parse_cwg_list("").empty());
}

TEST_CASE("cwg round trip on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(trial % 20, rng);
    std::ostringstream os;
    write_cwg(os, g);
    CHECK(parse_cwg(os.str()) == g);
  }
}
