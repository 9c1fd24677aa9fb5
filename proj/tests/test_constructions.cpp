#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wgraph/canonical.hpp"
#include "wgraph/constructions.hpp"
#include "wgraph/cwg_io.hpp"

using namespace wgraph;

namespace {

void check_parts(const PartitionedConstruction& pc) {
  int next = 0;
  for (const auto& p : pc.parts) {
    CHECK(p.first == next);
    CHECK(p.size >= 0);
    next = p.end();
  }
  if (!pc.parts.empty()) CHECK(next == pc.graph.order());
}

bool regular(const ColoredGraph& g, int d) {
  for (int x = 0; x < g.order(); ++x) {
    if (degree(g, x) != d) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cliques") {
  CHECK(gen_rk(2).code() == "2");
  CHECK(gen_rk_minus(2) == gen_bk(2));
  CHECK(edge_weight_sum(gen_rk_minus(4)) == 11);
  CHECK(gen_rk_minus(3).weight(0, 1) == 1);
  CHECK(gen_rk(0).order() == 0);
  CHECK_THROWS_AS(gen_rk_minus(1), std::invalid_argument);
  CHECK_THROWS_AS(gen_rk(-1), std::invalid_argument);
}

TEST_CASE("G_{a+b,b}") {
  CHECK(gen_gab(6, 1) == gen_bk(5));
  CHECK(gen_gab(6, 3) == gen_rk(3));
  const auto g = gen_gab(6, 2);
  CHECK(g.code() == "211111");
  CHECK_THROWS_AS(gen_gab(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(gen_gab(4, 0), std::invalid_argument);
  for (int t = 2; t <= 12; ++t) {
    for (int i = 1; 2 * i <= t; ++i) {
      const auto h = gen_gab(t, i);
      CHECK(h.order() == t - i);
      const long direct = 2L * i * (i - 1) / 2 + (pair_count(t - i) - pair_count(i));
      CHECK(edge_weight_sum(h) == direct);
      CHECK(oracle::edge_sum(h) == direct);
    }
  }
}

TEST_CASE("family F_t") {
  const auto f4 = gen_family(4);
  REQUIRE(f4.size() == 2);
  CHECK(f4[0] == gen_bk(3));
  CHECK(f4[1] == gen_rk(2));
  const auto f5 = gen_family(5);
  REQUIRE(f5.size() == 2);
  CHECK(f5[0] == gen_bk(4));
  CHECK(f5[1].order() == 3);
  const auto f6 = gen_family(6);
  REQUIRE(f6.size() == 3);
  CHECK(f6[0] == gen_bk(5));
  CHECK(f6[1] == gen_gab(6, 2));
  CHECK(f6[2] == gen_rk(3));
  for (int t = 2; t <= 15; ++t) {
    const auto f = gen_family(t);
    CHECK(f.size() == static_cast<std::size_t>(t / 2));
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i].order() == t - 1 - static_cast<int>(i));
  }
  CHECK_THROWS(gen_family(1));
}

TEST_CASE("H_k") {
  CHECK(gen_hk(5, 3, 0).graph == gen_bk(5));
  const auto h = gen_hk(5, 3, 2);
  CHECK(h.part("A").size == 2);
  CHECK(h.part("B").size == 2);
  CHECK(h.part("C").size == 1);
  const auto h2 = gen_hk(4, 2, 1);
  CHECK(h2.part("A").size == 1);
  CHECK(h2.part("B").size == 2);
  CHECK(h2.part("C").size == 1);
  for (int q = 2; q <= 9; ++q) {
    for (int b = 1; b < q; ++b) {
      for (int k = 0; k < b; ++k) {
        const auto pc = gen_hk(q, b, k);
        check_parts(pc);
        CHECK(pc.part("C").size >= 1);
        const auto& A = pc.part("A");
        const auto& C = pc.part("C");
        for (int x = 0; x < q; ++x) {
          for (int y = x + 1; y < q; ++y) {
            const bool red = A.contains(x) && (A.contains(y) || C.contains(y));
            CHECK(pc.graph.weight(x, y) == (red ? 2 : 1));
          }
        }
      }
    }
  }
  CHECK_THROWS(gen_hk(3, 3, 0));
  CHECK_THROWS(gen_hk(5, 3, 3));
}

TEST_CASE("J") {
  const auto j = gen_j(3);
  check_parts(j);
  CHECK(j.graph.order() == 4);
  CHECK(j.part("A").size == 0);
  const int b1 = j.part("b'").first, b2 = j.part("b''").first;
  const int c1 = j.part("c'").first, c2 = j.part("c''").first;
  CHECK(j.graph.weight(c1, c2) == 0);
  CHECK(j.graph.weight(b1, c1) == 1);
  CHECK(j.graph.weight(b2, c2) == 1);
  CHECK(j.graph.weight(b1, b2) == 2);
  CHECK(j.graph.weight(b1, c2) == 2);
  CHECK(j.graph.weight(b2, c1) == 2);
  const auto j4 = gen_j(4);
  CHECK(degree(j4.graph, j4.part("c'").first) == 5);
  const auto c5 = color_counts(gen_j(5).graph);
  CHECK(gen_j(5).graph.order() == 6);
  CHECK(c5.blue == 2);
  CHECK(c5.green == 1);
  CHECK(c5.red == 12);
  CHECK_THROWS(gen_j(2));
}

TEST_CASE("odd sharpness construction") {
  const auto c5 = gen_odd_extremal(2, 1);
  CHECK(c5.graph.order() == 5);
  CHECK(min_degree(c5.graph) == 4);
  CHECK(color_counts(c5.graph).red == 5);
  CHECK(min_degree(gen_odd_extremal(3, 1).graph) == 10);
  for (int r = 2; r <= 6; ++r) {
    for (int s = 1; s <= 3; ++s) {
      const auto pc = gen_odd_extremal(r, s);
      check_parts(pc);
      CHECK(pc.graph.order() == s * (3 * r - 1));
      CHECK(pc.parts.size() == static_cast<std::size_t>(5 + r - 2));
      CHECK(regular(pc.graph, s * (6 * r - 8)));
      CHECK(color_counts(pc.graph).blue == 0);
    }
  }
  CHECK_THROWS(gen_odd_extremal(1, 1));
  CHECK_THROWS(gen_odd_extremal(2, 0));
}

TEST_CASE("even sharpness construction") {
  const auto e3 = gen_even_extremal(3, 1);
  CHECK(e3.graph.order() == 16);
  CHECK(e3.parts.size() == 4);
  CHECK(min_degree(e3.graph) == 18);
  CHECK(min_degree(gen_even_extremal(4, 1).graph) == 32);
  for (int r = 3; r <= 6; ++r) {
    for (int s = 1; s * (7 * r - 5) <= kMaxVertices; ++s) {
      const auto pc = gen_even_extremal(r, s);
      check_parts(pc);
      CHECK(pc.graph.order() == s * (7 * r - 5));
      CHECK(pc.part("B'").size == 6 * s);
      CHECK(pc.part("C''").size == 2 * s);
      CHECK(regular(pc.graph, s * (14 * r - 24)));
    }
  }
  CHECK_THROWS(gen_even_extremal(2, 1));
}

TEST_CASE("blow-ups") {
  const auto e2 = gen_ehss_blowup(2);
  CHECK(e2.graph.order() == 4);
  CHECK(color_counts(e2.graph).green == 2);
  CHECK(color_counts(e2.graph).blue == 4);
  CHECK(blow_up(gen_rk(2), {1, 1}).graph == gen_rk(2));
  const auto b = blow_up(gen_bk(2), {2, 2}).graph;
  CHECK(color_counts(b).green == 2);
  CHECK(color_counts(b).blue == 4);
  CHECK(canonical_form(blow_up(gen_rk_minus(3), {2, 2, 3}).graph) == canonical_form(gen_ehss_blowup(3).graph));
  CHECK(edge_weight_sum(gen_ehss_blowup(3).graph) == 28);
  CHECK_THROWS(blow_up(gen_rk(2), {1}));
  CHECK_THROWS(blow_up(gen_rk(2), {1, 0}));
  CHECK_THROWS(gen_ehss_blowup(1));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracle::random_graph(1 + trial % 5, rng);
    CHECK(canonical_form(blow_up(p, std::vector<int>(static_cast<std::size_t>(p.order()), 1)).graph) ==
          canonical_form(p));
  }
}

TEST_CASE("every construction round-trips through .cwg") {
  std::vector<ColoredGraph> all;
  for (int n = 0; n <= 6; ++n) {
    all.push_back(gen_rk(n));
    all.push_back(gen_bk(n));
  }
  for (int t = 2; t <= 10; ++t) {
    for (const auto& g : gen_family(t)) all.push_back(g);
  }
  for (int r = 2; r <= 5; ++r) all.push_back(gen_odd_extremal(r, 2).graph);
  for (int r = 3; r <= 5; ++r) all.push_back(gen_even_extremal(r, 2).graph);
  for (int r = 3; r <= 6; ++r) all.push_back(gen_j(r).graph);
  for (int r = 2; r <= 6; ++r) all.push_back(gen_ehss_blowup(r).graph);
  for (const auto& g : all) CHECK(parse_cwg(to_cwg(g)) == g);
}
