#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wgraph/constructions.hpp"
#include "wgraph/embedding.hpp"
#include "wgraph/homomorphism.hpp"
#include "wgraph/search.hpp"

using namespace wgraph;

namespace {

const SearchOptions kRaw{EnumerationMode::Raw, 1};
const SearchOptions kIso{EnumerationMode::IsomorphFree, 1};

// A false statement: F_5-free graphs with positive minimum degree map to RK_1.
Statement false_statement() {
  return {"F:5", gen_family(5), Threshold(0, 1), "RK_1 homomorphism",
          [](const ColoredGraph& g) { return find_hom_rk(g, 1); }};
}

}  // namespace

TEST_CASE("odd theorem at small orders") {
  const auto rep = verify_theorem_odd(2, 5, kRaw);
  CHECK(rep.outcome == Outcome::Verified);
  CHECK(rep.stats.enumerated == 59049);
  CHECK(rep.threshold == Threshold(4, 5));
  CHECK(rep.cutoff == 5);
  CHECK_FALSE(exceeds_threshold(min_degree(gen_odd_extremal(2, 1).graph), 5, odd_threshold(2)));
  CHECK(verify_theorem_odd(2, 4, kRaw).outcome == Outcome::Verified);
  CHECK(verify_theorem_odd(3, 5, kIso).outcome == Outcome::Verified);
  CHECK_THROWS(verify_theorem_odd(1, 4, kRaw));
  CHECK_THROWS(verify_theorem_odd(2, 0, kRaw));
}

TEST_CASE("even theorem at small orders") {
  CHECK(verify_theorem_even(3, 5, kRaw).outcome == Outcome::Verified);
  CHECK(verify_theorem_even(3, 6, kIso).outcome == Outcome::Verified);
  CHECK_THROWS_AS(verify_theorem_even(3, 16, kRaw), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem_even(2, 5, kRaw), std::invalid_argument);
}

TEST_CASE("raw and isomorph-free verification agree") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(verify_theorem_odd(2, n, kRaw).outcome == verify_theorem_odd(2, n, kIso).outcome);
    CHECK(verify_theorem_odd(3, n, kRaw).outcome == verify_theorem_odd(3, n, kIso).outcome);
    CHECK(verify_theorem_even(3, n, kRaw).outcome == verify_theorem_even(3, n, kIso).outcome);
    const auto fr = verify_statement(false_statement(), n, kRaw);
    const auto fi = verify_statement(false_statement(), n, kIso);
    CHECK(fr.outcome == fi.outcome);
  }
}

TEST_CASE("counterexamples are minimised and re-verified") {
  const auto st = false_statement();
  const auto rep = verify_statement(st, 4, kRaw);
  REQUIRE(rep.outcome == Outcome::Counterexample);
  REQUIRE(rep.graph);
  const auto& g = *rep.graph;
  CHECK(exceeds_threshold(min_degree(g), 4, st.threshold));
  CHECK(oracle::free_of(g, st.family));
  CHECK(oracle::green_clique_cover(g) > 1);
  // lowering any weight breaks the counterexample
  for (int x = 0; x < 4; ++x) {
    for (int y = x + 1; y < 4; ++y) {
      if (g.weight(x, y) == 0) continue;
      ColoredGraph h = g;
      h.set(x, y, g.weight(x, y) - 1);
      const bool still = exceeds_threshold(min_degree(h), 4, st.threshold) && oracle::free_of(h, st.family) &&
                         oracle::green_clique_cover(h) > 1;
      CHECK_FALSE(still);
    }
  }
  CHECK(rep.diagnosis.find("RK_1 homomorphism") != std::string::npos);
}

TEST_CASE("reports do not depend on the thread count") {
  for (auto opts : {kRaw, kIso}) {
    auto many = opts;
    many.threads = 3;
    const auto a = verify_statement(false_statement(), 5, opts);
    const auto b = verify_statement(false_statement(), 5, many);
    CHECK(a.graph == b.graph);
    CHECK(a.stats.enumerated == b.stats.enumerated);
    CHECK(a.stats.hypothesis == b.stats.hypothesis);
    const auto c = empirical_threshold(5, 2, TheoremKind::Odd, opts);
    const auto d = empirical_threshold(5, 2, TheoremKind::Odd, many);
    CHECK(c.value == d.value);
    CHECK(c.graph == d.graph);
  }
  const auto e1 = compute_ex(5, gen_family(5), 2, {EnumerationMode::Raw, 1});
  const auto e3 = compute_ex(5, gen_family(5), 2, {EnumerationMode::Raw, 3});
  CHECK(e1.value == e3.value);
  CHECK(e1.graph == e3.graph);
}

TEST_CASE("extremal number examples") {
  CHECK(compute_ex(4, gen_family(4), 2).value == 4);
  CHECK(compute_ex(6, gen_family(4), 2).value == 9);
  CHECK(compute_ex(3, {gen_rk(2)}, 2).value == 3);
  for (int n = 2; n <= 6; ++n) {
    const auto rep = compute_ex(n, gen_family(4), 2);
    CHECK(rep.value == n * n / 4);
    REQUIRE(rep.graph);
    CHECK(edge_weight_sum(*rep.graph) == n * n / 4);
    CHECK(oracle::free_of(*rep.graph, gen_family(4)));
  }
  CHECK(compute_ex(0, gen_family(4), 2).value == 0);
  CHECK(compute_ex(3, {ColoredGraph(2)}, 2).outcome == Outcome::NoValue);
  CHECK(compute_ex(1, {ColoredGraph(2)}, 2).value == 0);
  CHECK_THROWS(compute_ex(9, gen_family(4), 2));
  CHECK_THROWS(compute_ex(4, gen_family(4), 3));
}

TEST_CASE("compute_ex agrees with brute force") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<ColoredGraph> family;
    const int members = 1 + trial % 3;
    for (int i = 0; i < members; ++i) family.push_back(oracle::random_graph(2 + (trial + i) % 3, rng));
    for (int n = 0; n <= 4; ++n) {
      for (int cap = 1; cap <= 2; ++cap) {
        const auto rep = compute_ex(n, family, cap);
        const long brute = oracle::ex(n, family, cap);
        if (brute < 0) {
          REQUIRE(rep.outcome == Outcome::NoValue);
        } else {
          REQUIRE(rep.value == brute);
        }
      }
    }
  }
}

TEST_CASE("compute_ex monotonicity") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ColoredGraph> family{oracle::random_graph(2 + trial % 3, rng)};
    auto bigger = family;
    bigger.push_back(oracle::random_graph(3, rng));
    std::int64_t prev = -1;
    for (int n = 1; n <= 5; ++n) {
      const auto one = compute_ex(n, family, 1);
      const auto two = compute_ex(n, family, 2);
      const auto more = compute_ex(n, bigger, 2);
      const auto v1 = one.value.value_or(-1), v2 = two.value.value_or(-1), vm = more.value.value_or(-1);
      CHECK(v1 <= v2);
      CHECK(vm <= v2);
      // once no free graph exists, none exists at larger orders either
      if (prev == -1 && n > 1) {
        CHECK(v2 == -1);
      } else if (v2 >= 0) {
        CHECK(v2 >= prev);
      }
      prev = v2;
    }
  }
}

TEST_CASE("empirical threshold examples") {
  const auto five = empirical_threshold(5, 2, TheoremKind::Odd, kRaw);
  REQUIRE(five.outcome == Outcome::Value);
  CHECK(five.value == 4);
  REQUIRE(five.graph);
  const auto c = color_counts(*five.graph);
  CHECK(c.red == 5);
  CHECK(c.blue == 0);
  CHECK(min_degree(*five.graph) == 4);
  CHECK(find_hom_rk(*five.graph, 2).status == HomStatus::None);

  const auto four = empirical_threshold(4, 2, TheoremKind::Odd, kRaw);
  CHECK(four.value.value_or(-1) <= 3);
  const auto six = empirical_threshold(6, 3, TheoremKind::Even, kIso);
  CHECK(six.value.value_or(-1) <= 6);
  CHECK(six.note.find("lower-bound") != std::string::npos);
  for (int n = 2; n <= 5; ++n) {
    CHECK(empirical_threshold(n, 2, TheoremKind::Odd, kRaw).value ==
          empirical_threshold(n, 2, TheoremKind::Odd, kIso).value);
    CHECK(empirical_threshold(n, 3, TheoremKind::Even, kRaw).value ==
          empirical_threshold(n, 3, TheoremKind::Even, kIso).value);
  }
}

TEST_CASE("density report") {
  const auto rows = density_report(gen_family(7), {{"rk blow-up", blow_up(gen_rk(3), {2, 2, 2}).graph}});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 6);
  CHECK(rows[0].e == 24);
  CHECK(rows[0].density == Threshold(4, 3));
  CHECK(rows[0].reference == Threshold(4, 3));
  const auto ehss = density_report(gen_family(6), {{"ehss", gen_ehss_blowup(3).graph}});
  CHECK(ehss[0].density == Threshold(8, 7));
  CHECK(ehss[0].reference == Threshold(8, 7));
  CHECK(density_report({}, {{"x", gen_rk(3)}}).empty());
  CHECK_FALSE(density_report({gen_rk(2)}, {{"x", gen_rk(3)}})[0].reference);
  for (int r = 2; r <= 6; ++r) CHECK(family_density(2 * r + 1) == Threshold(2 * (r - 1), r));
  for (int r = 3; r <= 6; ++r) CHECK(family_density(2 * r) == Threshold(2 * (3 * r - 5), 3 * r - 2));
}

TEST_CASE("even theorem at order 7 meets its hypotheses") {
  const auto rep = verify_theorem_even(3, 7, kIso);
  CHECK(rep.outcome == Outcome::Verified);
  CHECK(rep.stats.hypothesis >= 1);
  CHECK(rep.cutoff == 8);
}
