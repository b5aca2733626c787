#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"
#include "wicket/errors.hpp"
#include "wicket/generators.hpp"
#include "wicket/pipeline.hpp"

using namespace wicket;
namespace wt = wicket::testing;

namespace {

// Nine edges in three interlocking configurations; classes 1, 2, 3 are
// the vertex ranges 0-3, 4-9, 10-13. Every edge is transversal.
LinearTripleSystem first_route_example() {
  return wt::make_system(14, {{0, 4, 10},
                              {1, 5, 10},
                              {1, 4, 11},
                              {0, 6, 12},
                              {2, 7, 12},
                              {2, 6, 11},
                              {3, 8, 12},
                              {1, 9, 12},
                              {1, 8, 13}});
}

PartitionLabels first_route_labels() {
  return PartitionLabels{{1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3}};
}

Halving first_route_halving() {
  // prime: 0 3 5 7 9 11 13; doubleprime: 1 2 4 6 8 10 12
  return Halving{{1, 2, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1}};
}

// Nine edges holding four corner-sharing configurations; classes are the
// ranges 0-3, 4-8, 9-12.
LinearTripleSystem second_route_example() {
  return wt::make_system(13, {{3, 4, 10},
                              {1, 6, 10},
                              {1, 4, 9},
                              {0, 5, 10},
                              {2, 7, 10},
                              {2, 5, 9},
                              {1, 5, 12},
                              {0, 4, 11},
                              {1, 8, 11}});
}

PartitionLabels second_route_labels() {
  return PartitionLabels{{1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3}};
}

Halving second_route_halving() {
  // prime: 0 3 6 7 8 9 12; doubleprime: 1 2 4 5 10 11
  return Halving{{1, 2, 2, 1, 2, 2, 1, 1, 1, 1, 2, 2, 1}};
}

// Cell structure of a cyclic multiplication table: one edge per cell,
// rows in the first class, columns in the second, symbols in the third.
// Linear, and fully transversal under the natural labels.
LinearTripleSystem latin_square_system(VertexId m) {
  LinearTripleSystem sys(3 * m);
  for (VertexId x = 0; x < m; ++x)
    for (VertexId y = 0; y < m; ++y) sys.must_add(x, m + y, 2 * m + (x + y) % m);
  return sys;
}

PartitionLabels natural_labels(VertexId m) {
  PartitionLabels labels;
  labels.class_of.assign(3 * m, 1);
  for (VertexId v = m; v < 2 * m; ++v) labels.class_of[v] = 2;
  for (VertexId v = 2 * m; v < 3 * m; ++v) labels.class_of[v] = 3;
  return labels;
}

}  // namespace

TEST_CASE("rationals normalize and compare") {
  CHECK(make_rational(4, 6) == Rational{2, 3});
  CHECK(make_rational(-4, -6) == Rational{2, 3});
  CHECK(make_rational(4, -6) == Rational{-2, 3});
  CHECK(make_rational(0, 5) == Rational{0, 1});
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK(compare(make_rational(1, 3), make_rational(1, 2)) == -1);
  CHECK(compare(make_rational(2, 4), make_rational(1, 2)) == 0);
  CHECK(compare(make_rational(5, 6), make_rational(2, 3)) == 1);
}

TEST_CASE("hit probability matches direct enumeration") {
  for (int s = 1; s <= 7; ++s) {
    long long s_fact = 1;
    for (int i = 2; i <= s; ++i) s_fact *= i;
    for (int k = 0; k <= s; ++k) {
      CAPTURE(s);
      CAPTURE(k);
      std::vector<int> perm(s);
      std::iota(perm.begin(), perm.end(), 0);
      long long hits = 0;
      do {
        bool hit = false;
        for (int i = 0; i < k; ++i)
          if (perm[i] == i) hit = true;
        if (hit) ++hits;
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(matching_hit_probability(s, k) == make_rational(hits, s_fact));
    }
  }
}

TEST_CASE("hit probability clears the half bound") {
  for (int s = 1; s <= 12; ++s)
    for (int k = 1; k <= s; ++k) {
      CAPTURE(s);
      CAPTURE(k);
      CHECK(compare(matching_hit_probability(s, k), make_rational(k, 2 * s)) >= 0);
    }
  CHECK(matching_hit_probability(1, 1) == Rational{1, 1});
  CHECK(matching_hit_probability(3, 3) == Rational{2, 3});
  CHECK(matching_hit_probability(2, 1) == Rational{1, 2});
}

TEST_CASE("hit probability rejects out-of-range sizes") {
  CHECK_THROWS_AS(matching_hit_probability(13, 1), SizeLimitExceeded);
  CHECK_THROWS_AS(matching_hit_probability(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(matching_hit_probability(5, 6), std::invalid_argument);
  CHECK_THROWS_AS(matching_hit_probability(5, -1), std::invalid_argument);
}

TEST_CASE("tripartition labels are uniform") {
  SeededRng rng(911);
  std::array<int, 4> counts{};
  for (int t = 0; t < 3000; ++t) {
    PartitionLabels labels = random_tripartition(1, rng);
    REQUIRE(labels.class_of.size() == 1);
    ++counts[labels.class_of[0]];
  }
  for (int cls = 1; cls <= 3; ++cls) {
    CHECK(counts[cls] > 850);
    CHECK(counts[cls] < 1150);
  }
}

TEST_CASE("transversal retention sits near six in twenty-seven") {
  LinearTripleSystem one = wt::make_system(3, {{0, 1, 2}});
  SeededRng rng(4242);
  int kept = 0;
  for (int t = 0; t < 2000; ++t) {
    PartitionLabels labels = random_tripartition(3, rng);
    kept += static_cast<int>(reduce_to_transversal(one, labels).reduced.edge_count());
  }
  // Expectation 2000 * 6/27 = 444.
  CHECK(kept > 350);
  CHECK(kept < 540);
}

TEST_CASE("reduction keeps transversal edges with source ids") {
  LinearTripleSystem sys = wt::make_system(6, {{0, 1, 2}, {0, 3, 5}, {1, 3, 4}, {2, 4, 5}});
  PartitionLabels labels{{1, 1, 2, 2, 3, 3}};
  TripartiteReduction red = reduce_to_transversal(sys, labels);
  // {0,1,2} has two class-1 vertices, {2,4,5} sits in classes 2 and 3.
  REQUIRE(red.reduced.edge_count() == 2);
  CHECK(red.reduced.edge(0) == *TripleEdge::make(0, 3, 5));
  CHECK(red.reduced.edge(1) == *TripleEdge::make(1, 3, 4));
  CHECK(red.source_edge == std::vector<EdgeId>{1, 2});
  CHECK(red.reduced.vertex_count() == sys.vertex_count());

  CHECK_THROWS_AS(reduce_to_transversal(sys, PartitionLabels{{1, 2, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(reduce_to_transversal(sys, PartitionLabels{{0, 1, 2, 3, 1, 2}}),
                  std::invalid_argument);
}

TEST_CASE("halving splits every class with primes rounded up") {
  PartitionLabels labels = first_route_labels();
  SeededRng rng(5);
  Halving halving = halve_classes(labels, rng);
  REQUIRE(halving.half_of.size() == labels.class_of.size());
  for (uint8_t h : halving.half_of) CHECK((h == 1 || h == 2));
  CHECK(half_members(labels, halving, 1, 1).size() == 2);
  CHECK(half_members(labels, halving, 1, 2).size() == 2);
  CHECK(half_members(labels, halving, 2, 1).size() == 3);
  CHECK(half_members(labels, halving, 2, 2).size() == 3);
  CHECK(half_members(labels, halving, 3, 1).size() == 2);
  CHECK(half_members(labels, halving, 3, 2).size() == 2);

  // Odd class sizes put the extra vertex on the prime side.
  PartitionLabels odd{{1, 1, 1, 2, 3}};
  SeededRng rng2(6);
  Halving h2 = halve_classes(odd, rng2);
  CHECK(half_members(odd, h2, 1, 1).size() == 2);
  CHECK(half_members(odd, h2, 1, 2).size() == 1);
  CHECK(half_members(odd, h2, 2, 1).size() == 1);
  CHECK(half_members(odd, h2, 3, 1).size() == 1);

  SeededRng rng3(5);
  Halving again = halve_classes(labels, rng3);
  CHECK(again.half_of == halving.half_of);
}

TEST_CASE("uniform matching is well-formed and uniform") {
  const std::vector<VertexId> left = {0, 1, 2};
  const std::vector<VertexId> right = {10, 11, 12};
  std::map<std::vector<VertexId>, int> counts;
  SeededRng rng(31337);
  for (int t = 0; t < 6000; ++t) {
    Matching m = uniform_matching(left, right, rng);
    REQUIRE(m.pairs.size() == 3);
    CHECK(std::is_sorted(m.pairs.begin(), m.pairs.end()));
    std::vector<VertexId> key;
    for (auto [u, v] : m.pairs) key.push_back(v);
    ++counts[key];
  }
  REQUIRE(counts.size() == 6);
  for (const auto& [key, count] : counts) {
    CHECK(count > 850);
    CHECK(count < 1150);
  }

  SeededRng r2(1);
  CHECK_THROWS_AS(uniform_matching({}, right, r2), EmptySideError);
  CHECK_THROWS_AS(uniform_matching(left, {}, r2), EmptySideError);

  // Unequal sides pair only up to the shorter one.
  SeededRng r3(2);
  Matching partial = uniform_matching({0, 1}, {10, 11, 12, 13}, r3);
  CHECK(partial.pairs.size() == 2);
}

TEST_CASE("worked example, first route") {
  LinearTripleSystem sys = first_route_example();
  PartitionLabels labels = first_route_labels();
  Halving halving = first_route_halving();
  TripartiteReduction red = reduce_to_transversal(sys, labels);
  REQUIRE(red.reduced.edge_count() == 9);  // all edges transversal

  std::vector<EligibleConfig> configs = eligible_configs(red, halving);
  REQUIRE(configs.size() == 3);
  CHECK(configs[0].d1 == 0);
  CHECK(configs[0].t1 == 1);
  CHECK(configs[0].d3 == 11);
  CHECK(configs[0].t3 == 10);
  CHECK(configs[0].ea == 0);
  CHECK(configs[0].ec == 1);
  CHECK(configs[0].ed == 2);
  CHECK(configs[0].y == 4);
  CHECK(configs[0].x == 5);
  CHECK(configs[1].d1 == 0);
  CHECK(configs[1].t1 == 2);
  CHECK(configs[1].d3 == 11);
  CHECK(configs[1].t3 == 12);
  CHECK(configs[2].d1 == 3);
  CHECK(configs[2].t1 == 1);
  CHECK(configs[2].d3 == 13);
  CHECK(configs[2].t3 == 12);

  Matching matching;
  matching.pairs = {{0, 11}, {3, 13}};
  std::vector<AuxEdge> aux = build_aux_graph(red, halving, configs, matching);
  REQUIRE(aux.size() == 3);
  CHECK(aux[0].t1 == 1);
  CHECK(aux[0].t3 == 10);
  CHECK(aux[0].config == 0);
  CHECK(aux[0].pair == 0);
  CHECK(aux[1].t1 == 1);
  CHECK(aux[1].t3 == 12);
  CHECK(aux[1].config == 2);
  CHECK(aux[1].pair == 1);
  CHECK(aux[2].t1 == 2);
  CHECK(aux[2].t3 == 12);
  CHECK(aux[2].config == 1);
  CHECK(aux[2].pair == 0);

  MatchingDecomposition gm = decompose_matchings(aux);
  REQUIRE(gm.groups.size() == 2);
  CHECK(gm.groups[0] == std::vector<std::size_t>{0, 2});
  CHECK(gm.groups[1] == std::vector<std::size_t>{1});

  std::vector<NonInducedHit> hits = non_induced_hits(aux, gm);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].group == 0);
  CHECK(hits[0].a == 0);
  CHECK(hits[0].b == 2);
  CHECK(hits[0].cross == 1);

  auto emb = extract_wicket_from_hit(red, configs, aux, hits[0]);
  REQUIRE(emb.has_value());
  CHECK(emb->rows == std::array<EdgeId, 3>{0, 5, 7});
  CHECK(emb->cols == std::array<EdgeId, 2>{2, 3});
  CHECK(emb->privates == std::array<VertexId, 3>{10, 2, 9});
  CHECK(validate_embedding(red.reduced, *emb) == std::nullopt);
}

TEST_CASE("source mapping rewrites edge ids") {
  // Same system with a non-transversal edge out front, shifting every
  // original id by one.
  LinearTripleSystem sys(14);
  sys.must_add(0, 1, 2);
  LinearTripleSystem base = first_route_example();
  for (const TripleEdge& e : base.edges()) sys.must_add(e.v[0], e.v[1], e.v[2]);
  TripartiteReduction red = reduce_to_transversal(sys, first_route_labels());
  REQUIRE(red.reduced.edge_count() == 9);
  CHECK(red.source_edge.front() == 1);

  Halving halving = first_route_halving();
  std::vector<EligibleConfig> configs = eligible_configs(red, halving);
  Matching matching;
  matching.pairs = {{0, 11}, {3, 13}};
  std::vector<AuxEdge> aux = build_aux_graph(red, halving, configs, matching);
  std::vector<NonInducedHit> hits = non_induced_hits(aux, decompose_matchings(aux));
  REQUIRE(hits.size() == 1);
  auto reduced_emb = extract_wicket_from_hit(red, configs, aux, hits[0]);
  REQUIRE(reduced_emb.has_value());
  WicketEmbedding original = map_to_source(red, *reduced_emb);
  CHECK(original.rows == std::array<EdgeId, 3>{1, 6, 8});
  CHECK(original.cols == std::array<EdgeId, 2>{3, 4});
  CHECK(validate_embedding(sys, original) == std::nullopt);
}

TEST_CASE("malformed matchings are rejected with a witness") {
  LinearTripleSystem sys = first_route_example();
  TripartiteReduction red = reduce_to_transversal(sys, first_route_labels());
  Halving halving = first_route_halving();
  std::vector<EligibleConfig> configs = eligible_configs(red, halving);

  Matching repeated;
  repeated.pairs = {{0, 11}, {0, 13}};
  CHECK_THROWS_WITH_AS(build_aux_graph(red, halving, configs, repeated),
                       "pair (0, 13): endpoint reused", NotAMatchingError);

  Matching wrong_half;
  wrong_half.pairs = {{1, 11}};  // vertex 1 sits in the doubleprime half
  CHECK_THROWS_AS(build_aux_graph(red, halving, configs, wrong_half), NotAMatchingError);

  Matching wrong_class;
  wrong_class.pairs = {{0, 5}};  // 5 is a class-2 vertex
  CHECK_THROWS_AS(build_aux_graph(red, halving, configs, wrong_class), NotAMatchingError);
}

TEST_CASE("worked example, second route") {
  LinearTripleSystem sys = second_route_example();
  PartitionLabels labels = second_route_labels();
  Halving halving = second_route_halving();
  TripartiteReduction red = reduce_to_transversal(sys, labels);
  REQUIRE(red.reduced.edge_count() == 9);

  std::vector<EligibleConfig> configs = eligible_configs(red, halving);
  REQUIRE(configs.size() == 4);
  CHECK(configs[0].d1 == 3);
  CHECK(configs[0].t1 == 1);
  CHECK(configs[0].d3 == 9);
  CHECK(configs[0].t3 == 10);
  CHECK(configs[1].d1 == 0);
  CHECK(configs[1].t1 == 1);
  CHECK(configs[1].d3 == 12);
  CHECK(configs[1].t3 == 10);
  CHECK(configs[2].d1 == 0);
  CHECK(configs[2].t1 == 1);
  CHECK(configs[2].d3 == 9);
  CHECK(configs[2].t3 == 11);
  CHECK(configs[3].d1 == 0);
  CHECK(configs[3].t1 == 2);
  CHECK(configs[3].d3 == 9);
  CHECK(configs[3].t3 == 10);

  QuadSystem quads = build_quad_system(configs);
  std::vector<K43Hit> hits;
  for_each_k43(quads, [&](const K43Hit& hit) {
    hits.push_back(hit);
    return false;
  });
  REQUIRE(!hits.empty());
  const K43Hit& first = hits.front();
  CHECK(first.a == 0);
  CHECK(first.b == 1);
  CHECK(first.c == 9);
  CHECK(first.d == 10);
  CHECK(first.ca == 0);
  CHECK(first.cb == 3);
  CHECK(first.cc == 1);
  CHECK(first.cd == 2);

  auto emb = extract_wicket_from_k43(red, quads, first);
  REQUIRE(emb.has_value());
  CHECK(emb->rows == std::array<EdgeId, 3>{1, 5, 7});
  CHECK(emb->cols == std::array<EdgeId, 2>{2, 3});
  CHECK(validate_embedding(red.reduced, *emb) == std::nullopt);
}

TEST_CASE("simulators succeed on the worked examples") {
  SimulateOptions opts;
  opts.seed = 1;
  opts.rounds = 2000;
  opts.class_override = first_route_labels();
  SimulationResult r1 = simulate_proof1(first_route_example(), opts);
  CHECK(r1.success);

  SimulateOptions opts2;
  opts2.seed = 1;
  opts2.rounds = 2000;
  opts2.class_override = second_route_labels();
  SimulationResult r2 = simulate_proof2(second_route_example(), opts2);
  CHECK(r2.success);

  for (const SimulationResult* r : {&r1, &r2}) {
    REQUIRE(r->embedding.has_value());
    CHECK(r->winning_round >= 0);
    CHECK(r->rounds_run == r->winning_round + 1);
    CHECK(static_cast<int>(r->traces.size()) == r->rounds_run);
    CHECK(r->traces.back().success);
    for (std::size_t i = 0; i + 1 < r->traces.size(); ++i) CHECK(!r->traces[i].success);
  }
  CHECK(validate_embedding(first_route_example(), *r1.embedding) == std::nullopt);
  CHECK(validate_embedding(second_route_example(), *r2.embedding) == std::nullopt);
}

TEST_CASE("latin square systems wake both simulators") {
  LinearTripleSystem sys = latin_square_system(6);
  REQUIRE(validate(sys) == std::nullopt);
  SimulateOptions opts;
  opts.seed = 3;
  opts.rounds = 400;
  opts.class_override = natural_labels(6);
  SimulationResult r1 = simulate_proof1(sys, opts);
  CHECK(r1.success);
  REQUIRE(r1.embedding.has_value());
  CHECK(validate_embedding(sys, *r1.embedding) == std::nullopt);

  SimulateOptions opts2;
  opts2.seed = 3;
  opts2.rounds = 100;
  opts2.class_override = natural_labels(6);
  SimulationResult r2 = simulate_proof2(sys, opts2);
  CHECK(r2.success);
  REQUIRE(r2.embedding.has_value());
  CHECK(validate_embedding(sys, *r2.embedding) == std::nullopt);
}

TEST_CASE("simulations are reproducible and thread-count invariant") {
  LinearTripleSystem sys = latin_square_system(6);
  SimulateOptions base;
  base.seed = 3;
  base.rounds = 400;
  base.class_override = natural_labels(6);

  SimulationResult a = simulate_proof1(sys, base);
  SimulationResult b = simulate_proof1(sys, base);
  SimulateOptions wide = base;
  wide.threads = 4;
  SimulationResult c = simulate_proof1(sys, wide);

  for (const SimulationResult* other : {&b, &c}) {
    CHECK(a.success == other->success);
    CHECK(a.winning_round == other->winning_round);
    CHECK(a.rounds_run == other->rounds_run);
    REQUIRE(a.embedding.has_value());
    REQUIRE(other->embedding.has_value());
    CHECK(a.embedding->rows == other->embedding->rows);
    CHECK(a.embedding->cols == other->embedding->cols);
    CHECK(a.embedding->privates == other->embedding->privates);
  }
  REQUIRE(a.traces.size() == c.traces.size());
  for (std::size_t i = 0; i < a.traces.size(); ++i) {
    CHECK(a.traces[i].round == c.traces[i].round);
    CHECK(a.traces[i].transversal_edges == c.traces[i].transversal_edges);
    CHECK(a.traces[i].eligible == c.traces[i].eligible);
    CHECK(a.traces[i].aux_edges == c.traces[i].aux_edges);
    CHECK(a.traces[i].candidates == c.traces[i].candidates);
    CHECK(a.traces[i].success == c.traces[i].success);
  }
}

TEST_CASE("round streams are independent of the round count") {
  LinearTripleSystem sys = latin_square_system(5);
  SimulateOptions single;
  single.seed = 77;
  single.rounds = 1;
  SimulateOptions many = single;
  many.rounds = 5;
  SimulationResult one = simulate_proof1(sys, single);
  SimulationResult five = simulate_proof1(sys, many);
  REQUIRE(!one.traces.empty());
  REQUIRE(!five.traces.empty());
  CHECK(one.traces[0].transversal_edges == five.traces[0].transversal_edges);
  CHECK(one.traces[0].eligible == five.traces[0].eligible);
  CHECK(one.traces[0].aux_edges == five.traces[0].aux_edges);
  CHECK(one.traces[0].candidates == five.traces[0].candidates);
}

TEST_CASE("wicket-free systems never yield a claim") {
  for (uint64_t seed : {11ull, 12ull}) {
    GenResult gen = greedy_pattern_free(18, Pattern::wicket, seed, 2000);
    REQUIRE(find_wicket(gen.system) == std::nullopt);
    SimulateOptions opts;
    opts.seed = 500 + seed;
    opts.rounds = 60;
    SimulationResult r1 = simulate_proof1(gen.system, opts);
    CHECK(!r1.success);
    CHECK(!r1.embedding.has_value());
    CHECK(r1.rounds_run == 60);
    SimulationResult r2 = simulate_proof2(gen.system, opts);
    CHECK(!r2.success);
    CHECK(!r2.embedding.has_value());
  }
}

TEST_CASE("class overrides are validated") {
  LinearTripleSystem sys = latin_square_system(4);
  SimulateOptions opts;
  opts.rounds = 1;
  opts.class_override = PartitionLabels{{1, 2, 3}};  // wrong length
  CHECK_THROWS_AS(simulate_proof1(sys, opts), std::invalid_argument);
  opts.class_override = natural_labels(4);
  opts.class_override->class_of[0] = 4;
  CHECK_THROWS_AS(simulate_proof2(sys, opts), std::invalid_argument);
}
