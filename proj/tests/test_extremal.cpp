#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"
#include "wicket/extremal.hpp"

using namespace wicket;
namespace wt = wicket::testing;

namespace {

std::vector<TripleEdge> sorted_edges(const LinearTripleSystem& sys) {
  std::vector<TripleEdge> out = sys.edges();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("closed-form packing sizes") {
  CHECK(max_packing_size(0) == 0);
  CHECK(max_packing_size(2) == 0);
  CHECK(max_packing_size(3) == 1);
  CHECK(max_packing_size(4) == 1);
  CHECK(max_packing_size(5) == 2);
  CHECK(max_packing_size(6) == 4);
  CHECK(max_packing_size(7) == 7);
  CHECK(max_packing_size(8) == 8);
  CHECK(max_packing_size(9) == 12);
  CHECK(max_packing_size(10) == 13);
  CHECK(max_packing_size(11) == 17);
  CHECK(max_packing_size(12) == 20);
  CHECK(max_packing_size(13) == 26);
}

TEST_CASE("search equals plain enumeration on small orders") {
  const std::vector<std::optional<Pattern>> variants = {
      std::nullopt, Pattern::wicket, Pattern::grid, Pattern::six_three, Pattern::berge_c4};
  for (VertexId n = 4; n <= 7; ++n) {
    for (const auto& f : variants) {
      CAPTURE(n);
      ExtremalRecord rec = max_edges_search(n, f);
      CHECK(rec.max_edges == wt::oracle_max_edges(n, f));
      CHECK(rec.proof_of_optimality);
      CHECK(rec.nodes > 0);
      CHECK(check_witness(rec) == std::nullopt);
    }
  }
}

TEST_CASE("packing searches match the closed form") {
  const std::vector<std::pair<VertexId, int>> expected = {
      {3, 1}, {6, 4}, {7, 7}, {8, 8}, {9, 12}, {10, 13}};
  for (auto [n, want] : expected) {
    CAPTURE(n);
    ExtremalRecord rec = max_edges_search(n, std::nullopt);
    CHECK(rec.max_edges == want);
    CHECK(rec.max_edges == max_packing_size(n));
    CHECK(rec.proof_of_optimality);
    CHECK(rec.n == n);
    CHECK(!rec.forbidden.has_value());
    CHECK(check_witness(rec) == std::nullopt);
  }
}

TEST_CASE("barring wickets costs nothing below nine vertices") {
  // A wicket occupies nine distinct vertices, so the constrained optimum
  // must coincide with the plain packing number up to n = 8.
  for (VertexId n = 6; n <= 8; ++n) {
    CAPTURE(n);
    ExtremalRecord packed = max_edges_search(n, std::nullopt);
    ExtremalRecord barred = max_edges_search(n, Pattern::wicket);
    CHECK(barred.max_edges == packed.max_edges);
    CHECK(barred.proof_of_optimality);
    CHECK_FALSE(wt::oracle_wicket_exists(barred.witness));
  }
}

TEST_CASE("nine-vertex ceilings per pattern") {
  // Regression pins: locked outputs of completed exhaustive runs. The
  // engine itself is checked against the naive enumeration up to n = 7
  // above; these values extend that to the first order where the
  // patterns actually bite (an affine plane on 9 points reaches 12
  // edges, so every bound below 12 is a real constraint).
  struct Row {
    Pattern pattern;
    int ceiling;
  };
  const std::vector<Row> rows = {{Pattern::wicket, 9},
                                 {Pattern::grid, 10},
                                 {Pattern::six_three, 6},
                                 {Pattern::berge_c4, 5}};
  for (const auto& row : rows) {
    CAPTURE(to_string(row.pattern));
    ExtremalRecord rec = max_edges_search(9, row.pattern);
    CHECK(rec.max_edges == row.ceiling);
    CHECK(rec.proof_of_optimality);
    CHECK(check_witness(rec) == std::nullopt);
  }
  ExtremalRecord wf = max_edges_search(9, Pattern::wicket);
  CHECK_FALSE(wt::oracle_wicket_exists(wf.witness));
  ExtremalRecord sf = max_edges_search(9, Pattern::six_three);
  CHECK(wt::oracle_count_63(sf.witness) == 0);
  ExtremalRecord bf = max_edges_search(9, Pattern::berge_c4);
  CHECK_FALSE(wt::oracle_berge_c4_exists(bf.witness));
  ExtremalRecord gf = max_edges_search(9, Pattern::grid);
  CHECK_FALSE(wt::oracle_grid_exists(gf.witness));
}

TEST_CASE("thread count changes neither counts nor witnesses") {
  for (const auto& f : std::vector<std::optional<Pattern>>{std::nullopt, Pattern::wicket}) {
    ExtremalOptions one;
    one.threads = 1;
    ExtremalOptions four;
    four.threads = 4;
    ExtremalRecord a = max_edges_search(9, f, one);
    ExtremalRecord b = max_edges_search(9, f, four);
    CHECK(a.max_edges == b.max_edges);
    CHECK(a.nodes == b.nodes);
    CHECK(a.proof_of_optimality == b.proof_of_optimality);
    CHECK(sorted_edges(a.witness) == sorted_edges(b.witness));
  }
}

TEST_CASE("frontier depth changes neither value nor witness") {
  ExtremalRecord base = max_edges_search(9, std::nullopt);
  for (int depth : {0, 2, 3}) {
    CAPTURE(depth);
    ExtremalOptions opts;
    opts.frontier_depth = depth;
    opts.threads = 2;
    ExtremalRecord rec = max_edges_search(9, std::nullopt, opts);
    CHECK(rec.max_edges == base.max_edges);
    CHECK(rec.proof_of_optimality);
    CHECK(sorted_edges(rec.witness) == sorted_edges(base.witness));
  }
}

TEST_CASE("node budget truncates deterministically") {
  ExtremalOptions tight;
  tight.node_budget = 3000;
  tight.threads = 1;
  ExtremalRecord a = max_edges_search(10, std::nullopt, tight);
  CHECK_FALSE(a.proof_of_optimality);
  CHECK(a.nodes <= 3000);
  CHECK(a.max_edges <= 13);
  CHECK(check_witness(a) == std::nullopt);

  tight.threads = 4;
  ExtremalRecord b = max_edges_search(10, std::nullopt, tight);
  CHECK(b.max_edges == a.max_edges);
  CHECK(b.nodes == a.nodes);
  CHECK(sorted_edges(b.witness) == sorted_edges(a.witness));

  // A budget beyond the full tree changes nothing against an unlimited run.
  ExtremalOptions loose;
  loose.node_budget = 1'000'000'000;
  ExtremalRecord c = max_edges_search(10, std::nullopt, loose);
  ExtremalRecord d = max_edges_search(10, std::nullopt);
  CHECK(c.proof_of_optimality);
  CHECK(c.max_edges == 13);
  CHECK(c.nodes == d.nodes);
}

TEST_CASE("zero time budget yields an empty truncated record") {
  ExtremalOptions opts;
  opts.time_budget_seconds = 0.0;
  ExtremalRecord rec = max_edges_search(9, std::nullopt, opts);
  CHECK_FALSE(rec.proof_of_optimality);
  CHECK(rec.nodes == 0);
  CHECK(rec.max_edges == 0);
}

TEST_CASE("degenerate orders") {
  for (VertexId n : {0u, 1u, 2u}) {
    CAPTURE(n);
    ExtremalRecord rec = max_edges_search(n, std::nullopt);
    CHECK(rec.max_edges == 0);
    CHECK(rec.proof_of_optimality);
    CHECK(rec.witness.edge_count() == 0);
    CHECK(check_witness(rec) == std::nullopt);
  }
}

TEST_CASE("report rows") {
  CHECK(extremal_tsv_header() == "n\tpattern\tmax_edges\tproof\tnodes\tseconds\n");
  ExtremalRecord rec = max_edges_search(7, std::nullopt);
  std::string row = extremal_tsv_row(rec);
  CHECK(row.substr(0, row.rfind('\t')) ==
        "7\tnone\t7\t1\t" + std::to_string(rec.nodes));
  ExtremalRecord pat = max_edges_search(9, Pattern::six_three);
  std::string prow = extremal_tsv_row(pat);
  CHECK(prow.rfind("9\tsix_three\t6\t1\t", 0) == 0);
  CHECK(prow.back() == '\n');
}

TEST_CASE("witness checks catch tampering") {
  ExtremalRecord rec = max_edges_search(7, std::nullopt);
  REQUIRE(check_witness(rec) == std::nullopt);

  ExtremalRecord off = rec;
  off.max_edges += 1;
  auto complaint = check_witness(off);
  REQUIRE(complaint.has_value());
  CHECK(complaint->find("edge count") != std::string::npos);

  ExtremalRecord wrong_n = rec;
  wrong_n.n += 1;
  CHECK(check_witness(wrong_n).has_value());

  // A witness that contains the pattern it claims to avoid is rejected.
  ExtremalRecord fake;
  fake.n = 9;
  fake.forbidden = Pattern::wicket;
  fake.witness = wt::single_wicket();
  fake.max_edges = static_cast<int>(fake.witness.edge_count());
  auto bad = check_witness(fake);
  REQUIRE(bad.has_value());
  CHECK(bad->find("pattern") != std::string::npos);
}
