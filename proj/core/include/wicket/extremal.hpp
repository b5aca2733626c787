#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wicket/patterns.hpp"
#include "wicket/system.hpp"

namespace wicket {

struct ExtremalOptions {
  int threads = 1;
  // Maximum number of search nodes to expand; < 0 means unlimited. The
  // budget is split deterministically across frontier units, so results
  // and node counts do not depend on the thread count.
  long long node_budget = -1;
  // Wall-clock cap in seconds; < 0 means none. Unlike the node budget this
  // makes truncated runs machine-dependent.
  double time_budget_seconds = -1.0;
  // Depth at which the sequential prefix search hands independent subtree
  // tasks to the worker pool.
  int frontier_depth = 4;
};

struct ExtremalRecord {
  VertexId n = 0;
  std::optional<Pattern> forbidden;  // empty: plain packing, no pattern barred
  int max_edges = 0;
  LinearTripleSystem witness{0};
  long long nodes = 0;   // expanded search nodes, budget-deterministic
  double seconds = 0.0;  // wall time, machine-dependent
  // True when the search ran to completion; a budget cutoff leaves the
  // best value found so far and clears this flag.
  bool proof_of_optimality = false;
};

// Exact maximum edge count over all linear triple systems on n vertices
// avoiding the forbidden pattern (or over all systems when none is given),
// with a witness. Exhaustive search over colex-sorted edge sequences; at
// shallow depths only colex-least labeled representatives of each
// isomorphism class are expanded, and subtrees that cannot beat the best
// known value are cut by pair-supply and degree-capacity bounds.
ExtremalRecord max_edges_search(VertexId n, std::optional<Pattern> forbidden,
                                const ExtremalOptions& opts = {});

// Closed-form maximum packing size: floor(n/3 * floor((n-1)/2)), reduced
// by one when n = 5 mod 6. Independent of the search; useful as a
// cross-check on plain packing runs.
long long max_packing_size(VertexId n);

// Re-derives everything the record claims about its witness; empty when
// the witness is consistent.
std::optional<std::string> check_witness(const ExtremalRecord& rec);

// Tab-separated report rows. The seconds column is wall time and is the
// one field not stable across runs.
std::string extremal_tsv_header();
std::string extremal_tsv_row(const ExtremalRecord& rec);

}  // namespace wicket
