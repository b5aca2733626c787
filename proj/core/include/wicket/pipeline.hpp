#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wicket/patterns.hpp"
#include "wicket/rng.hpp"
#include "wicket/system.hpp"

namespace wicket {

// A supplied pair list is not a matching between the two prime halves.
class NotAMatchingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matching was requested while one side has no vertices.
class EmptySideError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PartitionLabels {
  std::vector<uint8_t> class_of;  // per vertex: 1, 2, or 3
};

// Transversal restriction of a system: the edges meeting every class once.
struct TripartiteReduction {
  LinearTripleSystem reduced{0};
  std::vector<EdgeId> source_edge;  // reduced edge id -> original edge id
  PartitionLabels labels;
};

struct Halving {
  std::vector<uint8_t> half_of;  // per vertex: 1 = prime, 2 = doubleprime
};

// A three-edge configuration of the reduced system whose edges pairwise
// meet in three distinct vertices, with its degree-one vertices in the
// prime halves of classes 1 and 3 and its degree-two vertices in the
// doubleprime halves. Edge roles: ea = {d1, y, t3}, ec = {t1, x, t3},
// ed = {t1, y, d3}, with y, x the class-2 vertices.
struct EligibleConfig {
  EdgeId ea = kNoEdge, ec = kNoEdge, ed = kNoEdge;  // reduced edge ids
  VertexId d1 = 0, t1 = 0, d3 = 0, t3 = 0;
  VertexId y = 0, x = 0;
};

struct Matching {
  std::vector<std::pair<VertexId, VertexId>> pairs;  // sorted by first
};

// One edge of the auxiliary bipartite graph between the doubleprime
// halves of classes 1 and 3, present when some eligible config couples
// its degree-two tags through a matched (d1, d3) pair.
struct AuxEdge {
  VertexId t1 = 0, t3 = 0;
  std::size_t config = 0;  // lowest-index witness config
  std::size_t pair = 0;    // index of that config's (d1, d3) in the matching
};

struct MatchingDecomposition {
  std::vector<std::vector<std::size_t>> groups;  // greedy edge-disjoint matchings
};

// Two aux edges of one group sharing a matched pair, joined by a third
// aux edge from a.t1 to b.t3: the shape a wicket is read off from.
struct NonInducedHit {
  std::size_t group = 0;
  std::size_t a = 0, b = 0, cross = 0;  // indices into the aux edge list
};

// Lookup tables over the per-config corner quads (d1, t1, d3, t3), each
// keyed by one omitted coordinate.
struct QuadSystem {
  std::vector<EligibleConfig> configs;
  using Key = std::array<VertexId, 3>;
  std::map<Key, std::vector<std::size_t>> missing_d1;  // (t1, d3, t3)
  std::map<Key, std::vector<std::size_t>> missing_t1;  // (d1, d3, t3)
  std::map<Key, std::vector<std::size_t>> missing_d3;  // (d1, t1, t3)
  std::map<Key, std::vector<std::size_t>> missing_t3;  // (d1, t1, d3)
};

// Four configs agreeing on (a, b, c, d) except each in one free corner.
struct K43Hit {
  VertexId a = 0, b = 0, c = 0, d = 0;
  std::size_t ca = 0, cb = 0, cc = 0, cd = 0;  // config indices by role
};

struct Rational {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rational&) const = default;
};

Rational make_rational(long long num, long long den);
int compare(const Rational& lhs, const Rational& rhs);  // -1, 0, 1

// Chance that a uniform perfect matching between two s-sets contains at
// least one of k prescribed disjoint pairs. Exact; throws
// SizeLimitExceeded for s > 12 and std::invalid_argument for k outside
// [0, s] or s < 1. Always at least k/(2s).
Rational matching_hit_probability(int s, int k);

PartitionLabels random_tripartition(VertexId n, SeededRng& rng);
TripartiteReduction reduce_to_transversal(const LinearTripleSystem& sys,
                                          PartitionLabels labels);
Halving halve_classes(const PartitionLabels& labels, SeededRng& rng);

// Sorted members of one half of one class (cls in 1..3, half 1 or 2).
std::vector<VertexId> half_members(const PartitionLabels& labels, const Halving& halving,
                                   int cls, int half);

// Pairs a uniform shuffle of each side, one pair per position up to the
// shorter side. Throws EmptySideError when a side is empty.
Matching uniform_matching(const std::vector<VertexId>& left,
                          const std::vector<VertexId>& right, SeededRng& rng);

std::vector<EligibleConfig> eligible_configs(const TripartiteReduction& red,
                                             const Halving& halving);

// Aux edges sorted by (t1, t3). Verifies the matching pairs the prime
// halves without reusing endpoints; throws NotAMatchingError otherwise.
std::vector<AuxEdge> build_aux_graph(const TripartiteReduction& red, const Halving& halving,
                                     const std::vector<EligibleConfig>& configs,
                                     const Matching& matching);

MatchingDecomposition decompose_matchings(const std::vector<AuxEdge>& aux);

std::vector<NonInducedHit> non_induced_hits(const std::vector<AuxEdge>& aux,
                                            const MatchingDecomposition& gm);

// Reads a wicket candidate off a hit; empty when the six edges fail any
// wicket requirement. Edge ids refer to the reduced system.
std::optional<WicketEmbedding> extract_wicket_from_hit(
    const TripartiteReduction& red, const std::vector<EligibleConfig>& configs,
    const std::vector<AuxEdge>& aux, const NonInducedHit& hit);

QuadSystem build_quad_system(std::vector<EligibleConfig> configs);

// Visits hits in deterministic order until the callback returns true.
void for_each_k43(const QuadSystem& quads,
                  const std::function<bool(const K43Hit&)>& visit);

std::optional<WicketEmbedding> extract_wicket_from_k43(const TripartiteReduction& red,
                                                       const QuadSystem& quads,
                                                       const K43Hit& hit);

// Rewrites a reduced-id embedding in terms of the original edge ids.
WicketEmbedding map_to_source(const TripartiteReduction& red, WicketEmbedding emb);

struct SimulateOptions {
  uint64_t seed = 0;
  int rounds = 1;
  int threads = 1;
  // Forces the class labels instead of drawing them, leaving only the
  // halving (and matching) random per round.
  std::optional<PartitionLabels> class_override;
};

struct RoundTrace {
  int round = -1;
  int transversal_edges = 0;
  int eligible = 0;
  int matching_size = 0;
  int aux_edges = 0;
  int groups = 0;
  int candidates = 0;  // extraction attempts examined
  bool success = false;
};

struct SimulationResult {
  bool success = false;
  int winning_round = -1;
  std::optional<WicketEmbedding> embedding;  // original edge ids
  std::vector<RoundTrace> traces;            // truncated after the winning round
  int rounds_run = 0;
};

// Independent seeded rounds (round r uses derive_seed(seed, r)); each
// round draws a tripartition, halves the classes, and hunts a wicket by
// the stated route. Rounds run in parallel batches of `threads`; the
// reported winner is the smallest succeeding round index either way.
SimulationResult simulate_proof1(const LinearTripleSystem& sys, const SimulateOptions& opts);
SimulationResult simulate_proof2(const LinearTripleSystem& sys, const SimulateOptions& opts);

}  // namespace wicket
