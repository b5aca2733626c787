#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wicket/patterns.hpp"
#include "wicket/system.hpp"

namespace wicket {

// Steiner triple systems exist exactly for orders 1 or 3 mod 6.
class UnsupportedOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GenResult {
  LinearTripleSystem system;
  bool target_reached = true;  // false when the attempt budget ran out first
  long long attempts = 0;      // proposals examined
  long long rejections = 0;    // proposals discarded
};

// Draws uniform random triples and keeps each one that stays linear, until
// target_edges edges exist or max_attempts proposals have been examined
// (max_attempts < 0 picks a budget of 100 n^2, at least 1000). The target
// can exceed what any linear system on n vertices supports; the flag
// reports which way the run ended.
GenResult random_linear(VertexId n, int target_edges, std::uint64_t seed,
                        long long max_attempts = -1);

// A Steiner triple system on n vertices: every vertex pair lies in exactly
// one triple. n = 6k+3 uses the quasigroup over Z_{2k+1} with
// x*y = (x+y)(k+1); n = 6k+1 uses the half-idempotent quasigroup over
// Z_{2k} plus one extra point. Throws UnsupportedOrder otherwise.
LinearTripleSystem steiner_triple_system(VertexId n);

// The affine plane of order 3: 9 points, 12 lines in 4 parallel classes.
// Point (x, y) over GF(3)^2 gets id 3x + y; lines are the zero-sum triples.
LinearTripleSystem affine_plane_order3();

// A progression-free set: no three distinct members a, b, c satisfy
// a + c = 2b. Digit vectors in [0,d)^k with a fixed squared norm, read in
// base 2d-1 so sums never carry; the largest such shell with values below
// `limit` wins (ties: smaller d, then k, then the norm). {0} when no shell
// with at least one positive member fits.
std::vector<long long> behrend_set(long long limit);

// Edge x -> {x, base+x+a, 3*base+x+2a} for x in [0, base) and a in s,
// on 6*base vertices. Linear for every s within [0, base); the three edges
// of a six-vertex triple configuration force an arithmetic progression in
// s, so a progression-free s makes the result configuration-free.
LinearTripleSystem rsz_system(VertexId base, const std::vector<long long>& s);

// Adds random legal edges whose insertion keeps the system free of the
// pattern, stopping after `stop_after` consecutive rejected proposals
// (default 50 n^2). attempts/rejections mirror random_linear.
GenResult greedy_pattern_free(VertexId n, Pattern forbidden, std::uint64_t seed,
                              long long stop_after = -1);

}  // namespace wicket
