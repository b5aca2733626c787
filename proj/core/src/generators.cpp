#include "wicket/generators.hpp"

#include <algorithm>
#include <sstream>

#include "wicket/rng.hpp"

namespace wicket {

namespace {

// Bose: n = 6k+3. Points are (i, j) with i in Z_{2k+1}, j in {0,1,2};
// id = j(2k+1) + i. The quasigroup x*y = (x+y)(k+1) mod 2k+1 is idempotent
// and commutative, which makes the mixed triples pairwise compatible.
LinearTripleSystem bose(VertexId n) {
  const VertexId k = (n - 3) / 6;
  const VertexId q = 2 * k + 1;
  LinearTripleSystem sys(n);
  auto id = [&](VertexId i, VertexId j) { return j * q + i; };
  auto star = [&](VertexId x, VertexId y) { return ((x + y) * (k + 1)) % q; };
  for (VertexId i = 0; i < q; ++i) sys.must_add(id(i, 0), id(i, 1), id(i, 2));
  for (VertexId i = 0; i < q; ++i) {
    for (VertexId l = i + 1; l < q; ++l) {
      for (VertexId j = 0; j < 3; ++j) {
        sys.must_add(id(i, j), id(l, j), id(star(i, l), (j + 1) % 3));
      }
    }
  }
  return sys;
}

// Skolem: n = 6k+1. Points are (x, j) with x in Z_{2k}, j in {0,1,2}, plus
// one point at infinity; id(x, j) = j(2k) + x, infinity = 6k. The
// half-idempotent quasigroup x*y = f(x+y mod 2k) with f(2t) = t and
// f(2t+1) = k+t fixes x*x = x only for x < k; the non-idempotent rows are
// completed through the infinity point.
LinearTripleSystem skolem(VertexId n) {
  const VertexId k = (n - 1) / 6;
  const VertexId q = 2 * k;
  LinearTripleSystem sys(n);
  const VertexId inf = 6 * k;
  auto id = [&](VertexId x, VertexId j) { return j * q + x; };
  auto f = [&](VertexId s) { return s % 2 == 0 ? s / 2 : k + (s - 1) / 2; };
  auto star = [&](VertexId x, VertexId y) { return f((x + y) % q); };
  for (VertexId x = 0; x < k; ++x) sys.must_add(id(x, 0), id(x, 1), id(x, 2));
  for (VertexId x = k; x < q; ++x) {
    for (VertexId j = 0; j < 3; ++j) {
      sys.must_add(inf, id(x, j), id(star(x, x), (j + 1) % 3));
    }
  }
  for (VertexId x = 0; x < q; ++x) {
    for (VertexId y = x + 1; y < q; ++y) {
      for (VertexId j = 0; j < 3; ++j) {
        sys.must_add(id(x, j), id(y, j), id(star(x, y), (j + 1) % 3));
      }
    }
  }
  return sys;
}

}  // namespace

GenResult random_linear(VertexId n, int target_edges, std::uint64_t seed,
                        long long max_attempts) {
  if (max_attempts < 0) {
    max_attempts = std::max<long long>(1000, 100LL * n * n);
  }
  GenResult r{LinearTripleSystem(n), false, 0, 0};
  SeededRng rng(seed);
  while (static_cast<int>(r.system.edge_count()) < target_edges &&
         r.attempts < max_attempts) {
    ++r.attempts;
    const auto a = static_cast<VertexId>(rng.below(n));
    const auto b = static_cast<VertexId>(rng.below(n));
    const auto c = static_cast<VertexId>(rng.below(n));
    if (r.system.add_edge(a, b, c)) ++r.rejections;
  }
  r.target_reached = static_cast<int>(r.system.edge_count()) >= target_edges;
  return r;
}

LinearTripleSystem steiner_triple_system(VertexId n) {
  if (n % 6 == 3) return bose(n);
  if (n % 6 == 1) return skolem(n);
  std::ostringstream os;
  os << "no Steiner triple system on " << n << " vertices; n must be 1 or 3 mod 6";
  throw UnsupportedOrder(os.str());
}

LinearTripleSystem affine_plane_order3() {
  LinearTripleSystem sys(9);
  // Three distinct points of GF(3)^2 are collinear exactly when they sum
  // to zero; emitting p < q < r hits each line once.
  auto coord = [](VertexId p, int axis) { return axis == 0 ? p / 3 : p % 3; };
  for (VertexId p = 0; p < 9; ++p) {
    for (VertexId q = p + 1; q < 9; ++q) {
      const VertexId rx = (6 - coord(p, 0) - coord(q, 0)) % 3;
      const VertexId ry = (6 - coord(p, 1) - coord(q, 1)) % 3;
      const VertexId r = 3 * rx + ry;
      if (r > q) sys.must_add(p, q, r);
    }
  }
  return sys;
}

std::vector<long long> behrend_set(long long limit) {
  if (limit <= 0) throw std::invalid_argument("behrend_set needs a positive limit");
  std::vector<long long> best{0};
  for (long long d = 2; 2 * d - 1 < limit; ++d) {
    const long long q = 2 * d - 1;
    // Every shell with positive norm has a member whose top digit is nonzero
    // (norms are permutation-invariant), so once q^(k-1) reaches the limit no
    // shell at dimension k can fit and larger k are hopeless too.
    for (long long k = 2, top = q; top < limit; ++k) {
      // Bucket every digit vector of [0,d)^k by its squared norm.
      const long long max_norm = k * (d - 1) * (d - 1);
      std::vector<std::vector<long long>> shells(max_norm + 1);
      std::vector<long long> digits(k, 0);
      for (;;) {
        long long norm = 0, value = 0, place = 1;
        for (long long i = 0; i < k; ++i) {
          norm += digits[i] * digits[i];
          value += digits[i] * place;
          place *= q;
        }
        shells[norm].push_back(value);
        long long pos = 0;
        while (pos < k && digits[pos] == d - 1) digits[pos++] = 0;
        if (pos == k) break;
        ++digits[pos];
      }
      // Scanning d, k, r in ascending order makes "first strictly larger
      // shell wins" agree with the (size, d, k, r) preference order. A shell
      // only qualifies when all of its values sit below the limit.
      for (long long r = 1; r <= max_norm; ++r) {
        if (shells[r].size() <= best.size()) continue;
        if (*std::max_element(shells[r].begin(), shells[r].end()) >= limit) continue;
        best = shells[r];
      }
      if (top > limit / q) break;  // next multiply would overflow past limit
      top *= q;
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

LinearTripleSystem rsz_system(VertexId base, const std::vector<long long>& s) {
  if (base == 0) throw std::invalid_argument("rsz_system needs a positive base");
  for (long long a : s) {
    if (a < 0 || a >= static_cast<long long>(base)) {
      throw std::invalid_argument("rsz_system: set members must lie in [0, base)");
    }
  }
  LinearTripleSystem sys(6 * base);
  for (VertexId x = 0; x < base; ++x) {
    for (long long a : s) {
      const auto av = static_cast<VertexId>(a);
      sys.must_add(x, base + x + av, 3 * base + x + 2 * av);
    }
  }
  return sys;
}

GenResult greedy_pattern_free(VertexId n, Pattern forbidden, std::uint64_t seed,
                              long long stop_after) {
  if (stop_after < 0) stop_after = 50LL * n * n;
  GenResult r{LinearTripleSystem(n), true, 0, 0};
  SeededRng rng(seed);
  long long consecutive = 0;
  while (consecutive < stop_after) {
    ++r.attempts;
    const auto a = static_cast<VertexId>(rng.below(n));
    const auto b = static_cast<VertexId>(rng.below(n));
    const auto c = static_cast<VertexId>(rng.below(n));
    if (r.system.add_edge(a, b, c)) {
      ++r.rejections;
      ++consecutive;
      continue;
    }
    // The state before this edge was pattern-free, so the system has the
    // pattern now exactly when some embedding uses the new edge.
    if (pattern_uses_edge(r.system, forbidden, r.system.edge_count() - 1)) {
      r.system.remove_last_edge();
      ++r.rejections;
      ++consecutive;
    } else {
      consecutive = 0;
    }
  }
  return r;
}

}  // namespace wicket
