#include "wicket/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>
#include <vector>

namespace wicket {
namespace {

using Clock = std::chrono::steady_clock;

// Isomorph rejection runs only this deep. At depth d the support has at
// most 3d vertices, so the 16-vertex relabeling limit is never hit.
constexpr int kOrderlyDepth = 4;

std::vector<TripleEdge> all_triples_colex(VertexId n) {
  std::vector<TripleEdge> out;
  for (VertexId c = 2; c < n; ++c)
    for (VertexId b = 1; b < c; ++b)
      for (VertexId a = 0; a < b; ++a) out.push_back(*TripleEdge::make(a, b, c));
  return out;
}

// Upper bounds on how many edges can still be added. Each edge consumes
// three uncovered pairs, and each edge through v consumes two vertices
// never again usable with v.
long long remaining_bound(const LinearTripleSystem& sys) {
  const long long n = sys.vertex_count();
  long long pairs = n * (n - 1) / 2 - sys.covered_pairs();
  long long slots = 0;
  for (VertexId v = 0; v < sys.vertex_count(); ++v) {
    long long room = n - 1 - 2 * static_cast<long long>(sys.degree(v));
    if (room > 0) slots += room / 2;
  }
  return std::min(pairs / 3, slots / 3);
}

// True when no relabeling of the support produces a colex-smaller sorted
// edge list. Only such representatives are expanded at shallow depths;
// every isomorphism class keeps exactly one surviving generation path
// because prefixes of a colex-least labeling are themselves colex-least.
bool is_colex_min_labeling(const LinearTripleSystem& sys) {
  const size_t m = sys.edge_count();
  if (m == 0) return true;
  VertexId s = 0;
  for (VertexId v = 0; v < sys.vertex_count(); ++v)
    if (sys.degree(v) > 0) s = v + 1;
  for (VertexId v = 0; v < s; ++v)
    if (sys.degree(v) == 0) return false;  // gap: sliding labels down shrinks codes
  if (s > 16) return true;                 // beyond the relabeling gate; keep the node

  auto code_of = [](VertexId a, VertexId b, VertexId c) -> uint16_t {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return static_cast<uint16_t>((c << 8) | (b << 4) | a);
  };
  std::vector<uint16_t> own;
  own.reserve(m);
  for (const TripleEdge& e : sys.edges()) own.push_back(code_of(e.v[0], e.v[1], e.v[2]));
  std::sort(own.begin(), own.end());

  std::vector<std::array<VertexId, 3>> edges;
  edges.reserve(m);
  for (const TripleEdge& e : sys.edges()) edges.push_back({e.v[0], e.v[1], e.v[2]});
  std::vector<std::vector<size_t>> at(s);
  for (size_t i = 0; i < m; ++i)
    for (VertexId v : edges[i]) at[v].push_back(i);

  std::vector<int> label_of(s, -1);
  std::vector<int> assigned(m, 0);
  std::vector<uint16_t> partial;
  partial.reserve(m);
  size_t agree = 0;    // partial[0..agree) matches own exactly
  bool smaller = false;

  // Assign new labels 0,1,... to old vertices; a branch dies as soon as its
  // code list exceeds own, and the whole test ends when one beats it.
  auto dfs = [&](auto&& self, VertexId lbl) -> void {
    if (smaller) return;
    if (lbl == s) return;  // full tie: an automorphism
    std::vector<std::pair<int, VertexId>> order;
    for (VertexId v = 0; v < s; ++v) {
      if (label_of[v] >= 0) continue;
      int closes = 0;
      for (size_t i : at[v])
        if (assigned[i] == 2) ++closes;
      order.push_back({-closes, v});
    }
    std::sort(order.begin(), order.end());
    for (auto [neg, v] : order) {
      label_of[v] = static_cast<int>(lbl);
      std::vector<uint16_t> fresh;
      for (size_t i : at[v]) {
        if (++assigned[i] == 3) {
          const auto& e = edges[i];
          fresh.push_back(code_of(static_cast<VertexId>(label_of[e[0]]),
                                  static_cast<VertexId>(label_of[e[1]]),
                                  static_cast<VertexId>(label_of[e[2]])));
        }
      }
      std::sort(fresh.begin(), fresh.end());
      const size_t base = partial.size();
      const size_t saved_agree = agree;
      partial.insert(partial.end(), fresh.begin(), fresh.end());
      bool prune = false;
      for (size_t k = base; k < partial.size() && agree == k; ++k) {
        if (partial[k] < own[k]) { smaller = true; break; }
        if (partial[k] > own[k]) { prune = true; break; }
        agree = k + 1;
      }
      if (!smaller && !prune && agree == partial.size()) {
        // Every completed code so far ties own. Own must have exactly as
        // many codes below the next label boundary, otherwise its next
        // code is smaller than anything this branch can still produce.
        const uint16_t boundary = static_cast<uint16_t>((lbl + 1) << 8);
        const size_t need = static_cast<size_t>(
            std::lower_bound(own.begin(), own.end(), boundary) - own.begin());
        if (partial.size() < need) prune = true;
        if (!prune) self(self, lbl + 1);
      }
      partial.resize(base);
      agree = std::min(agree, saved_agree);
      for (size_t i : at[v]) --assigned[i];
      label_of[v] = -1;
      if (smaller) return;
    }
  };
  dfs(dfs, 0);
  return !smaller;
}

struct Limits {
  long long nodes_left;  // < 0: unlimited
  std::optional<Clock::time_point> deadline;
  bool truncated = false;

  bool admit() {
    if (truncated) return false;
    if (deadline && Clock::now() >= *deadline) { truncated = true; return false; }
    if (nodes_left == 0) { truncated = true; return false; }
    if (nodes_left > 0) --nodes_left;
    return true;
  }
};

struct Unit {
  std::vector<TripleEdge> edges;
  size_t last_idx;
};

struct TaskResult {
  int best = -1;  // strict improvement over the shared baseline, else -1
  std::optional<LinearTripleSystem> witness;
  long long nodes = 0;
  bool truncated = false;
};

struct Searcher {
  const std::vector<TripleEdge>& triples;
  std::optional<Pattern> forbidden;

  bool child_ok(LinearTripleSystem& sys, size_t idx, int depth) const {
    const TripleEdge& t = triples[idx];
    if (sys.add_edge(t.v[0], t.v[1], t.v[2])) return false;
    bool ok = true;
    if (forbidden) {
      const EdgeId last = static_cast<EdgeId>(sys.edge_count() - 1);
      if (pattern_uses_edge(sys, *forbidden, last)) ok = false;
    }
    if (ok && depth <= kOrderlyDepth && !is_colex_min_labeling(sys)) ok = false;
    if (!ok) sys.remove_last_edge();
    return ok;
  }

  void dfs(LinearTripleSystem& sys, size_t next_idx, int depth, Limits& lim,
           long long& nodes, int& best, std::optional<LinearTripleSystem>& witness) const {
    if (!lim.admit()) return;
    ++nodes;
    const int m = static_cast<int>(sys.edge_count());
    if (m > best) {
      best = m;
      witness = sys;
    }
    if (m + remaining_bound(sys) <= best) return;
    for (size_t idx = next_idx; idx < triples.size(); ++idx) {
      if (!child_ok(sys, idx, depth + 1)) continue;
      dfs(sys, idx + 1, depth + 1, lim, nodes, best, witness);
      sys.remove_last_edge();
      if (lim.truncated) return;
    }
  }
};

}  // namespace

long long max_packing_size(VertexId n) {
  if (n < 3) return 0;
  const long long half = (static_cast<long long>(n) - 1) / 2;
  long long total = static_cast<long long>(n) * half / 3;
  if (n % 6 == 5) total -= 1;
  return total;
}

ExtremalRecord max_edges_search(VertexId n, std::optional<Pattern> forbidden,
                                const ExtremalOptions& opts) {
  const auto started = Clock::now();
  ExtremalRecord rec;
  rec.n = n;
  rec.forbidden = forbidden;
  rec.witness = LinearTripleSystem(n);

  const std::vector<TripleEdge> triples = all_triples_colex(n);
  Searcher searcher{triples, forbidden};

  std::optional<Clock::time_point> deadline;
  if (opts.time_budget_seconds >= 0)
    deadline = started + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(opts.time_budget_seconds));
  const int frontier = std::clamp(opts.frontier_depth, 0, 8);

  // Sequential prefix pass: expand nodes shallower than the frontier and
  // collect frontier-depth children as independent units.
  long long nodes = 0;
  int best = -1;
  std::optional<LinearTripleSystem> witness;
  std::vector<Unit> units;
  Limits prefix_lim{opts.node_budget, deadline};
  bool truncated = false;

  auto prefix = [&](auto&& self, LinearTripleSystem& sys, size_t next_idx, int depth) -> void {
    if (!prefix_lim.admit()) return;
    ++nodes;
    const int m = static_cast<int>(sys.edge_count());
    if (m > best) {
      best = m;
      witness = sys;
    }
    for (size_t idx = next_idx; idx < triples.size(); ++idx) {
      if (!searcher.child_ok(sys, idx, depth + 1)) continue;
      if (depth + 1 == frontier) {
        units.push_back({sys.edges(), idx});
      } else {
        self(self, sys, idx + 1, depth + 1);
      }
      sys.remove_last_edge();
      if (prefix_lim.truncated) return;
    }
  };
  {
    LinearTripleSystem sys(n);
    if (frontier == 0) {
      // Whole tree handled as one unit rooted at the empty system.
      units.push_back({{}, static_cast<size_t>(-1)});
    } else {
      prefix(prefix, sys, 0, 0);
    }
  }
  truncated = prefix_lim.truncated;

  // Remaining node budget split evenly over units, extra nodes to the
  // earliest; thread count never changes what any task may expand.
  std::vector<TaskResult> results(units.size());
  if (!truncated && !units.empty()) {
    const long long spent = (opts.node_budget >= 0) ? nodes : 0;
    const long long rem = (opts.node_budget >= 0)
                              ? std::max<long long>(0, opts.node_budget - spent)
                              : -1;
    const int baseline = best;
    auto run_unit = [&](size_t u) {
      const Unit& unit = units[u];
      long long slice = -1;
      if (rem >= 0) {
        const long long k = static_cast<long long>(units.size());
        slice = rem / k + (static_cast<long long>(u) < rem % k ? 1 : 0);
      }
      Limits lim{slice, deadline};
      LinearTripleSystem sys(n);
      for (const TripleEdge& e : unit.edges) sys.must_add(e.v[0], e.v[1], e.v[2]);
      TaskResult& out = results[u];
      int local_best = baseline;
      std::optional<LinearTripleSystem> local_witness;
      searcher.dfs(sys, unit.last_idx + 1, static_cast<int>(unit.edges.size()), lim,
                   out.nodes, local_best, local_witness);
      out.truncated = lim.truncated;
      if (local_witness) {
        out.best = local_best;
        out.witness = std::move(local_witness);
      }
    };
    const int threads = std::max(1, opts.threads);
    if (threads == 1 || units.size() <= 1) {
      for (size_t u = 0; u < units.size(); ++u) run_unit(u);
    } else {
      std::atomic<size_t> next{0};
      std::vector<std::thread> pool;
      const size_t width = std::min<size_t>(static_cast<size_t>(threads), units.size());
      for (size_t w = 0; w < width; ++w)
        pool.emplace_back([&] {
          for (size_t u = next.fetch_add(1); u < units.size(); u = next.fetch_add(1))
            run_unit(u);
        });
      for (auto& t : pool) t.join();
    }
    for (size_t u = 0; u < units.size(); ++u) {
      nodes += results[u].nodes;
      truncated = truncated || results[u].truncated;
      if (results[u].best > best && results[u].witness) {
        best = results[u].best;
        witness = results[u].witness;
      }
    }
  }

  rec.max_edges = std::max(0, best);
  if (witness) rec.witness = std::move(*witness);
  rec.nodes = nodes;
  rec.proof_of_optimality = !truncated;
  rec.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return rec;
}

std::string extremal_tsv_header() {
  return "n\tpattern\tmax_edges\tproof\tnodes\tseconds\n";
}

std::string extremal_tsv_row(const ExtremalRecord& rec) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%u\t%s\t%d\t%d\t%lld\t%.3f\n", rec.n,
                rec.forbidden ? to_string(*rec.forbidden) : "none", rec.max_edges,
                rec.proof_of_optimality ? 1 : 0, rec.nodes, rec.seconds);
  return buf;
}

std::optional<std::string> check_witness(const ExtremalRecord& rec) {
  if (rec.witness.vertex_count() != rec.n) return "witness vertex count differs from n";
  if (static_cast<long long>(rec.witness.edge_count()) != rec.max_edges)
    return "witness edge count differs from max_edges";
  if (auto bad = validate(rec.witness)) return "witness invalid: " + bad->detail;
  if (rec.forbidden && contains_pattern(rec.witness, *rec.forbidden))
    return "witness contains the forbidden pattern";
  return std::nullopt;
}

}  // namespace wicket
