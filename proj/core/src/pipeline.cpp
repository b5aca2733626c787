#include "wicket/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "wicket/errors.hpp"

namespace wicket {
namespace {

// Builds the embedding from explicit row and column edges, checking every
// wicket requirement directly: rows pairwise disjoint, each column meeting
// each row in exactly one vertex, and each column consisting of exactly
// its three row intersections.
std::optional<WicketEmbedding> assemble_wicket(const LinearTripleSystem& sys,
                                               std::array<EdgeId, 3> rows,
                                               std::array<EdgeId, 2> cols) {
  std::array<EdgeId, 5> ids = {rows[0], rows[1], rows[2], cols[0], cols[1]};
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return std::nullopt;

  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  WicketEmbedding emb;
  emb.rows = rows;
  emb.cols = cols;
  for (int i = 0; i < 3; ++i) {
    const TripleEdge& r = sys.edge(rows[i]);
    for (int k = i + 1; k < 3; ++k)
      if (r.overlap(sys.edge(rows[k])) != 0) return std::nullopt;
    for (int j = 0; j < 2; ++j) {
      const TripleEdge& c = sys.edge(cols[j]);
      VertexId common = 0;
      int hits = 0;
      for (VertexId v : r.v)
        if (c.contains(v)) {
          common = v;
          ++hits;
        }
      if (hits != 1) return std::nullopt;
      emb.matrix[i][j] = common;
    }
    if (emb.matrix[i][0] == emb.matrix[i][1]) return std::nullopt;
    for (VertexId v : r.v)
      if (v != emb.matrix[i][0] && v != emb.matrix[i][1]) emb.privates[i] = v;
  }
  if (sys.edge(cols[0]).overlap(sys.edge(cols[1])) != 0) return std::nullopt;
  for (int j = 0; j < 2; ++j) {
    const TripleEdge& c = sys.edge(cols[j]);
    for (int i = 0; i < 3; ++i)
      if (!c.contains(emb.matrix[i][j])) return std::nullopt;
  }
  if (validate_embedding(sys, emb)) return std::nullopt;
  return emb;
}

struct RoundOutput {
  RoundTrace trace;
  std::optional<WicketEmbedding> embedding;  // original edge ids
};

RoundOutput run_round(const LinearTripleSystem& sys, uint64_t round_seed,
                      const std::optional<PartitionLabels>& override_labels, bool second_route) {
  RoundOutput out;
  RoundTrace& tr = out.trace;
  SeededRng part_rng(derive_seed(round_seed, 1));
  SeededRng half_rng(derive_seed(round_seed, 2));
  SeededRng match_rng(derive_seed(round_seed, 3));

  PartitionLabels labels =
      override_labels ? *override_labels : random_tripartition(sys.vertex_count(), part_rng);
  TripartiteReduction red = reduce_to_transversal(sys, std::move(labels));
  tr.transversal_edges = static_cast<int>(red.reduced.edge_count());
  Halving halving = halve_classes(red.labels, half_rng);
  std::vector<EligibleConfig> configs = eligible_configs(red, halving);
  tr.eligible = static_cast<int>(configs.size());
  if (configs.empty()) return out;

  if (!second_route) {
    const std::vector<VertexId> left = half_members(red.labels, halving, 1, 1);
    const std::vector<VertexId> right = half_members(red.labels, halving, 3, 1);
    if (left.empty() || right.empty()) return out;
    const Matching matching = uniform_matching(left, right, match_rng);
    tr.matching_size = static_cast<int>(matching.pairs.size());
    const std::vector<AuxEdge> aux = build_aux_graph(red, halving, configs, matching);
    tr.aux_edges = static_cast<int>(aux.size());
    const MatchingDecomposition gm = decompose_matchings(aux);
    tr.groups = static_cast<int>(gm.groups.size());
    for (const NonInducedHit& hit : non_induced_hits(aux, gm)) {
      ++tr.candidates;
      if (auto emb = extract_wicket_from_hit(red, configs, aux, hit)) {
        tr.success = true;
        out.embedding = map_to_source(red, *emb);
        return out;
      }
    }
  } else {
    const QuadSystem quads = build_quad_system(std::move(configs));
    for_each_k43(quads, [&](const K43Hit& hit) {
      ++tr.candidates;
      if (auto emb = extract_wicket_from_k43(red, quads, hit)) {
        tr.success = true;
        out.embedding = map_to_source(red, *emb);
        return true;
      }
      return false;
    });
  }
  return out;
}

SimulationResult simulate(const LinearTripleSystem& sys, const SimulateOptions& opts,
                          bool second_route) {
  if (opts.class_override) {
    const auto& c = opts.class_override->class_of;
    if (c.size() != sys.vertex_count())
      throw std::invalid_argument("class override must label every vertex");
    for (uint8_t v : c)
      if (v < 1 || v > 3) throw std::invalid_argument("class labels must be 1, 2, or 3");
  }
  SimulationResult result;
  const int rounds = std::max(0, opts.rounds);
  const int threads = std::max(1, opts.threads);
  for (int base = 0; base < rounds && !result.success; base += threads) {
    const int batch = std::min(threads, rounds - base);
    std::vector<RoundOutput> outs(batch);
    auto work = [&](int slot) {
      outs[slot] =
          run_round(sys, derive_seed(opts.seed, static_cast<uint64_t>(base + slot)),
                    opts.class_override, second_route);
      outs[slot].trace.round = base + slot;
    };
    if (batch == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(batch);
      for (int slot = 0; slot < batch; ++slot) pool.emplace_back(work, slot);
      for (auto& t : pool) t.join();
    }
    for (int slot = 0; slot < batch && !result.success; ++slot) {
      result.traces.push_back(outs[slot].trace);
      if (outs[slot].trace.success) {
        result.success = true;
        result.winning_round = base + slot;
        result.embedding = outs[slot].embedding;
        if (auto bad = validate_embedding(sys, *result.embedding))
          throw std::logic_error("round produced an invalid embedding: " + bad->detail);
      }
    }
  }
  result.rounds_run = static_cast<int>(result.traces.size());
  return result;
}

}  // namespace

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

int compare(const Rational& lhs, const Rational& rhs) {
  const __int128 a = static_cast<__int128>(lhs.num) * rhs.den;
  const __int128 b = static_cast<__int128>(rhs.num) * lhs.den;
  if (a < b) return -1;
  if (a > b) return 1;
  return 0;
}

Rational matching_hit_probability(int s, int k) {
  if (s < 1) throw std::invalid_argument("side size must be positive");
  if (s > 12) throw SizeLimitExceeded("matching_hit_probability: side size over 12");
  if (k < 0 || k > s) throw std::invalid_argument("pair count must lie in [0, s]");
  if (k == 0) return Rational{0, 1};
  long long s_fact = 1;
  for (int i = 2; i <= s; ++i) s_fact *= i;
  // Inclusion-exclusion over which of the k pairs the matching contains:
  // j fixed pairs leave (s-j)! completions.
  long long num = 0;
  long long binom = 1;
  long long fall = s_fact;
  for (int j = 1; j <= k; ++j) {
    binom = binom * (k - j + 1) / j;
    fall /= (s - j + 1);
    const long long term = binom * fall;
    num += (j % 2 == 1) ? term : -term;
  }
  return make_rational(num, s_fact);
}

PartitionLabels random_tripartition(VertexId n, SeededRng& rng) {
  PartitionLabels labels;
  labels.class_of.resize(n);
  for (VertexId v = 0; v < n; ++v)
    labels.class_of[v] = static_cast<uint8_t>(1 + rng.below(3));
  return labels;
}

TripartiteReduction reduce_to_transversal(const LinearTripleSystem& sys,
                                          PartitionLabels labels) {
  if (labels.class_of.size() != sys.vertex_count())
    throw std::invalid_argument("labels must cover every vertex");
  for (uint8_t c : labels.class_of)
    if (c < 1 || c > 3) throw std::invalid_argument("class labels must be 1, 2, or 3");
  TripartiteReduction red;
  red.reduced = LinearTripleSystem(sys.vertex_count());
  red.labels = std::move(labels);
  for (EdgeId e = 0; e < sys.edge_count(); ++e) {
    const TripleEdge& t = sys.edge(e);
    const int c0 = red.labels.class_of[t.v[0]];
    const int c1 = red.labels.class_of[t.v[1]];
    const int c2 = red.labels.class_of[t.v[2]];
    if (c0 + c1 + c2 == 6 && c0 != c1 && c0 != c2 && c1 != c2) {
      red.reduced.must_add(t.v[0], t.v[1], t.v[2]);
      red.source_edge.push_back(e);
    }
  }
  return red;
}

Halving halve_classes(const PartitionLabels& labels, SeededRng& rng) {
  Halving halving;
  halving.half_of.assign(labels.class_of.size(), 0);
  for (int cls = 1; cls <= 3; ++cls) {
    std::vector<VertexId> members;
    for (VertexId v = 0; v < labels.class_of.size(); ++v)
      if (labels.class_of[v] == cls) members.push_back(v);
    rng.shuffle(members);
    const std::size_t primes = (members.size() + 1) / 2;
    for (std::size_t i = 0; i < members.size(); ++i)
      halving.half_of[members[i]] = (i < primes) ? 1 : 2;
  }
  return halving;
}

std::vector<VertexId> half_members(const PartitionLabels& labels, const Halving& halving,
                                   int cls, int half) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < labels.class_of.size(); ++v)
    if (labels.class_of[v] == cls && halving.half_of[v] == half) out.push_back(v);
  return out;
}

Matching uniform_matching(const std::vector<VertexId>& left,
                          const std::vector<VertexId>& right, SeededRng& rng) {
  if (left.empty() || right.empty())
    throw EmptySideError("matching requested with an empty side");
  std::vector<VertexId> l = left;
  std::vector<VertexId> r = right;
  rng.shuffle(l);
  rng.shuffle(r);
  Matching m;
  const std::size_t s = std::min(l.size(), r.size());
  m.pairs.reserve(s);
  for (std::size_t i = 0; i < s; ++i) m.pairs.push_back({l[i], r[i]});
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

std::vector<EligibleConfig> eligible_configs(const TripartiteReduction& red,
                                             const Halving& halving) {
  const auto& cls = red.labels.class_of;
  const auto& half = halving.half_of;
  std::vector<EligibleConfig> out;
  enumerate_63(red.reduced, [&](const SixThreeConfig& sc) {
    EligibleConfig cfg;
    // The three shared vertices land in three distinct classes because
    // every edge here is transversal; same for the three private ones.
    // deg2[j] is the vertex missing from edges[2 - j].
    bool ok = true;
    for (int j = 0; j < 3 && ok; ++j) {
      const VertexId v = sc.deg2[j];
      const EdgeId away = sc.edges[2 - j];
      switch (cls[v]) {
        case 1:
          if (half[v] != 2) ok = false;
          cfg.t1 = v;
          cfg.ea = away;
          break;
        case 2:
          cfg.y = v;
          cfg.ec = away;
          break;
        default:
          if (half[v] != 2) ok = false;
          cfg.t3 = v;
          cfg.ed = away;
          break;
      }
    }
    for (int i = 0; i < 3 && ok; ++i) {
      const VertexId v = sc.deg1[i];
      switch (cls[v]) {
        case 1:
          if (half[v] != 1) ok = false;
          cfg.d1 = v;
          break;
        case 2:
          cfg.x = v;
          break;
        default:
          if (half[v] != 1) ok = false;
          cfg.d3 = v;
          break;
      }
    }
    if (ok) out.push_back(cfg);
    return true;
  });
  return out;
}

std::vector<AuxEdge> build_aux_graph(const TripartiteReduction& red, const Halving& halving,
                                     const std::vector<EligibleConfig>& configs,
                                     const Matching& matching) {
  const auto& cls = red.labels.class_of;
  const auto& half = halving.half_of;
  std::set<VertexId> seen_left, seen_right;
  std::map<std::pair<VertexId, VertexId>, std::size_t> pair_index;
  for (std::size_t i = 0; i < matching.pairs.size(); ++i) {
    const auto [u, v] = matching.pairs[i];
    if (u >= cls.size() || cls[u] != 1 || half[u] != 1)
      throw NotAMatchingError("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                              "): left endpoint is not a class-1 prime vertex");
    if (v >= cls.size() || cls[v] != 3 || half[v] != 1)
      throw NotAMatchingError("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                              "): right endpoint is not a class-3 prime vertex");
    if (!seen_left.insert(u).second || !seen_right.insert(v).second)
      throw NotAMatchingError("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                              "): endpoint reused");
    pair_index[{u, v}] = i;
  }
  std::map<std::pair<VertexId, VertexId>, AuxEdge> dedup;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const EligibleConfig& cfg = configs[c];
    auto it = pair_index.find({cfg.d1, cfg.d3});
    if (it == pair_index.end()) continue;
    dedup.try_emplace({cfg.t1, cfg.t3}, AuxEdge{cfg.t1, cfg.t3, c, it->second});
  }
  std::vector<AuxEdge> aux;
  aux.reserve(dedup.size());
  for (auto& [key, edge] : dedup) aux.push_back(edge);
  return aux;
}

MatchingDecomposition decompose_matchings(const std::vector<AuxEdge>& aux) {
  MatchingDecomposition gm;
  for (std::size_t i = 0; i < aux.size(); ++i) {
    bool placed = false;
    for (auto& group : gm.groups) {
      bool clash = false;
      for (std::size_t j : group)
        if (aux[j].t1 == aux[i].t1 || aux[j].t3 == aux[i].t3) {
          clash = true;
          break;
        }
      if (!clash) {
        group.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) gm.groups.push_back({i});
  }
  return gm;
}

std::vector<NonInducedHit> non_induced_hits(const std::vector<AuxEdge>& aux,
                                            const MatchingDecomposition& gm) {
  std::map<std::pair<VertexId, VertexId>, std::size_t> index;
  for (std::size_t i = 0; i < aux.size(); ++i) index[{aux[i].t1, aux[i].t3}] = i;
  std::vector<NonInducedHit> hits;
  for (std::size_t g = 0; g < gm.groups.size(); ++g) {
    const auto& group = gm.groups[g];
    for (std::size_t p = 0; p < group.size(); ++p) {
      for (std::size_t q = p + 1; q < group.size(); ++q) {
        for (auto [ia, ib] : {std::pair{group[p], group[q]}, std::pair{group[q], group[p]}}) {
          if (aux[ia].pair != aux[ib].pair) continue;
          auto it = index.find({aux[ia].t1, aux[ib].t3});
          if (it == index.end()) continue;
          hits.push_back(NonInducedHit{g, ia, ib, it->second});
        }
      }
    }
  }
  return hits;
}

std::optional<WicketEmbedding> extract_wicket_from_hit(
    const TripartiteReduction& red, const std::vector<EligibleConfig>& configs,
    const std::vector<AuxEdge>& aux, const NonInducedHit& hit) {
  const AuxEdge& a = aux[hit.a];
  const AuxEdge& b = aux[hit.b];
  const EligibleConfig& ka = configs[a.config];
  const EligibleConfig& kb = configs[b.config];
  const auto mid = red.reduced.edge_containing_pair(a.t1, b.t3);
  if (!mid) return std::nullopt;
  return assemble_wicket(red.reduced, {ka.ea, *mid, kb.ed}, {ka.ed, kb.ea});
}

QuadSystem build_quad_system(std::vector<EligibleConfig> configs) {
  QuadSystem qs;
  qs.configs = std::move(configs);
  for (std::size_t i = 0; i < qs.configs.size(); ++i) {
    const EligibleConfig& c = qs.configs[i];
    qs.missing_d1[{c.t1, c.d3, c.t3}].push_back(i);
    qs.missing_t1[{c.d1, c.d3, c.t3}].push_back(i);
    qs.missing_d3[{c.d1, c.t1, c.t3}].push_back(i);
    qs.missing_t3[{c.d1, c.t1, c.d3}].push_back(i);
  }
  return qs;
}

void for_each_k43(const QuadSystem& quads,
                  const std::function<bool(const K43Hit&)>& visit) {
  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> by_corner;
  for (std::size_t i = 0; i < quads.configs.size(); ++i)
    by_corner[{quads.configs[i].d1, quads.configs[i].t1}].push_back(i);
  for (const auto& [corner, members] : by_corner) {
    const auto [a, b] = corner;
    for (std::size_t id : members) {
      for (std::size_t ic : members) {
        if (id == ic) continue;
        const VertexId c = quads.configs[id].d3;
        const VertexId d = quads.configs[ic].t3;
        if (quads.configs[id].t3 == d || quads.configs[ic].d3 == c) continue;
        const auto bt = quads.missing_t1.find({a, c, d});
        if (bt == quads.missing_t1.end()) continue;
        const auto at = quads.missing_d1.find({b, c, d});
        if (at == quads.missing_d1.end()) continue;
        std::size_t cb = quads.configs.size();
        for (std::size_t cand : bt->second)
          if (quads.configs[cand].t1 != b) {
            cb = cand;
            break;
          }
        if (cb == quads.configs.size()) continue;
        std::size_t ca = quads.configs.size();
        for (std::size_t cand : at->second)
          if (quads.configs[cand].d1 != a) {
            ca = cand;
            break;
          }
        if (ca == quads.configs.size()) continue;
        if (visit(K43Hit{a, b, c, d, ca, cb, ic, id})) return;
      }
    }
  }
}

std::optional<WicketEmbedding> extract_wicket_from_k43(const TripartiteReduction& red,
                                                       const QuadSystem& quads,
                                                       const K43Hit& hit) {
  const VertexId fresh_t1 = quads.configs[hit.cb].t1;
  const VertexId fresh_t3 = quads.configs[hit.cd].t3;
  const auto r0 = red.reduced.edge_containing_pair(fresh_t1, hit.c);
  const auto r1 = red.reduced.edge_containing_pair(hit.a, fresh_t3);
  const auto r2 = red.reduced.edge_containing_pair(hit.b, hit.d);
  const auto c0 = red.reduced.edge_containing_pair(hit.a, hit.d);
  const auto c1 = red.reduced.edge_containing_pair(hit.b, hit.c);
  if (!r0 || !r1 || !r2 || !c0 || !c1) return std::nullopt;
  return assemble_wicket(red.reduced, {*r0, *r1, *r2}, {*c0, *c1});
}

WicketEmbedding map_to_source(const TripartiteReduction& red, WicketEmbedding emb) {
  for (EdgeId& e : emb.rows) e = red.source_edge[e];
  for (EdgeId& e : emb.cols) e = red.source_edge[e];
  return emb;
}

SimulationResult simulate_proof1(const LinearTripleSystem& sys, const SimulateOptions& opts) {
  return simulate(sys, opts, false);
}

SimulationResult simulate_proof2(const LinearTripleSystem& sys, const SimulateOptions& opts) {
  return simulate(sys, opts, true);
}

}  // namespace wicket
