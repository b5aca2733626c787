#include "wicket/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>

namespace wicket {

namespace {

constexpr int kMaxSupport = 16;

// Iterated degree refinement. Colors are assigned by sorted signature rank,
// so they depend only on structure, never on vertex labels; isomorphic
// systems therefore get matching color classes.
std::vector<int> refine_colors(int s, const std::vector<std::array<int, 3>>& edges,
                               const std::vector<std::vector<int>>& at) {
  if (s == 0) return {};
  std::vector<int> color(s, 0);
  for (int v = 0; v < s; ++v) color[v] = static_cast<int>(at[v].size());
  for (;;) {
    // Signature: own color plus the multiset of co-vertex color pairs.
    std::vector<std::vector<int>> sig(s);
    for (int v = 0; v < s; ++v) {
      sig[v].push_back(color[v]);
      std::vector<std::pair<int, int>> others;
      for (int ei : at[v]) {
        std::array<int, 2> oc{};
        int k = 0;
        for (int x : edges[ei]) {
          if (x != v) oc[k++] = color[x];
        }
        others.emplace_back(std::min(oc[0], oc[1]), std::max(oc[0], oc[1]));
      }
      std::sort(others.begin(), others.end());
      for (auto& [a, b] : others) {
        sig[v].push_back(a);
        sig[v].push_back(b);
      }
    }
    std::map<std::vector<int>, int> rank;
    for (int v = 0; v < s; ++v) rank[sig[v]] = 0;
    int next = 0;
    for (auto& [k, r] : rank) r = next++;
    std::vector<int> fresh(s);
    for (int v = 0; v < s; ++v) fresh[v] = rank[sig[v]];
    // Own color leads the signature, so classes only ever split; equal class
    // counts mean a fixed point.
    const int old_classes = 1 + *std::max_element(color.begin(), color.end());
    if (next == old_classes) return color;
    color = std::move(fresh);
  }
}

// Finds the label assignment minimizing the colex-sorted code list among all
// permutations that keep each color class in its own label block. Codes pack
// a relabeled triple as (max<<8)|(mid<<4)|min, so integer order on codes is
// colex order on triples, and every triple completed at label L has code in
// [L<<8, (L+1)<<8). That makes the completed codes after assigning labels
// 0..L exactly the candidate list's prefix below (L+1)<<8, which is what the
// prefix pruning below compares.
struct Minimizer {
  int s = 0;
  std::vector<std::array<int, 3>> edges;
  std::vector<std::vector<int>> at;
  std::vector<int> cell_of_label;
  std::vector<std::vector<int>> cell_members;

  std::vector<int> label_of;
  std::vector<std::uint16_t> partial;
  std::vector<std::uint16_t> best;
  bool have_best = false;

  void run() {
    label_of.assign(s, -1);
    partial.clear();
    best.clear();
    have_best = false;
    dfs(0, false);
  }

  void dfs(int lbl, bool winning) {
    if (lbl == s) {
      if (!have_best || winning) {
        best = partial;
        have_best = true;
      }
      return;
    }
    std::vector<int> candidates;
    for (int v : cell_members[cell_of_label[lbl]]) {
      if (label_of[v] < 0) candidates.push_back(v);
    }
    // Try vertices that close edges first; good leaves found early tighten
    // the bound. Pure heuristic, the minimum is unaffected.
    std::vector<std::pair<int, int>> order;
    for (int v : candidates) {
      int closes = 0;
      for (int ei : edges_completed_by(v)) {
        (void)ei;
        ++closes;
      }
      order.emplace_back(-closes, v);
    }
    std::sort(order.begin(), order.end());

    for (auto [neg, v] : order) {
      (void)neg;
      label_of[v] = lbl;
      const std::size_t mark = partial.size();
      std::vector<std::uint16_t> fresh;
      for (int ei : edges_completed_by_labeled(v)) {
        int a = -1, b = -1;
        for (int x : edges[ei]) {
          if (x == v) continue;
          (a < 0 ? a : b) = label_of[x];
        }
        if (a > b) std::swap(a, b);
        fresh.push_back(static_cast<std::uint16_t>((lbl << 8) | (b << 4) | a));
      }
      std::sort(fresh.begin(), fresh.end());

      bool prune = false;
      bool win = winning;
      for (std::uint16_t code : fresh) {
        partial.push_back(code);
        if (!have_best || win) continue;
        const std::size_t i = partial.size() - 1;
        if (code < best[i]) {
          win = true;
        } else if (code > best[i]) {
          prune = true;
          break;
        }
      }
      if (!prune && have_best && !win) {
        // Candidate is still tied element-wise. If best holds more codes
        // below the next label boundary, the candidate's next code exceeds
        // best's at that index, so the branch cannot win.
        const std::uint16_t bound = static_cast<std::uint16_t>((lbl + 1) << 8);
        const auto cnt = static_cast<std::size_t>(
            std::lower_bound(best.begin(), best.end(), bound) - best.begin());
        if (partial.size() < cnt) prune = true;
      }
      if (!prune) dfs(lbl + 1, win);
      partial.resize(mark);
      label_of[v] = -1;
    }
  }

  // Edges at v whose other two vertices are already labeled. The first
  // variant is called before assigning v (heuristic), the second after.
  std::vector<int> edges_completed_by(int v) const {
    std::vector<int> out;
    for (int ei : at[v]) {
      bool all = true;
      for (int x : edges[ei]) {
        if (x != v && label_of[x] < 0) all = false;
      }
      if (all) out.push_back(ei);
    }
    return out;
  }
  std::vector<int> edges_completed_by_labeled(int v) const { return edges_completed_by(v); }
};

}  // namespace

std::string CanonicalForm::key() const {
  std::ostringstream os;
  os << n << ':' << support;
  for (const TripleEdge& e : edges) os << ':' << e.v[0] << ',' << e.v[1] << ',' << e.v[2];
  return os.str();
}

CanonicalForm canonical_form(const LinearTripleSystem& sys) {
  std::vector<VertexId> support;
  for (VertexId v = 0; v < sys.vertex_count(); ++v) {
    if (sys.degree(v) > 0) support.push_back(v);
  }
  if (support.size() > kMaxSupport) {
    std::ostringstream os;
    os << "canonical_form supports at most " << kMaxSupport << " non-isolated vertices, got "
       << support.size();
    throw SizeLimitExceeded(os.str());
  }

  const int s = static_cast<int>(support.size());
  std::vector<int> index_of(sys.vertex_count(), -1);
  for (int i = 0; i < s; ++i) index_of[support[i]] = i;

  Minimizer m;
  m.s = s;
  m.edges.reserve(sys.edge_count());
  m.at.assign(s, {});
  for (EdgeId id = 0; id < sys.edge_count(); ++id) {
    const TripleEdge& e = sys.edge(id);
    std::array<int, 3> t{index_of[e.v[0]], index_of[e.v[1]], index_of[e.v[2]]};
    for (int x : t) m.at[x].push_back(static_cast<int>(m.edges.size()));
    m.edges.push_back(t);
  }

  const std::vector<int> color = refine_colors(s, m.edges, m.at);
  // Labels are handed out color class by color class; class ids are
  // structural, so isomorphic systems search the same label blocks.
  const int classes = s == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
  m.cell_members.assign(classes, {});
  for (int v = 0; v < s; ++v) m.cell_members[color[v]].push_back(v);
  m.cell_of_label.clear();
  for (int c = 0; c < classes; ++c) {
    for (std::size_t i = 0; i < m.cell_members[c].size(); ++i) m.cell_of_label.push_back(c);
  }

  m.run();

  CanonicalForm out;
  out.n = sys.vertex_count();
  out.support = static_cast<VertexId>(s);
  for (std::uint16_t code : m.best) {
    const VertexId lo = code & 0xf;
    const VertexId mid = (code >> 4) & 0xf;
    const VertexId hi = code >> 8;
    out.edges.push_back(TripleEdge{{lo, mid, hi}});
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool are_isomorphic(const LinearTripleSystem& a, const LinearTripleSystem& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace wicket
