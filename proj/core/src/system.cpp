#include "wicket/system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wicket {

namespace {

constexpr VertexId kDenseThreshold = 4096;

std::uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

std::optional<TripleEdge> TripleEdge::make(VertexId a, VertexId b, VertexId c) {
  TripleEdge e{{a, b, c}};
  std::sort(e.v.begin(), e.v.end());
  if (e.v[0] == e.v[1] || e.v[1] == e.v[2]) return std::nullopt;
  return e;
}

int TripleEdge::overlap(const TripleEdge& other) const {
  int k = 0;
  for (VertexId x : v) k += other.contains(x) ? 1 : 0;
  return k;
}

VertexId TripleEdge::third_vertex(VertexId a, VertexId b) const {
  for (VertexId x : v) {
    if (x != a && x != b) return x;
  }
  return v[0];
}

const char* to_string(AddError e) {
  switch (e) {
    case AddError::VertexOutOfRange: return "vertex out of range";
    case AddError::DegenerateTriple: return "degenerate triple";
    case AddError::DuplicateEdge: return "duplicate edge";
    case AddError::LinearityViolation: return "two edges share two vertices";
  }
  return "unknown";
}

LinearTripleSystem::LinearTripleSystem(VertexId n) : n_(n), incidence_(n) {
  dense_ = n < kDenseThreshold;
  if (dense_ && n >= 2) {
    dense_pairs_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, kNoEdge);
  }
}

std::size_t LinearTripleSystem::dense_index(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  // Row u of the strict upper triangle starts after sum_{i<u} (n-1-i)
  // = u(n-1) - u(u-1)/2 earlier cells.
  const std::size_t n = n_;
  return static_cast<std::size_t>(u) * (n - 1) - static_cast<std::size_t>(u) * (u - 1) / 2 +
         (v - u - 1);
}

EdgeId LinearTripleSystem::pair_lookup(VertexId u, VertexId v) const {
  if (dense_) return dense_pairs_[dense_index(u, v)];
  auto it = sparse_pairs_.find(pair_key(u, v));
  return it == sparse_pairs_.end() ? kNoEdge : it->second;
}

void LinearTripleSystem::pair_store(VertexId u, VertexId v, EdgeId id) {
  if (dense_) {
    dense_pairs_[dense_index(u, v)] = id;
  } else {
    sparse_pairs_[pair_key(u, v)] = id;
  }
}

void LinearTripleSystem::pair_erase(VertexId u, VertexId v) {
  if (dense_) {
    dense_pairs_[dense_index(u, v)] = kNoEdge;
  } else {
    sparse_pairs_.erase(pair_key(u, v));
  }
}

std::optional<AddError> LinearTripleSystem::can_add(VertexId a, VertexId b, VertexId c) const {
  if (a >= n_ || b >= n_ || c >= n_) return AddError::VertexOutOfRange;
  auto e = TripleEdge::make(a, b, c);
  if (!e) return AddError::DegenerateTriple;
  const int hits = (pair_lookup(e->v[0], e->v[1]) != kNoEdge ? 1 : 0) +
                   (pair_lookup(e->v[0], e->v[2]) != kNoEdge ? 1 : 0) +
                   (pair_lookup(e->v[1], e->v[2]) != kNoEdge ? 1 : 0);
  if (hits == 0) return std::nullopt;
  // All three pairs already covered by one edge means this exact triple
  // exists; any covered pair otherwise is a second edge sharing two vertices.
  if (hits == 3) {
    const EdgeId e01 = pair_lookup(e->v[0], e->v[1]);
    if (e01 == pair_lookup(e->v[0], e->v[2]) && e01 == pair_lookup(e->v[1], e->v[2])) {
      return AddError::DuplicateEdge;
    }
  }
  return AddError::LinearityViolation;
}

std::optional<AddError> LinearTripleSystem::add_edge(VertexId a, VertexId b, VertexId c) {
  if (auto err = can_add(a, b, c)) return err;
  const TripleEdge e = *TripleEdge::make(a, b, c);
  const EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(e);
  for (VertexId x : e.v) incidence_[x].push_back(id);
  pair_store(e.v[0], e.v[1], id);
  pair_store(e.v[0], e.v[2], id);
  pair_store(e.v[1], e.v[2], id);
  return std::nullopt;
}

EdgeId LinearTripleSystem::must_add(VertexId a, VertexId b, VertexId c) {
  if (auto err = add_edge(a, b, c)) {
    std::ostringstream os;
    os << "must_add(" << a << ", " << b << ", " << c << "): " << to_string(*err);
    throw std::invalid_argument(os.str());
  }
  return static_cast<EdgeId>(edges_.size() - 1);
}

void LinearTripleSystem::remove_last_edge() {
  if (edges_.empty()) throw std::logic_error("remove_last_edge on empty system");
  const EdgeId id = static_cast<EdgeId>(edges_.size() - 1);
  const TripleEdge e = edges_.back();
  edges_.pop_back();
  for (VertexId x : e.v) {
    // The last-added edge is the last entry of each incidence list it touches.
    incidence_[x].pop_back();
    (void)id;
  }
  pair_erase(e.v[0], e.v[1]);
  pair_erase(e.v[0], e.v[2]);
  pair_erase(e.v[1], e.v[2]);
}

std::optional<EdgeId> LinearTripleSystem::edge_containing_pair(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_ || u == v) return std::nullopt;
  const EdgeId id = pair_lookup(u, v);
  if (id == kNoEdge) return std::nullopt;
  return id;
}

bool LinearTripleSystem::operator==(const LinearTripleSystem& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  std::vector<TripleEdge> a = edges_;
  std::vector<TripleEdge> b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::optional<Violation> validate(const LinearTripleSystem& sys) {
  std::set<TripleEdge> seen;
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (EdgeId id = 0; id < sys.edge_count(); ++id) {
    const TripleEdge& e = sys.edge(id);
    std::ostringstream os;
    os << "edge " << id << " {" << e.v[0] << "," << e.v[1] << "," << e.v[2] << "}";
    if (e.v[2] >= sys.vertex_count()) {
      return Violation{AddError::VertexOutOfRange, os.str()};
    }
    if (e.v[0] == e.v[1] || e.v[1] == e.v[2]) {
      return Violation{AddError::DegenerateTriple, os.str()};
    }
    if (!seen.insert(e).second) {
      return Violation{AddError::DuplicateEdge, os.str()};
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (!pairs.insert({e.v[i], e.v[j]}).second) {
          os << " re-covers pair {" << e.v[i] << "," << e.v[j] << "}";
          return Violation{AddError::LinearityViolation, os.str()};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace wicket
