#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace wicket {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = 0xffffffffu;

// A 3-element vertex set, stored sorted ascending.
struct TripleEdge {
  std::array<VertexId, 3> v{};

  // Sorts the inputs; empty when the three vertices are not distinct.
  static std::optional<TripleEdge> make(VertexId a, VertexId b, VertexId c);

  bool contains(VertexId x) const { return v[0] == x || v[1] == x || v[2] == x; }

  // Number of shared vertices with another triple (0..3).
  int overlap(const TripleEdge& other) const;

  // The vertex that is neither a nor b; requires both to be members.
  VertexId third_vertex(VertexId a, VertexId b) const;

  auto operator<=>(const TripleEdge&) const = default;
};

enum class AddError {
  VertexOutOfRange,
  DegenerateTriple,
  DuplicateEdge,
  LinearityViolation,
};

const char* to_string(AddError e);

// 3-uniform hypergraph on vertices 0..n-1 in which any two edges share at
// most one vertex. The pairwise-intersection bound is a class invariant:
// add_edge refuses any triple that would break it, so every reachable state
// is linear. Edges keep insertion order; EdgeId is the insertion index.
class LinearTripleSystem {
 public:
  explicit LinearTripleSystem(VertexId n);

  VertexId vertex_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const TripleEdge& edge(EdgeId id) const { return edges_[id]; }
  const std::vector<TripleEdge>& edges() const { return edges_; }

  // Why the triple {a,b,c} cannot be added, or empty when it can.
  std::optional<AddError> can_add(VertexId a, VertexId b, VertexId c) const;

  // Adds the triple when legal; returns the obstruction otherwise.
  std::optional<AddError> add_edge(VertexId a, VertexId b, VertexId c);

  // add_edge that throws std::invalid_argument on failure; for fixtures and
  // generators whose constructions are provably legal.
  EdgeId must_add(VertexId a, VertexId b, VertexId c);

  // Undo for backtracking search. Only the most recent edge can be removed,
  // which keeps the pair index update O(1) and EdgeIds stable.
  void remove_last_edge();

  // The unique edge through both u and v, if any.
  std::optional<EdgeId> edge_containing_pair(VertexId u, VertexId v) const;

  // Ids of edges incident to v, in insertion order.
  const std::vector<EdgeId>& edges_at(VertexId v) const { return incidence_[v]; }
  std::size_t degree(VertexId v) const { return incidence_[v].size(); }

  // Number of unordered vertex pairs covered by some edge (= 3 * edge_count).
  std::size_t covered_pairs() const { return 3 * edges_.size(); }

  // Equal vertex count and equal edge sets; insertion order is ignored.
  bool operator==(const LinearTripleSystem& other) const;

 private:
  EdgeId pair_lookup(VertexId u, VertexId v) const;
  void pair_store(VertexId u, VertexId v, EdgeId id);
  void pair_erase(VertexId u, VertexId v);
  std::size_t dense_index(VertexId u, VertexId v) const;

  VertexId n_ = 0;
  std::vector<TripleEdge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  // Pair -> edge map. Dense triangular array for small n, hash map above
  // the threshold so vertex counts in the millions stay usable.
  bool dense_ = false;
  std::vector<EdgeId> dense_pairs_;
  std::unordered_map<std::uint64_t, EdgeId> sparse_pairs_;
};

struct Violation {
  AddError kind;
  std::string detail;
};

// Re-derives all class invariants from the raw edge list. Returns the first
// violation found, scanning edges in id order.
std::optional<Violation> validate(const LinearTripleSystem& sys);

}  // namespace wicket
