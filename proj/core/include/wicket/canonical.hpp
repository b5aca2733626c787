#pragma once

#include <string>
#include <vector>

#include "wicket/errors.hpp"
#include "wicket/system.hpp"

namespace wicket {

// Isomorphism-invariant normal form. Two systems have equal canonical forms
// exactly when some vertex bijection maps one edge set onto the other.
// Isolated vertices cannot affect edge structure, so only the support is
// relabeled; n keeps systems of different order distinct.
struct CanonicalForm {
  VertexId n = 0;
  VertexId support = 0;             // non-isolated vertex count
  std::vector<TripleEdge> edges;    // on labels 0..support-1, sorted

  auto operator<=>(const CanonicalForm&) const = default;

  // Compact stable serialization, usable as a set/map key.
  std::string key() const;
};

// Throws SizeLimitExceeded when more than 16 vertices carry edges; the
// minimization packs labels into 4 bits and is exact only in that range.
CanonicalForm canonical_form(const LinearTripleSystem& sys);

bool are_isomorphic(const LinearTripleSystem& a, const LinearTripleSystem& b);

}  // namespace wicket
