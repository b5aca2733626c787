#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "wicket/system.hpp"

namespace wicket {

enum class Pattern { wicket, grid, six_three, berge_c4 };

const char* to_string(Pattern p);
std::optional<Pattern> pattern_from_string(std::string_view name);

// Three pairwise disjoint rows crossed by two disjoint columns, every row
// meeting every column. matrix[i][j] is the vertex rows[i] shares with
// cols[j]; privates[i] is the row vertex on neither column. Rows and the
// column pair are listed in ascending edge id order.
struct WicketEmbedding {
  std::array<EdgeId, 3> rows{};
  std::array<EdgeId, 2> cols{};
  std::array<std::array<VertexId, 2>, 3> matrix{};
  std::array<VertexId, 3> privates{};
};

// A wicket whose three private vertices lie on one further edge, giving
// three rows and three columns that pairwise meet: dual parallel classes.
struct GridEmbedding {
  WicketEmbedding wicket;
  EdgeId third_col = 0;
};

// Three edges meeting pairwise in three distinct vertices; six vertices
// total. deg2 holds the shared vertices (e0&e1, e0&e2, e1&e2); deg1[i] is
// the vertex only edges[i] touches.
struct SixThreeConfig {
  std::array<EdgeId, 3> edges{};
  std::array<VertexId, 3> deg2{};
  std::array<VertexId, 3> deg1{};
};

// Four distinct edges joined cyclically through four distinct vertices,
// vertices[i] lying on edges[i] and edges[(i+1) % 4].
struct BergeC4 {
  std::array<EdgeId, 4> edges{};
  std::array<VertexId, 4> vertices{};
};

std::optional<WicketEmbedding> find_wicket(const LinearTripleSystem& sys);
std::optional<GridEmbedding> find_grid(const LinearTripleSystem& sys);
std::optional<BergeC4> find_berge_c4(const LinearTripleSystem& sys);

// Number of wickets, counted as (row set, column set) pairs.
long long count_wickets(const LinearTripleSystem& sys);

// Number of grids, counted as (row class, column class) unordered pairs.
long long count_grids(const LinearTripleSystem& sys);

long long count_63(const LinearTripleSystem& sys);

// Emits configurations in ascending (i, j, k) edge id order; return false
// from the callback to stop early.
void enumerate_63(const LinearTripleSystem& sys,
                  const std::function<bool(const SixThreeConfig&)>& fn);

bool contains_pattern(const LinearTripleSystem& sys, Pattern p);

// Does some embedding of the pattern use the given edge? Incremental
// builders add one edge and call these instead of rescanning everything:
// if the previous state was pattern-free, the new state has the pattern
// exactly when an embedding uses the new edge.
bool wicket_uses_edge(const LinearTripleSystem& sys, EdgeId e);
bool grid_uses_edge(const LinearTripleSystem& sys, EdgeId e);
bool six_three_uses_edge(const LinearTripleSystem& sys, EdgeId e);
bool berge_c4_uses_edge(const LinearTripleSystem& sys, EdgeId e);
bool pattern_uses_edge(const LinearTripleSystem& sys, Pattern p, EdgeId e);

struct EmbeddingViolation {
  std::string detail;
};

std::optional<EmbeddingViolation> validate_embedding(const LinearTripleSystem& sys,
                                                     const WicketEmbedding& w);
std::optional<EmbeddingViolation> validate_embedding(const LinearTripleSystem& sys,
                                                     const GridEmbedding& g);
std::optional<EmbeddingViolation> validate_embedding(const LinearTripleSystem& sys,
                                                     const SixThreeConfig& c);
std::optional<EmbeddingViolation> validate_embedding(const LinearTripleSystem& sys,
                                                     const BergeC4& b);

std::string to_json(const WicketEmbedding& w);
std::string to_json(const GridEmbedding& g);
std::string to_json(const SixThreeConfig& c);
std::string to_json(const BergeC4& b);

using ParsedEmbedding = std::variant<WicketEmbedding, GridEmbedding, SixThreeConfig, BergeC4>;

// Parses any of the four embedding payloads, dispatching on "type".
// Throws ParseError (io.hpp) on malformed input.
ParsedEmbedding embedding_from_json(const std::string& text);

// Parse + validate in one step; parse failures surface as violations.
std::optional<EmbeddingViolation> validate_embedding_json(const LinearTripleSystem& sys,
                                                          const std::string& text);

}  // namespace wicket
