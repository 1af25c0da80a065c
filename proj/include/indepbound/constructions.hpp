#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "indepbound/hypergraph.hpp"

namespace indepbound {

inline constexpr std::size_t kMaxConstructedVertices = std::size_t{1} << 22;
inline constexpr std::size_t kMaxConstructedEdges = std::size_t{1} << 25;

// Vertex numbering: components are laid out consecutively in the order they
// are listed below; i-unit tuples (c_0, ..., c_{D-1}) map to sum_j c_j k^j.

/// Disjoint union K_{1,1} + K_{2,2} + ... + K_{2^{n-1},2^{n-1}}; block j
/// occupies 2^{j+1} consecutive ids, first part then second part.
/// 2^{n+1}-2 vertices, average degree (2^n+1)/3.
Hypergraph bipartite_tower(std::size_t n, std::size_t max_edges = kMaxConstructedEdges);

/// Streams the edges of bipartite_tower(n) without materialising them.
void for_each_bipartite_tower_edge(std::size_t n,
                                   const std::function<void(vertex_id, vertex_id)>& visit);

/// Vertex set [k]^{2^i}; one edge per axis-parallel line. 2^i-regular,
/// linear, 2^i k^{2^i - 1} edges.
Hypergraph i_unit(int k, std::size_t i, std::size_t max_vertices = kMaxConstructedVertices);

/// With m = w k^{2^n}: for each i < n, ceil(m / k^{2^i}) disjoint i-units.
Hypergraph family_H(std::size_t n, int k, std::size_t w,
                    std::size_t max_vertices = kMaxConstructedVertices);

/// K_{n/3,n/3} on ids [0, 2n/3) plus n/3 extra vertices, extra vertex
/// 2n/3 + j matched to vertex j of the first part. Requires 3 | n, n >= 3.
Hypergraph matched_biclique(std::size_t n);

Hypergraph disjoint_union(const std::vector<Hypergraph>& parts);

struct FamilySpec {
  enum Kind { bipartite_tower, i_unit, family_H, matched_biclique };
  Kind family = bipartite_tower;
  std::size_t n = 1;
  int k = 3;
  std::size_t i = 0;
  std::size_t w = 1;

  /// "bipartite-tower", "i-unit", "family-H", "matched-biclique".
  static Kind parse_kind(const std::string& name);
  static std::string kind_name(Kind kind);
};

Hypergraph build_family(const FamilySpec& spec);

}  // namespace indepbound
