#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "indepbound/numeric.hpp"

namespace indepbound {

using vertex_id = std::uint32_t;

/// A k-uniform hypergraph over the dense vertex ids [0, n).
///
/// Edges are stored sorted and flat (m * k ids); the incidence lists are a
/// CSR index built once at construction. Values are immutable after
/// construction, so every query is safe for concurrent readers.
///
/// k = 1 is allowed so that the link of a graph vertex can be represented;
/// everything that needs a genuine hypergraph checks k >= 2 itself.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws input_error unless every edge has exactly k distinct ids in
  /// [0, n) and no edge appears twice.
  Hypergraph(int k, std::size_t n, const std::vector<std::vector<vertex_id>>& edges);

  /// Same validation, edges given as consecutive runs of k ids.
  static Hypergraph from_flat(int k, std::size_t n, std::vector<vertex_id> flat);

  /// Remaps arbitrary labels to dense ids in order of first appearance.
  static Hypergraph from_labeled_edges(
      int k, const std::vector<std::vector<std::string>>& edges,
      std::vector<std::string>* labels = nullptr);

  int k() const { return k_; }
  int t() const { return k_ - 1; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return k_ == 0 ? 0 : flat_.size() / k_; }

  std::span<const vertex_id> edge(std::size_t e) const {
    return {flat_.data() + e * k_, static_cast<std::size_t>(k_)};
  }
  std::span<const std::uint32_t> incident(vertex_id v) const {
    return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(vertex_id v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;

  /// k*m/n exactly; zero for the empty vertex set.
  BigRational average_degree() const;

  /// Sub-hypergraph on `vertices` keeping the edges entirely inside it.
  /// Vertex i of the result is vertices[i].
  Hypergraph induced(std::span<const vertex_id> vertices) const;

  /// Number of edges whose vertices all lie in `vertices`.
  std::size_t edges_inside(std::span<const vertex_id> vertices) const;

  std::vector<std::vector<vertex_id>> edge_list() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.flat_ == b.flat_;
  }

 private:
  void validate_and_index();

  int k_ = 2;
  std::size_t n_ = 0;
  std::vector<vertex_id> flat_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> incidence_;
};

struct DegreeSequence {
  std::vector<std::size_t> degrees;
  BigRational average;
  std::size_t sum = 0;
};

DegreeSequence degree_sequence(const Hypergraph& h);

struct LinkGraph {
  vertex_id center = 0;
  // Original ids of the link's vertices; vertex i of `host` is vertices[i].
  std::vector<vertex_id> vertices;
  Hypergraph host;
};

/// True iff no edge of h lies inside `set`. Throws input_error on an
/// out-of-range id.
bool is_independent(const Hypergraph& h, std::span<const vertex_id> set);

/// True iff no two distinct edges share two or more vertices.
bool is_linear(const Hypergraph& h);

/// The (k-1)-uniform hypergraph {e \ v : v in e}. Throws input_error when
/// v has degree 0 or is out of range.
LinkGraph link_graph(const Hypergraph& h, vertex_id v);

}  // namespace indepbound
