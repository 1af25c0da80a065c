#include "indepbound/constructions.hpp"

#include "indepbound/error.hpp"

namespace indepbound {
namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t result = 1;
  for (std::size_t j = 0; j < exp; ++j) {
    if (result > cap / base) throw capacity_error("construction exceeds the size cap");
    result *= base;
  }
  return result;
}

}  // namespace

void for_each_bipartite_tower_edge(std::size_t n,
                                   const std::function<void(vertex_id, vertex_id)>& visit) {
  if (n < 1) throw input_error("bipartite_tower needs n >= 1");
  if (n > 30) throw capacity_error("bipartite_tower supports n <= 30");
  std::size_t base = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t side = std::size_t{1} << j;
    for (std::size_t a = 0; a < side; ++a)
      for (std::size_t b = 0; b < side; ++b)
        visit(static_cast<vertex_id>(base + a), static_cast<vertex_id>(base + side + b));
    base += 2 * side;
  }
}

Hypergraph bipartite_tower(std::size_t n, std::size_t max_edges) {
  if (n < 1) throw input_error("bipartite_tower needs n >= 1");
  if (n > 30 || ((std::size_t{1} << (2 * n)) - 1) / 3 > max_edges)
    throw capacity_error("bipartite_tower(" + std::to_string(n) + ") exceeds the edge cap");
  std::vector<vertex_id> flat;
  flat.reserve(2 * (((std::size_t{1} << (2 * n)) - 1) / 3));
  for_each_bipartite_tower_edge(n, [&](vertex_id a, vertex_id b) {
    flat.push_back(a);
    flat.push_back(b);
  });
  return Hypergraph::from_flat(2, (std::size_t{1} << (n + 1)) - 2, std::move(flat));
}

Hypergraph i_unit(int k, std::size_t i, std::size_t max_vertices) {
  if (k < 2) throw input_error("i_unit needs k >= 2");
  if (i > 5) throw capacity_error("i_unit supports i <= 5");
  const std::size_t dims = std::size_t{1} << i;
  const std::size_t vertices = checked_pow(k, dims, max_vertices);
  std::vector<vertex_id> flat;
  flat.reserve(dims * vertices);
  std::size_t stride = 1;
  for (std::size_t j = 0; j < dims; ++j) {
    for (std::size_t id = 0; id < vertices; ++id) {
      if ((id / stride) % k != 0) continue;
      for (int x = 0; x < k; ++x) flat.push_back(static_cast<vertex_id>(id + x * stride));
    }
    stride *= k;
  }
  return Hypergraph::from_flat(k, vertices, std::move(flat));
}

Hypergraph disjoint_union(const std::vector<Hypergraph>& parts) {
  if (parts.empty()) throw input_error("disjoint_union of nothing");
  const int k = parts.front().k();
  std::size_t offset = 0;
  std::vector<vertex_id> flat;
  for (const auto& part : parts) {
    if (part.k() != k) throw input_error("disjoint_union needs equal uniformity");
    for (std::size_t e = 0; e < part.m(); ++e)
      for (vertex_id v : part.edge(e)) flat.push_back(static_cast<vertex_id>(v + offset));
    offset += part.n();
  }
  return Hypergraph::from_flat(k, offset, std::move(flat));
}

Hypergraph family_H(std::size_t n, int k, std::size_t w, std::size_t max_vertices) {
  if (n < 1 || w < 1 || k < 2) throw input_error("family_H needs n >= 1, w >= 1, k >= 2");
  if (n > 5) throw capacity_error("family_H supports n <= 5");
  const std::size_t top = checked_pow(k, std::size_t{1} << n, max_vertices);
  if (w > max_vertices / top || w * top > max_vertices / n)
    throw capacity_error("family_H exceeds the vertex cap");
  const std::size_t m = w * top;
  std::vector<Hypergraph> parts;
  for (std::size_t i = 0; i < n; ++i) {
    Hypergraph unit = i_unit(k, i, max_vertices);
    const std::size_t copies = (m + unit.n() - 1) / unit.n();
    for (std::size_t c = 0; c < copies; ++c) parts.push_back(unit);
  }
  return disjoint_union(parts);
}

Hypergraph matched_biclique(std::size_t n) {
  if (n < 3 || n % 3 != 0) throw input_error("matched_biclique needs n divisible by 3");
  const std::size_t p = n / 3;
  if (n > kMaxConstructedVertices) throw capacity_error("matched_biclique exceeds the cap");
  std::vector<vertex_id> flat;
  flat.reserve(2 * (p * p + p));
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b) {
      flat.push_back(static_cast<vertex_id>(a));
      flat.push_back(static_cast<vertex_id>(p + b));
    }
  for (std::size_t j = 0; j < p; ++j) {
    flat.push_back(static_cast<vertex_id>(j));
    flat.push_back(static_cast<vertex_id>(2 * p + j));
  }
  return Hypergraph::from_flat(2, n, std::move(flat));
}

FamilySpec::Kind FamilySpec::parse_kind(const std::string& name) {
  if (name == "bipartite-tower") return bipartite_tower;
  if (name == "i-unit") return i_unit;
  if (name == "family-H") return family_H;
  if (name == "matched-biclique") return matched_biclique;
  throw input_error("unknown family '" + name +
                    "' (expected bipartite-tower, i-unit, family-H, matched-biclique)");
}

std::string FamilySpec::kind_name(Kind kind) {
  switch (kind) {
    case bipartite_tower: return "bipartite-tower";
    case i_unit: return "i-unit";
    case family_H: return "family-H";
    case matched_biclique: return "matched-biclique";
  }
  return "?";
}

Hypergraph build_family(const FamilySpec& spec) {
  switch (spec.family) {
    case FamilySpec::bipartite_tower: return indepbound::bipartite_tower(spec.n);
    case FamilySpec::i_unit: return indepbound::i_unit(spec.k, spec.i);
    case FamilySpec::family_H: return indepbound::family_H(spec.n, spec.k, spec.w);
    case FamilySpec::matched_biclique: return indepbound::matched_biclique(spec.n);
  }
  throw input_error("unknown family");
}

}  // namespace indepbound
