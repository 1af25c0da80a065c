#include "indepbound/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "indepbound/error.hpp"

namespace indepbound {

Hypergraph::Hypergraph(int k, std::size_t n,
                       const std::vector<std::vector<vertex_id>>& edges)
    : k_(k), n_(n) {
  if (k < 1) throw input_error("uniformity k must be at least 1");
  flat_.reserve(edges.size() * k);
  for (const auto& e : edges) {
    if (e.size() != static_cast<std::size_t>(k))
      throw input_error("edge of size " + std::to_string(e.size()) +
                        " in a " + std::to_string(k) + "-uniform hypergraph");
    flat_.insert(flat_.end(), e.begin(), e.end());
  }
  validate_and_index();
}

Hypergraph Hypergraph::from_flat(int k, std::size_t n, std::vector<vertex_id> flat) {
  if (k < 1) throw input_error("uniformity k must be at least 1");
  if (flat.size() % k != 0) throw input_error("flat edge list is not a multiple of k");
  Hypergraph h;
  h.k_ = k;
  h.n_ = n;
  h.flat_ = std::move(flat);
  h.validate_and_index();
  return h;
}

Hypergraph Hypergraph::from_labeled_edges(
    int k, const std::vector<std::vector<std::string>>& edges,
    std::vector<std::string>* labels) {
  std::unordered_map<std::string, vertex_id> ids;
  std::vector<std::string> order;
  std::vector<std::vector<vertex_id>> mapped;
  mapped.reserve(edges.size());
  for (const auto& e : edges) {
    auto& out = mapped.emplace_back();
    for (const auto& label : e) {
      auto [it, inserted] = ids.emplace(label, static_cast<vertex_id>(order.size()));
      if (inserted) order.push_back(label);
      out.push_back(it->second);
    }
  }
  Hypergraph h(k, order.size(), mapped);
  if (labels) *labels = std::move(order);
  return h;
}

void Hypergraph::validate_and_index() {
  const std::size_t edges = m();
  for (std::size_t e = 0; e < edges; ++e) {
    auto first = flat_.begin() + e * k_;
    std::sort(first, first + k_);
    for (int j = 0; j < k_; ++j) {
      if (first[j] >= n_)
        throw input_error("vertex id " + std::to_string(first[j]) +
                          " out of range [0, " + std::to_string(n_) + ")");
      if (j > 0 && first[j] == first[j - 1])
        throw input_error("edge " + std::to_string(e) + " repeats vertex " +
                          std::to_string(first[j]));
    }
  }

  std::vector<std::uint32_t> order(edges);
  std::iota(order.begin(), order.end(), 0u);
  auto span_of = [&](std::uint32_t e) { return edge(e); };
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto ea = span_of(a), eb = span_of(b);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    auto a = span_of(order[i - 1]), b = span_of(order[i]);
    if (std::equal(a.begin(), a.end(), b.begin()))
      throw input_error("duplicate edge (edges " + std::to_string(order[i - 1]) +
                        " and " + std::to_string(order[i]) + ")");
  }

  offsets_.assign(n_ + 1, 0);
  for (vertex_id v : flat_) ++offsets_[v + 1];
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  incidence_.resize(flat_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < edges; ++e)
    for (vertex_id v : edge(e)) incidence_[cursor[v]++] = static_cast<std::uint32_t>(e);
}

std::size_t Hypergraph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(static_cast<vertex_id>(v)));
  return best;
}

BigRational Hypergraph::average_degree() const {
  if (n_ == 0) return 0;
  return BigRational(BigInt(flat_.size()), BigInt(n_));
}

Hypergraph Hypergraph::induced(std::span<const vertex_id> vertices) const {
  std::vector<std::int64_t> local(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n_) throw input_error("induced: vertex id out of range");
    if (local[vertices[i]] >= 0) throw input_error("induced: repeated vertex");
    local[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<vertex_id> flat;
  for (std::size_t e = 0; e < m(); ++e) {
    auto ed = edge(e);
    if (std::all_of(ed.begin(), ed.end(), [&](vertex_id v) { return local[v] >= 0; }))
      for (vertex_id v : ed) flat.push_back(static_cast<vertex_id>(local[v]));
  }
  return from_flat(k_, vertices.size(), std::move(flat));
}

std::size_t Hypergraph::edges_inside(std::span<const vertex_id> vertices) const {
  std::vector<char> in(n_, 0);
  for (vertex_id v : vertices) {
    if (v >= n_) throw input_error("vertex id out of range");
    in[v] = 1;
  }
  std::size_t count = 0;
  for (std::size_t e = 0; e < m(); ++e) {
    auto ed = edge(e);
    if (std::all_of(ed.begin(), ed.end(), [&](vertex_id v) { return in[v] != 0; })) ++count;
  }
  return count;
}

std::vector<std::vector<vertex_id>> Hypergraph::edge_list() const {
  std::vector<std::vector<vertex_id>> out;
  out.reserve(m());
  for (std::size_t e = 0; e < m(); ++e) {
    auto ed = edge(e);
    out.emplace_back(ed.begin(), ed.end());
  }
  return out;
}

DegreeSequence degree_sequence(const Hypergraph& h) {
  DegreeSequence seq;
  seq.degrees.resize(h.n());
  for (std::size_t v = 0; v < h.n(); ++v) {
    seq.degrees[v] = h.degree(static_cast<vertex_id>(v));
    seq.sum += seq.degrees[v];
  }
  seq.average = h.n() == 0 ? BigRational(0) : BigRational(BigInt(seq.sum), BigInt(h.n()));
  return seq;
}

bool is_independent(const Hypergraph& h, std::span<const vertex_id> set) {
  std::vector<char> in(h.n(), 0);
  for (vertex_id v : set) {
    if (v >= h.n())
      throw input_error("vertex id " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  if (set.size() < static_cast<std::size_t>(h.k())) return true;
  for (vertex_id v : set) {
    for (auto e : h.incident(v)) {
      auto ed = h.edge(e);
      if (ed.front() != v) continue;  // check each edge once, from its smallest id
      if (std::all_of(ed.begin(), ed.end(), [&](vertex_id u) { return in[u] != 0; }))
        return false;
    }
  }
  return true;
}

bool is_linear(const Hypergraph& h) {
  if (h.k() <= 2) return true;  // two distinct pairs share at most one vertex
  std::unordered_set<std::uint64_t> pairs;
  pairs.reserve(h.m() * h.k() * (h.k() - 1) / 2);
  for (std::size_t e = 0; e < h.m(); ++e) {
    auto ed = h.edge(e);
    for (int a = 0; a < h.k(); ++a)
      for (int b = a + 1; b < h.k(); ++b) {
        std::uint64_t key = (static_cast<std::uint64_t>(ed[a]) << 32) | ed[b];
        if (!pairs.insert(key).second) return false;
      }
  }
  return true;
}

LinkGraph link_graph(const Hypergraph& h, vertex_id v) {
  if (v >= h.n()) throw input_error("link_graph: vertex id out of range");
  if (h.degree(v) == 0)
    throw input_error("link_graph: vertex " + std::to_string(v) + " has degree 0 (empty link)");
  LinkGraph link;
  link.center = v;
  for (auto e : h.incident(v))
    for (vertex_id u : h.edge(e))
      if (u != v) link.vertices.push_back(u);
  std::sort(link.vertices.begin(), link.vertices.end());
  link.vertices.erase(std::unique(link.vertices.begin(), link.vertices.end()),
                      link.vertices.end());

  std::vector<vertex_id> flat;
  flat.reserve(h.degree(v) * h.t());
  for (auto e : h.incident(v))
    for (vertex_id u : h.edge(e))
      if (u != v) {
        auto it = std::lower_bound(link.vertices.begin(), link.vertices.end(), u);
        flat.push_back(static_cast<vertex_id>(it - link.vertices.begin()));
      }
  link.host = Hypergraph::from_flat(h.t(), link.vertices.size(), std::move(flat));
  return link;
}

}  // namespace indepbound
