#pragma once

// Brute-force reference implementations used only by tests. They touch the
// library solely through Hypergraph::edge_list() and plain arithmetic.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "indepbound/hypergraph.hpp"
#include "indepbound/numeric.hpp"

namespace oracle {

using indepbound::BigInt;
using indepbound::BigRational;
using indepbound::Hypergraph;
using indepbound::vertex_id;

inline std::vector<std::uint64_t> edge_masks(const Hypergraph& h) {
  std::vector<std::uint64_t> masks;
  for (const auto& e : h.edge_list()) {
    std::uint64_t m = 0;
    for (auto v : e) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  return masks;
}

inline bool mask_independent(const std::vector<std::uint64_t>& edges, std::uint64_t s) {
  for (auto e : edges)
    if ((s & e) == e) return false;
  return true;
}

/// Counts of independent sets by size over all 2^n subsets.
inline std::vector<std::uint64_t> independent_counts(const Hypergraph& h) {
  auto edges = edge_masks(h);
  std::vector<std::uint64_t> counts(h.n() + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << h.n()); ++s)
    if (mask_independent(edges, s)) ++counts[std::popcount(s)];
  return counts;
}

inline std::size_t alpha(const Hypergraph& h) {
  auto counts = independent_counts(h);
  std::size_t best = 0;
  for (std::size_t j = 0; j < counts.size(); ++j)
    if (counts[j]) best = j;
  return best;
}

inline BigInt choose(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

inline BigRational independent_sum(const Hypergraph& h) {
  auto counts = independent_counts(h);
  BigRational sum = 0;
  for (std::size_t j = 0; j < counts.size(); ++j)
    sum += BigRational(BigInt(counts[j]), choose(static_cast<std::int64_t>(h.n()), j));
  return sum;
}

/// C(x, a) for rational x by the falling-factorial definition.
inline BigRational falling_binom(const BigRational& x, std::int64_t a) {
  BigRational out = 1;
  for (std::int64_t j = 0; j < a; ++j) out = out * (x - j) / (j + 1);
  return out;
}

/// Star: centre 0 and d edges {0} + t private leaves each.
inline Hypergraph star(std::int64_t d, std::int64_t t) {
  std::vector<std::vector<vertex_id>> edges;
  vertex_id next = 1;
  for (std::int64_t e = 0; e < d; ++e) {
    std::vector<vertex_id> edge{0};
    for (std::int64_t j = 0; j < t; ++j) edge.push_back(next++);
    edges.push_back(edge);
  }
  return Hypergraph(static_cast<int>(t + 1), static_cast<std::size_t>(t * d + 1), edges);
}

/// Distribution of backward edges at the centre of star(d, t) over all
/// (td+1)! vertex orders, by explicit position comparison.
inline std::vector<BigRational> star_backward_distribution(std::int64_t d, std::int64_t t) {
  Hypergraph h = star(d, t);
  auto edges = h.edge_list();
  const std::size_t n = h.n();
  std::vector<vertex_id> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> pos(n);
  std::vector<std::uint64_t> counts(d + 1, 0);
  std::uint64_t total = 0;
  do {
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::size_t backward = 0;
    for (const auto& e : edges) {
      bool all_before = true;
      for (auto u : e)
        if (u != 0 && pos[u] > pos[0]) all_before = false;
      if (all_before) ++backward;
    }
    ++counts[backward];
    ++total;
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<BigRational> dist;
  for (auto c : counts) dist.emplace_back(BigInt(c), BigInt(total));
  return dist;
}

/// log P(at most A-1 backward edges) for d >= A, from lgamma.
inline long double log_p_at_most(std::int64_t d, std::int64_t t, std::int64_t A) {
  auto lbinom = [](long double x, long double a) {
    return std::lgamma(x + 1) - std::lgamma(a + 1) - std::lgamma(x - a + 1);
  };
  long double x = d + 1.0L / t;
  return std::log(static_cast<long double>(t) * A / (t * A + 1)) + lbinom(d, A) -
         lbinom(x, d - A);
}

/// Random simple graph / linear k-uniform hypergraph generators.
inline Hypergraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<vertex_id>> edges;
  for (vertex_id u = 0; u < n; ++u)
    for (vertex_id v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Hypergraph(2, n, edges);
}

inline Hypergraph random_linear(int k, std::size_t n, std::size_t attempts, std::mt19937_64& rng) {
  std::vector<std::vector<vertex_id>> edges;
  std::set<std::pair<vertex_id, vertex_id>> pairs;
  std::vector<vertex_id> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t a = 0; a < attempts && n >= static_cast<std::size_t>(k); ++a) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<vertex_id> e(all.begin(), all.begin() + k);
    std::sort(e.begin(), e.end());
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j) ok = !pairs.count({e[i], e[j]});
    if (!ok) continue;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) pairs.insert({e[i], e[j]});
    edges.push_back(e);
  }
  return Hypergraph(k, n, edges);
}

/// All graphs on n labelled vertices as edge subsets of K_n.
template <class Visit>
void for_each_graph(std::size_t n, Visit visit) {
  std::vector<std::pair<vertex_id, vertex_id>> slots;
  for (vertex_id u = 0; u < n; ++u)
    for (vertex_id v = u + 1; v < n; ++v) slots.push_back({u, v});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<vertex_id>> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) edges.push_back({slots[s].first, slots[s].second});
    visit(Hypergraph(2, n, edges));
  }
}

}  // namespace oracle
