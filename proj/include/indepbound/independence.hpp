#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "indepbound/hypergraph.hpp"
#include "indepbound/numeric.hpp"

namespace indepbound {

inline constexpr std::size_t kDefaultAlphaCap = 30;
// Vertex sets are 64-bit masks inside the exact solvers.
inline constexpr std::size_t kHardAlphaCap = 63;

/// A maximum independent set, by branch and bound.
///
/// Branches on the undecided vertex with the most live edges (edges that
/// can still be completed), forcing out vertices that would complete an edge
/// and taking vertices with no live edge for free. The greedy min-degree set
/// seeds the incumbent. Throws capacity_error when n > cap (cap itself may not
/// exceed kHardAlphaCap).
std::vector<vertex_id> maximum_independent_set(const Hypergraph& h,
                                               std::size_t cap = kDefaultAlphaCap);

std::size_t exact_alpha(const Hypergraph& h, std::size_t cap = kDefaultAlphaCap);

/// counts[j] = number of independent sets of size j (the empty set included).
std::vector<std::uint64_t> independent_set_counts(const Hypergraph& h,
                                                  std::size_t cap = kDefaultAlphaCap);

/// Sum over all independent sets J (including the empty set) of 1/C(n, |J|).
/// Excluding the empty set would lower the value by exactly 1.
BigRational independent_sum(const Hypergraph& h, std::size_t cap = kDefaultAlphaCap);

enum class Verdict { holds, fails, indeterminate };

const char* to_string(Verdict v);

struct InequalityCheck {
  BigRational lhs;
  HighPrecision rhs;
  Verdict verdict = Verdict::indeterminate;
  bool holds() const { return verdict == Verdict::holds; }
};

/// lhs = independent_sum(h); rhs = 2^{-(k+1)/k} n / m^{1/k}.
/// A difference below 1e-45 relative is reported as indeterminate.
/// Throws undefined_error when m = 0.
InequalityCheck check_hgraph_inequality(const Hypergraph& h,
                                        std::size_t cap = kDefaultAlphaCap);

}  // namespace indepbound
