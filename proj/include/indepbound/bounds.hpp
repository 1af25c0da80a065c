#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indepbound/hypergraph.hpp"
#include "indepbound/numeric.hpp"

namespace indepbound {

/// Hypothesis classes of the degree-sequence bounds.
struct BoundFamily {
  enum Kind { triangle_free, kr_free, linear };
  Kind kind = triangle_free;
  int r = 3;  // clique size for kr_free; triangle_free is r = 3

  static BoundFamily triangle() { return {triangle_free, 3}; }
  static BoundFamily clique_free(int r) { return {kr_free, r}; }
  static BoundFamily linear_uniform() { return {linear, 0}; }
  std::string name() const;
};

inline constexpr int kMaxCliqueSize = 6;

/// sum_v 1/(d(v)+1). Throws input_error unless k = 2.
BigRational caro_wei(const Hypergraph& g);

/// sum_v 1/C(d(v)+1/t, d(v)); isolated vertices contribute 1.
BigRational caro_tuza(const Hypergraph& h);

/// dk * sum_v (d(v)+1)^{-1/t}.
HighPrecision caro_tuza_simplified(const Hypergraph& h, const HighPrecision& dk);

/// Degree-sequence bounds with D = k m / n and A = D^epsilon:
///   triangle-free:  c log D              sum_v 1/max(A, d(v))
///   K_r-free:       c log D / log log D  sum_v 1/max(A, d(v))
///   linear:         c (log D)^{1/t}      sum_v 1/max(A^{1/t}, d(v)^{1/t})
/// The family hypothesis is not checked here (see check_family).
/// Throws undefined_error for D <= 1, or D <= e for K_r-free;
/// input_error for epsilon outside [0, 1).
HighPrecision degree_sequence_bound(const Hypergraph& h, const BigRational& epsilon,
                                    const HighPrecision& c, BoundFamily family);

/// The classical average-degree shapes the degree-sequence bounds refine:
///   triangle-free: c n log D / D;  K_r-free: c n log D / (D log log D);
///   linear: c n (log D / D)^{1/t}.
HighPrecision average_degree_bound(const Hypergraph& h, const HighPrecision& c,
                                   BoundFamily family);

struct SpencerBound {
  HighPrecision value;
  bool edgeless = false;  // m = 0: the value is n itself
};

/// ck n / D^{1/t}.
SpencerBound spencer_bound(const Hypergraph& h, const HighPrecision& ck);

/// Validates the hypothesis of `family`. Clique families need k = 2 and
/// 3 <= r <= max_r (capacity_error above max_r); linear uses is_linear.
bool check_family(const Hypergraph& h, BoundFamily family, int max_r = kMaxCliqueSize);

/// One named bound in a report. `value` is exact ("p/q") for constant-free
/// bounds and a 30-digit decimal otherwise.
struct BoundRecord {
  std::string name;
  std::map<std::string, std::string> params;
  std::string value;
  std::string label;  // "exact", "shape-only" or "reference"
  bool applicable = true;
  std::string note;
};

struct RatioRecord {
  std::string family;
  std::string degree_sequence;
  std::string average_degree;
  std::string ratio;
};

struct BoundReport {
  int k = 2;
  std::size_t n = 0;
  std::size_t m = 0;
  BigRational average_degree;
  bool linear = false;
  std::vector<BoundRecord> bounds;
  std::vector<RatioRecord> ratios;

  std::optional<std::size_t> exact_alpha;
  std::string alpha_note;
  std::size_t A = 1;
  std::string A_source;  // "epsilon", "explicit" or "explicit (overrides epsilon)"
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t heuristic_alpha = 0;
  double mean_selected = 0;
  std::optional<BigRational> expected_selected;
};

struct CompareOptions {
  BigRational epsilon = BigRational(1, 2);
  std::optional<std::size_t> A;
  bool epsilon_given = true;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t alpha_cap = 30;
  int clique_r = 4;
  HighPrecision c = 1;
  HighPrecision dk = 1;
  HighPrecision ck = 1;
};

/// ceil(D^epsilon), at least 1.
std::size_t threshold_from_epsilon(const Hypergraph& h, const BigRational& epsilon);

/// Every applicable bound, the permutation pipeline's best set, exact alpha
/// when n is within the cap, and degree-sequence / average-degree ratios.
BoundReport compare_bounds(const Hypergraph& h, const CompareOptions& options);

}  // namespace indepbound
