#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "indepbound/hypergraph.hpp"
#include "indepbound/numeric.hpp"
#include "indepbound/rng.hpp"

namespace indepbound {

/// A total order on [0, n): sequence()[i] is the i-th vertex.
class Ordering {
 public:
  /// Throws input_error unless `sequence` is a permutation of [0, n).
  explicit Ordering(std::vector<vertex_id> sequence);
  static Ordering identity(std::size_t n);

  std::size_t size() const { return sequence_.size(); }
  std::size_t position(vertex_id v) const { return position_[v]; }
  std::span<const vertex_id> sequence() const { return sequence_; }

 private:
  std::vector<vertex_id> sequence_;
  std::vector<std::size_t> position_;
};

/// Number of edges through v whose other vertices all precede v.
std::size_t backward_count(const Hypergraph& h, const Ordering& order, vertex_id v);

/// backward_count for every vertex, in one pass over the edges.
std::vector<std::size_t> backward_counts(const Hypergraph& h, const Ordering& order);

/// Probability that a uniform order gives a degree-d vertex of a linear
/// k-uniform hypergraph (t = k-1) at most A-1 backward edges:
///   1                                        if d <= A-1,
///   (tA/(tA+1)) C(d,A) / C(d+1/t, d-A)       otherwise.
BigRational p_at_most(std::int64_t d, std::int64_t t, std::int64_t a_minus_1);

/// 1 / C(d+1/t, d): probability of no backward edge.
BigRational p_zero(std::int64_t d, std::int64_t t);

/// Probability of at least A backward edges, two ways: 1 - p_at_most and the
/// alternating inclusion-exclusion sum. Requires d >= A >= 0.
struct QAtLeast {
  BigRational value;
  BigRational mpie_sum;
  bool agree() const { return value == mpie_sum; }
};
QAtLeast q_at_least(std::int64_t d, std::int64_t t, std::int64_t A);

/// p_at_most(d, t, A-1) / ((1/(1+1/(tA))) (A/d)^{1/t}). Requires d >= A >= 1.
HighPrecision asymptotic_ratio(std::int64_t d, std::int64_t t, std::int64_t A);

/// The neighbourhood of one vertex in a linear hypergraph: a centre and d
/// edges whose remainders are disjoint t-sets (t*d distinct neighbours).
struct StarConfig {
  StarConfig(std::int64_t degree, std::int64_t t);

  std::int64_t d;
  std::int64_t t;
  std::int64_t universe() const { return t * d + 1; }
};

inline constexpr std::int64_t kDefaultMaxStarUniverse = 11;

/// Exact distribution of the centre's backward-edge count over all
/// (td+1)! relative orders, by brute force. Throws capacity_error when
/// td + 1 exceeds max_universe.
std::map<std::int64_t, BigRational> enumerate_star_distribution(
    const StarConfig& cfg, std::int64_t max_universe = kDefaultMaxStarUniverse);

/// {v : backward_count(v) <= A-1}, ascending. Requires A >= 1.
std::vector<vertex_id> select_low_backward(const Hypergraph& h, const Ordering& order,
                                           std::size_t A);

/// Min-live-degree greedy with random tie breaking. Always returns an
/// independent set (ascending ids); no size guarantee.
std::vector<vertex_id> second_stage(const Hypergraph& h, TrialRng& rng);

struct TrialRecord {
  std::size_t selected = 0;        // |I|
  std::size_t internal_edges = 0;  // edges of H inside I
  std::size_t final_size = 0;      // second-stage independent set
};

struct TrialBatch {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t A = 1;
  bool linear = false;
  std::vector<TrialRecord> records;
  std::vector<vertex_id> best_set;

  double mean_selected = 0;
  double stderr_selected = 0;
  double mean_internal_edges = 0;
  double mean_final = 0;
  std::size_t max_final = 0;
  // sum_v p_at_most(d(v), t, A-1); only set for linear hypergraphs.
  std::optional<BigRational> expected_selected;
};

/// Runs `trials` independent rounds of: uniform order (Fisher-Yates), the
/// low-backward selection, then second_stage on the induced sub-hypergraph.
/// Trial i draws from TrialRng(seed, i), so the batch is a pure function of
/// (h, A, trials, seed).
TrialBatch run_trials(const Hypergraph& h, std::size_t A, std::size_t trials,
                      std::uint64_t seed);

}  // namespace indepbound
