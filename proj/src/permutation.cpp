#include "indepbound/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "indepbound/combinatorics.hpp"
#include "indepbound/error.hpp"

namespace indepbound {

Ordering::Ordering(std::vector<vertex_id> sequence)
    : sequence_(std::move(sequence)), position_(sequence_.size(), SIZE_MAX) {
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    vertex_id v = sequence_[i];
    if (v >= sequence_.size() || position_[v] != SIZE_MAX)
      throw input_error("ordering is not a permutation of [0, n)");
    position_[v] = i;
  }
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<vertex_id> seq(n);
  std::iota(seq.begin(), seq.end(), vertex_id{0});
  return Ordering(std::move(seq));
}

std::size_t backward_count(const Hypergraph& h, const Ordering& order, vertex_id v) {
  if (order.size() != h.n()) throw input_error("ordering size differs from n");
  if (v >= h.n()) throw input_error("vertex id out of range");
  std::size_t count = 0;
  const std::size_t pv = order.position(v);
  for (auto e : h.incident(v)) {
    auto ed = h.edge(e);
    if (std::all_of(ed.begin(), ed.end(),
                    [&](vertex_id u) { return u == v || order.position(u) < pv; }))
      ++count;
  }
  return count;
}

std::vector<std::size_t> backward_counts(const Hypergraph& h, const Ordering& order) {
  if (order.size() != h.n()) throw input_error("ordering size differs from n");
  std::vector<std::size_t> counts(h.n(), 0);
  for (std::size_t e = 0; e < h.m(); ++e) {
    auto ed = h.edge(e);
    vertex_id last = *std::max_element(ed.begin(), ed.end(), [&](vertex_id a, vertex_id b) {
      return order.position(a) < order.position(b);
    });
    ++counts[last];
  }
  return counts;
}

BigRational p_at_most(std::int64_t d, std::int64_t t, std::int64_t a_minus_1) {
  if (d < 0 || t < 1 || a_minus_1 < 0)
    throw input_error("p_at_most needs d >= 0, t >= 1, A-1 >= 0");
  const std::int64_t A = a_minus_1 + 1;
  if (d <= a_minus_1) return 1;
  return rational(t * A, t * A + 1) * BigRational(binom(d, A)) / frac_binom(d, t, d - A);
}

BigRational p_zero(std::int64_t d, std::int64_t t) {
  if (d < 0 || t < 1) throw input_error("p_zero needs d >= 0, t >= 1");
  return 1 / frac_binom(d, t, d);
}

QAtLeast q_at_least(std::int64_t d, std::int64_t t, std::int64_t A) {
  if (A < 0 || d < A || t < 1) throw input_error("q_at_least needs d >= A >= 0, t >= 1");
  QAtLeast q;
  q.value = A == 0 ? BigRational(1) : 1 - p_at_most(d, t, A - 1);
  for (std::int64_t i = 0; i <= d - A; ++i) {
    BigRational term(binom(d, i + A) * multichoose(A, i), BigInt(t * (i + A) + 1));
    q.mpie_sum += (i % 2 == 0) ? term : BigRational(-term);
  }
  return q;
}

HighPrecision asymptotic_ratio(std::int64_t d, std::int64_t t, std::int64_t A) {
  if (A < 1 || d < A || t < 1) throw input_error("asymptotic_ratio needs d >= A >= 1, t >= 1");
  const HighPrecision p = to_high_precision(p_at_most(d, t, A - 1));
  const HighPrecision tA = HighPrecision(t) * A;
  const HighPrecision shape =
      (1 / (1 + 1 / tA)) * pow(HighPrecision(A) / HighPrecision(d), 1 / HighPrecision(t));
  return p / shape;
}

StarConfig::StarConfig(std::int64_t degree, std::int64_t t_) : d(degree), t(t_) {
  if (d < 0 || t < 1) throw input_error("star needs d >= 0 and t >= 1");
}

std::map<std::int64_t, BigRational> enumerate_star_distribution(const StarConfig& cfg,
                                                                std::int64_t max_universe) {
  const std::int64_t size = cfg.universe();
  if (size > max_universe)
    throw capacity_error("star with t*d+1 = " + std::to_string(size) +
                         " exceeds the enumeration cap of " + std::to_string(max_universe));
  // Element 0 is the centre; element x >= 1 belongs to edge (x-1)/t.
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> counts(cfg.d + 1, 0);
  std::vector<std::int64_t> seen(cfg.d, 0);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    std::int64_t backward = 0;
    for (int x : order) {
      if (x == 0) break;
      if (++seen[(x - 1) / cfg.t] == cfg.t) ++backward;
    }
    ++counts[backward];
  } while (std::next_permutation(order.begin(), order.end()));

  const BigInt total = factorial(size);
  std::map<std::int64_t, BigRational> dist;
  for (std::int64_t b = 0; b <= cfg.d; ++b)
    if (counts[b]) dist[b] = BigRational(BigInt(counts[b]), total);
  return dist;
}

std::vector<vertex_id> select_low_backward(const Hypergraph& h, const Ordering& order,
                                           std::size_t A) {
  if (A < 1) throw input_error("select_low_backward needs A >= 1");
  auto counts = backward_counts(h, order);
  std::vector<vertex_id> out;
  for (std::size_t v = 0; v < h.n(); ++v)
    if (counts[v] + 1 <= A) out.push_back(static_cast<vertex_id>(v));
  return out;
}

std::vector<vertex_id> second_stage(const Hypergraph& h, TrialRng& rng) {
  enum : char { undecided, chosen, excluded };
  const std::size_t n = h.n();
  const int k = h.k();
  std::vector<char> state(n, undecided);
  std::vector<char> dead(h.m(), 0);
  std::vector<int> chosen_in(h.m(), 0);
  std::vector<std::size_t> live(n);
  for (std::size_t v = 0; v < n; ++v) live[v] = h.degree(static_cast<vertex_id>(v));

  auto exclude = [&](vertex_id u) {
    state[u] = excluded;
    for (auto e : h.incident(u)) {
      if (dead[e]) continue;
      dead[e] = 1;
      for (vertex_id w : h.edge(e)) --live[w];
    }
  };
  auto choose = [&](vertex_id v) {
    state[v] = chosen;
    for (auto e : h.incident(v)) {
      if (dead[e] || ++chosen_in[e] != k - 1) continue;
      for (vertex_id w : h.edge(e))
        if (state[w] == undecided) exclude(w);
    }
  };

  std::size_t remaining = n;
  std::vector<vertex_id> ties;
  while (remaining > 0) {
    // Vertices with no live edge can never complete one: take them all.
    bool took_free = false;
    for (std::size_t v = 0; v < n; ++v)
      if (state[v] == undecided && live[v] == 0) {
        choose(static_cast<vertex_id>(v));
        took_free = true;
      }
    if (took_free) {
      remaining = static_cast<std::size_t>(std::count(state.begin(), state.end(), undecided));
      continue;
    }
    std::size_t best = SIZE_MAX;
    ties.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (state[v] != undecided) continue;
      if (live[v] < best) {
        best = live[v];
        ties.clear();
      }
      if (live[v] == best) ties.push_back(static_cast<vertex_id>(v));
    }
    choose(ties[rng.below(ties.size())]);
    remaining = static_cast<std::size_t>(std::count(state.begin(), state.end(), undecided));
  }

  std::vector<vertex_id> out;
  for (std::size_t v = 0; v < n; ++v)
    if (state[v] == chosen) out.push_back(static_cast<vertex_id>(v));
  return out;
}

TrialBatch run_trials(const Hypergraph& h, std::size_t A, std::size_t trials,
                      std::uint64_t seed) {
  if (A < 1) throw input_error("run_trials needs A >= 1");
  if (trials < 1) throw input_error("run_trials needs at least one trial");
  if (h.k() < 2) throw input_error("run_trials needs k >= 2");

  TrialBatch batch;
  batch.seed = seed;
  batch.trials = trials;
  batch.A = A;
  batch.linear = is_linear(h);
  batch.records.reserve(trials);

  if (batch.linear) {
    std::map<std::size_t, BigRational> by_degree;
    BigRational expected = 0;
    for (std::size_t v = 0; v < h.n(); ++v) {
      auto d = h.degree(static_cast<vertex_id>(v));
      auto it = by_degree.find(d);
      if (it == by_degree.end())
        it = by_degree.emplace(d, p_at_most(static_cast<std::int64_t>(d), h.t(),
                                            static_cast<std::int64_t>(A) - 1)).first;
      expected += it->second;
    }
    batch.expected_selected = expected;
  }

  std::vector<vertex_id> sequence(h.n());
  long double sum = 0, sum_sq = 0, sum_internal = 0, sum_final = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    TrialRng rng(seed, i);
    std::iota(sequence.begin(), sequence.end(), vertex_id{0});
    rng.shuffle(std::span<vertex_id>(sequence));
    Ordering order(sequence);

    auto selected = select_low_backward(h, order, A);
    TrialRecord rec;
    rec.selected = selected.size();
    rec.internal_edges = h.edges_inside(selected);

    auto local = second_stage(h.induced(selected), rng);
    std::vector<vertex_id> final_set;
    final_set.reserve(local.size());
    for (vertex_id u : local) final_set.push_back(selected[u]);
    if (!is_independent(h, final_set))
      throw std::logic_error("second stage produced a non-independent set");
    rec.final_size = final_set.size();
    if (i == 0 || rec.final_size > batch.max_final) {
      batch.max_final = rec.final_size;
      batch.best_set = std::move(final_set);
    }

    sum += rec.selected;
    sum_sq += static_cast<long double>(rec.selected) * rec.selected;
    sum_internal += rec.internal_edges;
    sum_final += rec.final_size;
    batch.records.push_back(rec);
  }

  const long double count = static_cast<long double>(trials);
  const long double mean = sum / count;
  batch.mean_selected = static_cast<double>(mean);
  if (trials > 1) {
    long double var = (sum_sq - count * mean * mean) / (count - 1);
    batch.stderr_selected = static_cast<double>(std::sqrt(std::max(var, 0.0L) / count));
  }
  batch.mean_internal_edges = static_cast<double>(sum_internal / count);
  batch.mean_final = static_cast<double>(sum_final / count);
  return batch;
}

}  // namespace indepbound
