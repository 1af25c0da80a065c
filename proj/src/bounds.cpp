#include "indepbound/bounds.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "indepbound/combinatorics.hpp"
#include "indepbound/error.hpp"
#include "indepbound/independence.hpp"
#include "indepbound/permutation.hpp"

namespace indepbound {
namespace {

std::map<std::size_t, std::size_t> degree_histogram(const Hypergraph& h) {
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t v = 0; v < h.n(); ++v) ++hist[h.degree(static_cast<vertex_id>(v))];
  return hist;
}

HighPrecision average_degree_hp(const Hypergraph& h) {
  return to_high_precision(h.average_degree());
}

void require_log_defined(const HighPrecision& D, BoundFamily family) {
  if (D <= 1) throw undefined_error("bound needs average degree D > 1 (log D > 0)");
  if (family.kind == BoundFamily::kr_free && D <= exp(HighPrecision(1)))
    throw undefined_error("K_r-free bound needs D > e (log log D > 0)");
}

std::vector<std::vector<vertex_id>> adjacency(const Hypergraph& g) {
  std::vector<std::vector<vertex_id>> adj(g.n());
  for (std::size_t e = 0; e < g.m(); ++e) {
    auto ed = g.edge(e);
    adj[ed[0]].push_back(ed[1]);
    adj[ed[1]].push_back(ed[0]);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool is_bipartite(const std::vector<std::vector<vertex_id>>& adj) {
  std::vector<int> side(adj.size(), -1);
  std::deque<vertex_id> queue;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.push_back(static_cast<vertex_id>(s));
    while (!queue.empty()) {
      vertex_id u = queue.front();
      queue.pop_front();
      for (vertex_id w : adj[u]) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Extends `candidates` (common higher neighbours of the current clique).
bool extend_clique(const std::vector<std::vector<vertex_id>>& adj,
                   const std::vector<vertex_id>& candidates, int needed) {
  if (needed == 0) return true;
  if (static_cast<int>(candidates.size()) < needed) return false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    vertex_id v = candidates[i];
    std::vector<vertex_id> next;
    std::set_intersection(candidates.begin() + i + 1, candidates.end(), adj[v].begin(),
                          adj[v].end(), std::back_inserter(next));
    if (extend_clique(adj, next, needed - 1)) return true;
  }
  return false;
}

std::string hp(const HighPrecision& x) { return to_string(x); }

}  // namespace

std::string BoundFamily::name() const {
  switch (kind) {
    case triangle_free: return "triangle-free";
    case kr_free: return "kr-free(" + std::to_string(r) + ")";
    case linear: return "linear-kuniform";
  }
  return "?";
}

BigRational caro_wei(const Hypergraph& g) {
  if (g.k() != 2) throw input_error("Caro-Wei needs a graph (k = 2)");
  BigRational sum = 0;
  for (auto [d, count] : degree_histogram(g))
    sum += BigRational(BigInt(count), BigInt(d + 1));
  return sum;
}

BigRational caro_tuza(const Hypergraph& h) {
  if (h.k() < 2) throw input_error("Caro-Tuza needs k >= 2");
  BigRational sum = 0;
  for (auto [d, count] : degree_histogram(h))
    sum += BigRational(BigInt(count)) / frac_binom(static_cast<std::int64_t>(d), h.t(),
                                                   static_cast<std::int64_t>(d));
  return sum;
}

HighPrecision caro_tuza_simplified(const Hypergraph& h, const HighPrecision& dk) {
  if (h.k() < 2) throw input_error("Caro-Tuza needs k >= 2");
  const HighPrecision inv_t = 1 / HighPrecision(h.t());
  HighPrecision sum = 0;
  for (auto [d, count] : degree_histogram(h))
    sum += HighPrecision(count) / pow(HighPrecision(d + 1), inv_t);
  return dk * sum;
}

HighPrecision degree_sequence_bound(const Hypergraph& h, const BigRational& epsilon,
                                    const HighPrecision& c, BoundFamily family) {
  if (epsilon < 0 || epsilon >= 1) throw input_error("epsilon must lie in [0, 1)");
  if (h.k() < 2) throw input_error("degree-sequence bound needs k >= 2");
  const HighPrecision D = average_degree_hp(h);
  require_log_defined(D, family);
  const HighPrecision A = pow(D, to_high_precision(epsilon));
  const HighPrecision logD = log(D);
  HighPrecision sum = 0;
  if (family.kind == BoundFamily::linear) {
    const HighPrecision inv_t = 1 / HighPrecision(h.t());
    const HighPrecision floor = pow(A, inv_t);
    for (auto [d, count] : degree_histogram(h))
      sum += HighPrecision(count) / std::max(floor, pow(HighPrecision(d), inv_t));
    return c * pow(logD, inv_t) * sum;
  }
  for (auto [d, count] : degree_histogram(h))
    sum += HighPrecision(count) / std::max(A, HighPrecision(d));
  if (family.kind == BoundFamily::kr_free) return c * logD / log(logD) * sum;
  return c * logD * sum;
}

HighPrecision average_degree_bound(const Hypergraph& h, const HighPrecision& c,
                                   BoundFamily family) {
  if (h.k() < 2) throw input_error("average-degree bound needs k >= 2");
  const HighPrecision D = average_degree_hp(h);
  require_log_defined(D, family);
  const HighPrecision n = h.n();
  const HighPrecision logD = log(D);
  switch (family.kind) {
    case BoundFamily::triangle_free: return c * n * logD / D;
    case BoundFamily::kr_free: return c * n * logD / (D * log(logD));
    case BoundFamily::linear: return c * n * pow(logD / D, 1 / HighPrecision(h.t()));
  }
  return 0;
}

SpencerBound spencer_bound(const Hypergraph& h, const HighPrecision& ck) {
  if (h.k() < 2) throw input_error("Spencer bound needs k >= 2");
  if (h.m() == 0) return {HighPrecision(h.n()), true};
  const HighPrecision D = average_degree_hp(h);
  return {ck * HighPrecision(h.n()) / pow(D, 1 / HighPrecision(h.t())), false};
}

bool check_family(const Hypergraph& h, BoundFamily family, int max_r) {
  if (family.kind == BoundFamily::linear) return is_linear(h);
  if (h.k() != 2) throw input_error("clique-free families need a graph (k = 2)");
  if (family.r < 3) throw input_error("clique size r must be at least 3");
  if (family.r > max_r)
    throw capacity_error("clique search supports r <= " + std::to_string(max_r));
  auto adj = adjacency(h);
  if (is_bipartite(adj)) return true;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    std::vector<vertex_id> higher;
    for (vertex_id w : adj[v])
      if (w > v) higher.push_back(w);
    if (extend_clique(adj, higher, family.r - 1)) return false;
  }
  return true;
}

std::size_t threshold_from_epsilon(const Hypergraph& h, const BigRational& epsilon) {
  if (epsilon < 0 || epsilon >= 1) throw input_error("epsilon must lie in [0, 1)");
  const HighPrecision D = average_degree_hp(h);
  if (D <= 0) return 1;
  const HighPrecision A = ceil(pow(D, to_high_precision(epsilon)));
  return std::max<std::size_t>(1, A.convert_to<std::size_t>());
}

BoundReport compare_bounds(const Hypergraph& h, const CompareOptions& options) {
  if (h.k() < 2) throw input_error("compare_bounds needs k >= 2");
  BoundReport report;
  report.k = h.k();
  report.n = h.n();
  report.m = h.m();
  report.average_degree = h.average_degree();
  report.linear = is_linear(h);
  const std::string eps = to_string(options.epsilon);

  auto add = [&](BoundRecord rec) { report.bounds.push_back(std::move(rec)); };

  if (h.k() == 2) add({"caro_wei", {}, to_string(caro_wei(h)), "exact", true, ""});
  add({"caro_tuza", {}, to_string(caro_tuza(h)), "exact", true, ""});
  add({"caro_tuza_simplified", {{"dk", hp(options.dk)}}, hp(caro_tuza_simplified(h, options.dk)),
       "shape-only", true, ""});
  {
    auto sp = spencer_bound(h, options.ck);
    add({"spencer", {{"ck", hp(options.ck)}}, hp(sp.value), "shape-only", true,
         sp.edgeless ? "m = 0: value is n" : ""});
  }

  std::vector<BoundFamily> families;
  if (h.k() == 2) {
    families.push_back(BoundFamily::triangle());
    families.push_back(BoundFamily::clique_free(options.clique_r));
  } else {
    families.push_back(BoundFamily::linear_uniform());
  }
  for (auto family : families) {
    BoundRecord seq{"degree_sequence/" + family.name(),
                    {{"epsilon", eps}, {"c", hp(options.c)}}, "", "shape-only", false, ""};
    BoundRecord avg{"average_degree/" + family.name(), {{"c", hp(options.c)}}, "", "shape-only",
                    false, ""};
    bool hypothesis = false;
    try {
      hypothesis = check_family(h, family);
    } catch (const capacity_error& e) {
      seq.note = avg.note = e.what();
    }
    if (!hypothesis && seq.note.empty())
      seq.note = avg.note = "hypothesis " + family.name() + " does not hold";
    try {
      auto s = degree_sequence_bound(h, options.epsilon, options.c, family);
      auto a = average_degree_bound(h, options.c, family);
      seq.value = hp(s);
      avg.value = hp(a);
      seq.applicable = avg.applicable = hypothesis;
      if (hypothesis) report.ratios.push_back({family.name(), seq.value, avg.value, hp(s / a)});
    } catch (const undefined_error& e) {
      seq.note = avg.note = e.what();
    }
    add(seq);
    add(avg);
  }

  if (options.A) {
    report.A = *options.A;
    report.A_source = options.epsilon_given ? "explicit (overrides epsilon)" : "explicit";
  } else {
    report.A = threshold_from_epsilon(h, options.epsilon);
    report.A_source = "epsilon";
  }
  report.seed = options.seed;
  report.trials = options.trials;
  if (options.trials > 0 && h.n() > 0) {
    auto batch = run_trials(h, report.A, options.trials, options.seed);
    report.heuristic_alpha = batch.max_final;
    report.mean_selected = batch.mean_selected;
    report.expected_selected = batch.expected_selected;
    add({"pipeline_best", {{"A", std::to_string(report.A)}, {"seed", std::to_string(options.seed)},
                           {"trials", std::to_string(options.trials)}},
         std::to_string(batch.max_final), "reference", true, "best independent set found"});
  }

  if (h.n() <= options.alpha_cap && options.alpha_cap <= kHardAlphaCap) {
    report.exact_alpha = exact_alpha(h, options.alpha_cap);
    add({"exact_alpha", {}, std::to_string(*report.exact_alpha), "reference", true, ""});
  } else {
    report.alpha_note = "n = " + std::to_string(h.n()) + " exceeds the alpha cap of " +
                        std::to_string(options.alpha_cap);
  }
  return report;
}

}  // namespace indepbound
