#include "indepbound/independence.hpp"

#include <algorithm>
#include <bit>

#include "indepbound/error.hpp"

namespace indepbound {
namespace {

using mask_t = std::uint64_t;

void check_cap(const Hypergraph& h, std::size_t cap) {
  if (cap > kHardAlphaCap)
    throw capacity_error("enumeration cap " + std::to_string(cap) +
                         " exceeds the hard limit of " + std::to_string(kHardAlphaCap));
  if (h.n() > cap)
    throw capacity_error("n = " + std::to_string(h.n()) + " exceeds the enumeration cap of " +
                         std::to_string(cap) + " (raise it with --max-n or INDEPBOUND_CAPS)");
}

struct MaskedHypergraph {
  explicit MaskedHypergraph(const Hypergraph& h) : n(h.n()), incident(h.n()) {
    edges.reserve(h.m());
    for (std::size_t e = 0; e < h.m(); ++e) {
      mask_t mk = 0;
      for (vertex_id v : h.edge(e)) mk |= mask_t{1} << v;
      edges.push_back(mk);
      for (vertex_id v : h.edge(e)) incident[v].push_back(mk);
    }
  }

  // Removes forced-out vertices from `undecided` until stable, then returns
  // the undecided vertices that have no live edge.
  mask_t propagate(mask_t chosen, mask_t& undecided) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (mask_t e : edges) {
        mask_t open = e & ~chosen;
        if ((e & ~(chosen | undecided)) != 0) continue;  // dead
        if (std::popcount(open) == 1 && (open & undecided)) {
          undecided &= ~open;
          changed = true;
        }
      }
    }
    mask_t free = undecided;
    for (mask_t e : edges) {
      if ((e & ~(chosen | undecided)) != 0) continue;
      free &= ~e;
    }
    return free;
  }

  vertex_id branch_vertex(mask_t chosen, mask_t undecided) const {
    vertex_id best = static_cast<vertex_id>(std::countr_zero(undecided));
    std::size_t best_live = 0;
    for (mask_t rest = undecided; rest; rest &= rest - 1) {
      auto v = static_cast<vertex_id>(std::countr_zero(rest));
      std::size_t live = 0;
      for (mask_t e : incident[v])
        if ((e & ~(chosen | undecided)) == 0) ++live;
      if (live > best_live) {
        best_live = live;
        best = v;
      }
    }
    return best;
  }

  std::size_t n;
  std::vector<mask_t> edges;
  std::vector<std::vector<mask_t>> incident;
};

class AlphaSearch {
 public:
  explicit AlphaSearch(const MaskedHypergraph& g) : g_(g) {}

  void run(mask_t incumbent) {
    best_ = incumbent;
    best_size_ = std::popcount(incumbent);
    mask_t all = g_.n == 64 ? ~mask_t{0} : (mask_t{1} << g_.n) - 1;
    search(0, all);
  }

  mask_t best() const { return best_; }

 private:
  void search(mask_t chosen, mask_t undecided) {
    mask_t free = g_.propagate(chosen, undecided);
    chosen |= free;
    undecided &= ~free;
    if (std::popcount(chosen) + std::popcount(undecided) <= best_size_) return;
    if (undecided == 0) {
      best_ = chosen;
      best_size_ = std::popcount(chosen);
      return;
    }
    vertex_id v = g_.branch_vertex(chosen, undecided);
    mask_t bit = mask_t{1} << v;
    search(chosen | bit, undecided & ~bit);
    search(chosen, undecided & ~bit);
  }

  const MaskedHypergraph& g_;
  mask_t best_ = 0;
  int best_size_ = 0;
};

// Min-degree greedy with lowest-id tie breaking; only seeds the search.
mask_t greedy_seed(const MaskedHypergraph& g) {
  mask_t chosen = 0;
  mask_t undecided = g.n == 64 ? ~mask_t{0} : (mask_t{1} << g.n) - 1;
  while (true) {
    mask_t free = g.propagate(chosen, undecided);
    chosen |= free;
    undecided &= ~free;
    if (!undecided) break;
    vertex_id pick = 0;
    std::size_t pick_live = SIZE_MAX;
    for (mask_t rest = undecided; rest; rest &= rest - 1) {
      auto v = static_cast<vertex_id>(std::countr_zero(rest));
      std::size_t live = 0;
      for (mask_t e : g.incident[v])
        if ((e & ~(chosen | undecided)) == 0) ++live;
      if (live < pick_live) {
        pick_live = live;
        pick = v;
      }
    }
    chosen |= mask_t{1} << pick;
    undecided &= ~(mask_t{1} << pick);
  }
  return chosen;
}

void count_sets(const MaskedHypergraph& g, mask_t chosen, mask_t undecided, int free_count,
                std::vector<std::uint64_t>& counts) {
  mask_t free = g.propagate(chosen, undecided);
  undecided &= ~free;
  free_count += std::popcount(free);
  if (undecided == 0) {
    int base = std::popcount(chosen);
    std::uint64_t c = 1;  // C(free_count, j), built incrementally
    for (int j = 0; j <= free_count; ++j) {
      counts[base + j] += c;
      c = static_cast<std::uint64_t>(static_cast<unsigned __int128>(c) * (free_count - j) / (j + 1));
    }
    return;
  }
  vertex_id v = g.branch_vertex(chosen, undecided);
  mask_t bit = mask_t{1} << v;
  count_sets(g, chosen | bit, undecided & ~bit, free_count, counts);
  count_sets(g, chosen, undecided & ~bit, free_count, counts);
}

}  // namespace

std::vector<vertex_id> maximum_independent_set(const Hypergraph& h, std::size_t cap) {
  check_cap(h, cap);
  MaskedHypergraph g(h);
  AlphaSearch search(g);
  search.run(greedy_seed(g));
  std::vector<vertex_id> out;
  for (mask_t rest = search.best(); rest; rest &= rest - 1)
    out.push_back(static_cast<vertex_id>(std::countr_zero(rest)));
  return out;
}

std::size_t exact_alpha(const Hypergraph& h, std::size_t cap) {
  return maximum_independent_set(h, cap).size();
}

std::vector<std::uint64_t> independent_set_counts(const Hypergraph& h, std::size_t cap) {
  check_cap(h, cap);
  MaskedHypergraph g(h);
  std::vector<std::uint64_t> counts(h.n() + 1, 0);
  mask_t all = h.n() == 64 ? ~mask_t{0} : (mask_t{1} << h.n()) - 1;
  count_sets(g, 0, all, 0, counts);
  return counts;
}

BigRational independent_sum(const Hypergraph& h, std::size_t cap) {
  auto counts = independent_set_counts(h, cap);
  BigRational sum = 0;
  for (std::size_t j = 0; j < counts.size(); ++j)
    if (counts[j]) sum += BigRational(BigInt(counts[j]), binom(h.n(), j));
  return sum;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

InequalityCheck check_hgraph_inequality(const Hypergraph& h, std::size_t cap) {
  if (h.m() == 0) throw undefined_error("independent-set inequality needs m >= 1");
  InequalityCheck check;
  check.lhs = independent_sum(h, cap);
  const HighPrecision k = h.k();
  check.rhs = pow(HighPrecision(2), -(k + 1) / k) * HighPrecision(h.n()) /
              pow(HighPrecision(h.m()), 1 / k);
  HighPrecision lhs = to_high_precision(check.lhs);
  HighPrecision scale = std::max(HighPrecision(1), abs(check.rhs));
  HighPrecision gap = lhs - check.rhs;
  if (abs(gap) <= HighPrecision("1e-45") * scale)
    check.verdict = Verdict::indeterminate;
  else
    check.verdict = gap > 0 ? Verdict::holds : Verdict::fails;
  return check;
}

}  // namespace indepbound
