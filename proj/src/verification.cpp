#include "indepbound/verification.hpp"

#include <algorithm>

#include "indepbound/combinatorics.hpp"
#include "indepbound/error.hpp"
#include "indepbound/permutation.hpp"
#include "indepbound/rng.hpp"

namespace indepbound {
namespace {

using Params = std::map<std::string, std::string>;

std::string s(std::int64_t x) { return std::to_string(x); }

CheckResult from_identity(std::string name, Params params, const IdentityCheck& c) {
  return {std::move(name), std::move(params), c.equal(), to_string(c.lhs), to_string(c.rhs), ""};
}

// Cumulative enumerated probability of at most `bound` backward edges.
BigRational cumulative(const std::map<std::int64_t, BigRational>& dist, std::int64_t bound) {
  BigRational sum = 0;
  for (const auto& [b, p] : dist)
    if (b <= bound) sum += p;
  return sum;
}

class DistributionCache {
 public:
  explicit DistributionCache(std::int64_t max_td) : max_td_(max_td) {}

  const std::map<std::int64_t, BigRational>* get(std::int64_t d, std::int64_t t) {
    if (t * d > max_td_) return nullptr;
    auto key = std::make_pair(d, t);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, enumerate_star_distribution(StarConfig(d, t), max_td_ + 1)).first;
    return &it->second;
  }

 private:
  std::int64_t max_td_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::map<std::int64_t, BigRational>> cache_;
};

// Which "at most" threshold the ordering count lhs / (td+1)! reproduces.
CheckResult threshold_check(const std::string& name, const IdentityCheck& id, std::int64_t d,
                            std::int64_t t, std::int64_t A, DistributionCache& cache) {
  CheckResult r{name, {{"d", s(d)}, {"t", s(t)}, {"A", s(A)}}, false, "", "", ""};
  const auto* dist = cache.get(d, t);
  if (!dist) {
    r.pass = true;
    r.note = "skipped: t*d beyond enumeration cap";
    return r;
  }
  BigRational prob = id.lhs / BigRational(factorial(t * d + 1));
  r.lhs = to_string(prob);
  BigRational at_most_A = cumulative(*dist, A);
  BigRational at_most_A_minus_1 = cumulative(*dist, A - 1);
  r.rhs = to_string(at_most_A);
  if (prob == at_most_A) {
    r.pass = true;
    r.note = "lhs/(td+1)! = P(at most A backward edges)";
  } else if (prob == at_most_A_minus_1) {
    r.pass = true;
    r.note = "lhs/(td+1)! = P(at most A-1 backward edges)";
  } else {
    r.note = "lhs/(td+1)! matches neither threshold";
  }
  return r;
}

}  // namespace

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

std::size_t VerificationReport::failed() const { return checks.size() - passed(); }

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

VerificationReport verify_identities(const VerifyOptions& options) {
  VerificationReport report{"identities", {}};
  auto& out = report.checks;
  DistributionCache cache(options.max_td);

  for (std::int64_t d = 0; d <= 12; ++d)
    for (std::int64_t t = 1; t <= 5; ++t)
      out.push_back(from_identity("lemma_azero", {{"d", s(d)}, {"t", s(t)}},
                                  verify_lemma_azero(d, t)));
  for (std::int64_t a = 0; a <= 10; ++a)
    for (std::int64_t b = 0; b <= 10; ++b)
      out.push_back(from_identity("lemma_mpie", {{"a", s(a)}, {"b", s(b)}},
                                  verify_lemma_mpie(a, b)));
  for (std::int64_t t = 1; t <= 4; ++t)
    for (std::int64_t d = 0; d <= 10; ++d)
      for (std::int64_t A = 0; A <= d; ++A) {
        Params p{{"d", s(d)}, {"A", s(A)}, {"t", s(t)}};
        out.push_back(from_identity("lemma_genrla", p, verify_lemma_genrla(d, A, t)));
        if (A >= 1)
          out.push_back(from_identity("partial_sum_claim", p, verify_partial_sum_claim(d, A, t)));
      }

  for (std::int64_t d = 0; d <= 10; ++d)
    for (std::int64_t t = 1; t <= 5; ++t)
      for (std::int64_t a = 0; a <= d; ++a) {
        BigRational frac = frac_binom(d, t, a);
        BigRational gen = general_binom(BigRational(d) + rational(1, t), a);
        out.push_back({"frac_binom_vs_general", {{"d", s(d)}, {"t", s(t)}, {"a", s(a)}},
                       frac == gen, to_string(frac), to_string(gen), ""});
      }
  for (std::int64_t d = 0; d <= 11; ++d)
    for (std::int64_t a = 0; a <= d + 1; ++a) {
      BigRational frac = frac_binom(d, 1, a);
      BigRational ordinary(binom(d + 1, a));
      out.push_back({"frac_binom_t1", {{"d", s(d)}, {"a", s(a)}}, frac == ordinary,
                     to_string(frac), to_string(ordinary), ""});
    }

  for (std::int64_t d = 0; d <= 10; ++d)
    for (std::int64_t A = 0; A <= d; ++A) {
      auto id = verify_identity(Identity::triple_threshold, {d, A, 2});
      out.push_back(from_identity("triple_threshold", {{"d", s(d)}, {"A", s(A)}}, id));
      out.push_back(threshold_check("triple_threshold_vs_enumeration", id, d, 2, A, cache));
    }
  for (std::int64_t d = 0; d <= 15; ++d) {
    auto two = verify_identity(Identity::triple_zero, {d, 0, 2});
    auto three = verify_identity(Identity::halving_sum, {d, 0, 2});
    out.push_back(from_identity("triple_zero", {{"d", s(d)}}, two));
    out.push_back(from_identity("halving_sum", {{"d", s(d)}}, three));
    BigInt df = factorial(d);
    BigRational reindexed = two.lhs / BigRational(df * df * (BigInt(1) << d));
    out.push_back({"halving_sum_from_triple_zero", {{"d", s(d)}}, reindexed == three.lhs,
                   to_string(reindexed), to_string(three.lhs), ""});
  }
  for (std::int64_t t = 2; t <= 3; ++t)
    for (std::int64_t d = 1; d <= 6; ++d)
      for (std::int64_t A = 0; A <= 2 && A + 1 <= d; ++A) {
        auto id = verify_identity(Identity::general_threshold, {d, A, t});
        out.push_back(from_identity("general_threshold", {{"d", s(d)}, {"A", s(A)}, {"t", s(t)}}, id));
        out.push_back(threshold_check("general_threshold_vs_enumeration", id, d, t, A, cache));
      }
  return report;
}

VerificationReport verify_probability(const VerifyOptions& options) {
  VerificationReport report{"probability", {}};
  auto& out = report.checks;
  if (options.max_td < 0) throw input_error("max-td must be non-negative");

  for (std::int64_t t = 1; t <= std::max<std::int64_t>(options.max_td, 1); ++t)
    for (std::int64_t d = 0; t * d <= options.max_td; ++d) {
      auto dist = enumerate_star_distribution(StarConfig(d, t), options.max_td + 1);
      BigRational total = cumulative(dist, d);
      out.push_back({"enumeration_total", {{"d", s(d)}, {"t", s(t)}}, total == 1,
                     to_string(total), "1", ""});
      for (std::int64_t A = 1; A <= d + 1; ++A) {
        BigRational formula = p_at_most(d, t, A - 1);
        BigRational counted = cumulative(dist, A - 1);
        out.push_back({"p_at_most_vs_enumeration", {{"d", s(d)}, {"t", s(t)}, {"A", s(A)}},
                       formula == counted, to_string(formula), to_string(counted), ""});
      }
    }

  for (std::int64_t d = 1; d <= 12; ++d)
    for (std::int64_t t = 1; t <= 5; ++t) {
      BigRational zero = p_zero(d, t), general = p_at_most(d, t, 0);
      out.push_back({"p_zero_vs_p_at_most", {{"d", s(d)}, {"t", s(t)}}, zero == general,
                     to_string(zero), to_string(general), ""});
    }
  for (std::int64_t d = 0; d <= 12; ++d) {
    BigRational zero = p_zero(d, 1), cw = rational(1, d + 1);
    out.push_back({"p_zero_graph", {{"d", s(d)}}, zero == cw, to_string(zero), to_string(cw), ""});
  }
  for (std::int64_t t = 1; t <= 4; ++t)
    for (std::int64_t d = 0; d <= 10; ++d)
      for (std::int64_t A = 0; A <= d; ++A) {
        auto q = q_at_least(d, t, A);
        out.push_back({"q_at_least_forms", {{"d", s(d)}, {"t", s(t)}, {"A", s(A)}}, q.agree(),
                       to_string(q.value), to_string(q.mpie_sum), ""});
      }
  for (std::int64_t t = 1; t <= 4; ++t)
    for (std::int64_t d = 0; d <= 10; ++d)
      for (std::int64_t am1 = 0; am1 <= 11; ++am1) {
        BigRational p = p_at_most(d, t, am1);
        bool ok = p_at_most(d, t, am1 + 1) >= p && p_at_most(d + 1, t, am1) <= p;
        out.push_back({"p_at_most_monotone", {{"d", s(d)}, {"t", s(t)}, {"A", s(am1 + 1)}}, ok,
                       to_string(p), "", ""});
      }
  return report;
}

VerificationReport verify_mpie_random(const VerifyOptions& options) {
  VerificationReport report{"mpie", {}};
  for (std::size_t trial = 0; trial < options.random_systems; ++trial) {
    TrialRng rng(options.seed, trial);
    const std::size_t universe = 1 + rng.below(12);
    const std::size_t sets = 1 + rng.below(6);
    SetSystem system;
    system.universe = universe;
    for (std::size_t i = 0; i < sets; ++i) {
      boost::dynamic_bitset<> bits(universe);
      for (std::size_t x = 0; x < universe; ++x)
        if (rng.below(2)) bits.set(x);
      system.sets.push_back(std::move(bits));
    }
    for (std::int64_t a = 0; a <= static_cast<std::int64_t>(sets); ++a) {
      auto c = verify_mpie(system, a);
      report.checks.push_back({"mpie_random",
                               {{"system", std::to_string(trial)},
                                {"sets", std::to_string(sets)},
                                {"universe", std::to_string(universe)},
                                {"a", s(a)}},
                               c.equal(), c.direct.str(), to_string(c.formula), ""});
    }
  }
  return report;
}

VerificationReport run_verification(const std::string& suite, const VerifyOptions& options) {
  if (suite == "identities") return verify_identities(options);
  if (suite == "probability") return verify_probability(options);
  if (suite == "mpie") return verify_mpie_random(options);
  if (suite == "all") {
    VerificationReport all{"all", {}};
    all.append(verify_identities(options));
    all.append(verify_probability(options));
    all.append(verify_mpie_random(options));
    return all;
  }
  throw input_error("unknown suite '" + suite + "' (expected identities, probability, mpie, all)");
}

}  // namespace indepbound
