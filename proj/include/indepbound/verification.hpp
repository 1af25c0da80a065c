#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace indepbound {

struct CheckResult {
  std::string name;
  std::map<std::string, std::string> params;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_pass() const { return failed() == 0; }
  void append(const VerificationReport& other);
};

struct VerifyOptions {
  // Largest t*d enumerated by brute force (orderings of t*d + 1 elements).
  std::int64_t max_td = 10;
  std::size_t random_systems = 1000;
  std::uint64_t seed = 7;
};

/// Exact identity grids: the no-backward-edge lemma (d <= 12, t <= 5), the
/// MPIE lemma (a, b <= 10), the few-backward-edges lemma and the partial-sum
/// claim (A <= d <= 10, t <= 4), the ordering-count identities,
/// fractional-binomial consistency, and the triple_threshold /
/// general_threshold counts against brute-force enumeration.
VerificationReport verify_identities(const VerifyOptions& options);

/// Closed-form probabilities against full enumeration for every (d, t) with
/// t*d <= max_td and every A in [1, d+1]; plus the p_zero / q_at_least /
/// monotonicity grids.
VerificationReport verify_probability(const VerifyOptions& options);

/// Generalised inclusion-exclusion against direct counting on seeded random
/// set systems (<= 6 sets, universe <= 12), every admissible a.
VerificationReport verify_mpie_random(const VerifyOptions& options);

/// "identities", "probability", "mpie" or "all".
VerificationReport run_verification(const std::string& suite, const VerifyOptions& options);

}  // namespace indepbound
