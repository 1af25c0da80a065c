#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "indepbound/numeric.hpp"

namespace indepbound {

/// The fractional binomial C(d + 1/t, a):
///   prod_{j=0}^{a-1} (t(d-j) + 1) / (a! t^a),   1 when a = 0.
/// For t = 1 this is the ordinary C(d + 1, a).
/// Throws input_error for d < 0, t < 1 or a < 0.
BigRational frac_binom(std::int64_t d, std::int64_t t, std::int64_t a);

/// x (x-1) ... (x-a+1) / a! for rational x.
BigRational general_binom(const BigRational& x, std::int64_t a);

/// Both sides of an identity, evaluated exactly.
struct IdentityCheck {
  BigRational lhs;
  BigRational rhs;
  bool equal() const { return lhs == rhs; }
};

/// sum_{r=0}^{d} (-1)^r C(d,r) / (tr+1)  vs  1 / C(d+1/t, d).
IdentityCheck verify_lemma_azero(std::int64_t d, std::int64_t t);

/// sum_{i=0}^{b} (-1)^i C(a+b, a+i) C(a+i-1, i)  vs  1.
IdentityCheck verify_lemma_mpie(std::int64_t a, std::int64_t b);

/// sum_{r=0}^{d-A} (-1)^r C(d, r+A) C(A+r-1, r) / (t(r+A)+1)
///   vs  1 - (At/(tA+1)) C(d,A) / C(d+1/t, d-A).
IdentityCheck verify_lemma_genrla(std::int64_t d, std::int64_t A, std::int64_t t);

/// (1/(tA+1)) sum_{r=0}^{d-A} C(A-1+r, A-1) / C(A+1/t+r, r)
///   vs  1 - (tA/(tA+1)) C(d,A) / C(d+1/t, d-A).   Requires d >= A >= 1.
IdentityCheck verify_partial_sum_claim(std::int64_t d, std::int64_t A, std::int64_t t);

/// Subsets E_1..E_d of the universe {0, ..., universe-1}; sets may repeat.
struct SetSystem {
  std::size_t universe = 0;
  std::vector<boost::dynamic_bitset<>> sets;

  static SetSystem from_lists(std::size_t universe,
                              const std::vector<std::vector<std::size_t>>& lists);
};

inline constexpr std::size_t kMaxMpieSets = 20;

struct MpieCheck {
  BigInt direct;        // elements lying in at least a of the sets, by counting
  BigRational formula;  // sum_i (-1)^i C(a+i-1, i) N_{i+a}
  bool equal() const { return BigRational(direct) == formula; }
};

/// Generalised inclusion-exclusion against direct counting. N_j sums the
/// sizes of all j-fold intersections (N_0 is the universe size).
/// Requires 0 <= a <= number of sets <= kMaxMpieSets.
MpieCheck verify_mpie(const SetSystem& system, std::int64_t a);

struct IdentityParams {
  std::int64_t d = 0;
  std::int64_t A = 0;
  std::int64_t t = 2;
};

/// Closed-form identities derived from counting orderings:
///   triple_threshold: sum_{a<=A} sum_i C(d,a+i) C(a+i,i) 2^i (2d-2a-i)! (2a+i)!
///        = (d!)^2 4^{d-A} (A+1) C(2A+1,A)                      (d >= A >= 0)
///   triple_zero: sum_i C(d,i) 2^i (2d-i)! i! = (d! 2^d)^2                 (d >= 0)
///   halving_sum: sum_i C(d+i,d) 2^{-i} = 2^d                              (d >= 0)
///   general_threshold: the general-t count of orderings with at most A backward edges
///        = (td+1)! (1 + 1/(tA+t))^{-1} C(d,A+1) / C(d+1/t, d-A-1)
///                                                  (d >= A+1 >= 1, t >= 2)
/// Throws input_error outside those domains.
enum class Identity { triple_threshold, triple_zero, halving_sum, general_threshold };

std::string to_string(Identity which);

IdentityCheck verify_identity(Identity which, const IdentityParams& params);

}  // namespace indepbound
