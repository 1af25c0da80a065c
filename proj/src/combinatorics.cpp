#include "indepbound/combinatorics.hpp"

#include <functional>
#include <string>

#include "indepbound/error.hpp"

namespace indepbound {
namespace {

BigInt pow_int(std::int64_t base, std::int64_t exp) {
  BigInt result = 1;
  for (std::int64_t i = 0; i < exp; ++i) result *= base;
  return result;
}

BigRational sign(std::int64_t r) { return (r % 2 == 0) ? BigRational(1) : BigRational(-1); }

void require(bool ok, const std::string& what) {
  if (!ok) throw input_error(what);
}

// Calls visit(parts) for every composition of `total` into `parts.size()`
// non-negative parts.
void for_each_composition(std::int64_t total, std::vector<std::int64_t>& parts,
                          std::size_t index,
                          const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  if (parts.empty()) {
    if (total == 0) visit(parts);
    return;
  }
  if (index + 1 == parts.size()) {
    parts[index] = total;
    visit(parts);
    return;
  }
  for (std::int64_t x = 0; x <= total; ++x) {
    parts[index] = x;
    for_each_composition(total - x, parts, index + 1, visit);
  }
}

}  // namespace

BigRational frac_binom(std::int64_t d, std::int64_t t, std::int64_t a) {
  require(d >= 0 && t >= 1 && a >= 0,
          "frac_binom needs d >= 0, t >= 1, a >= 0 (got d=" + std::to_string(d) +
              ", t=" + std::to_string(t) + ", a=" + std::to_string(a) + ")");
  BigInt num = 1;
  for (std::int64_t j = 0; j < a; ++j) num *= t * (d - j) + 1;
  return BigRational(num, factorial(a) * pow_int(t, a));
}

BigRational general_binom(const BigRational& x, std::int64_t a) {
  require(a >= 0, "general_binom needs a >= 0");
  BigRational value = 1;
  for (std::int64_t j = 0; j < a; ++j) value *= x - j;
  return value / BigRational(factorial(a));
}

IdentityCheck verify_lemma_azero(std::int64_t d, std::int64_t t) {
  require(d >= 0 && t >= 1, "lemma (no backward edge) needs d >= 0, t >= 1");
  IdentityCheck check;
  for (std::int64_t r = 0; r <= d; ++r)
    check.lhs += sign(r) * BigRational(binom(d, r), BigInt(t * r + 1));
  check.rhs = 1 / frac_binom(d, t, d);
  return check;
}

IdentityCheck verify_lemma_mpie(std::int64_t a, std::int64_t b) {
  require(a >= 0 && b >= 0, "MPIE lemma needs a, b >= 0");
  IdentityCheck check;
  for (std::int64_t i = 0; i <= b; ++i)
    check.lhs += sign(i) * BigRational(binom(a + b, a + i) * multichoose(a, i));
  check.rhs = 1;
  return check;
}

IdentityCheck verify_lemma_genrla(std::int64_t d, std::int64_t A, std::int64_t t) {
  require(d >= A && A >= 0 && t >= 1, "lemma (few backward edges) needs d >= A >= 0, t >= 1");
  IdentityCheck check;
  for (std::int64_t r = 0; r <= d - A; ++r)
    check.lhs += sign(r) * BigRational(binom(d, r + A) * multichoose(A, r),
                                       BigInt(t * (r + A) + 1));
  check.rhs = 1 - rational(A * t, t * A + 1) * BigRational(binom(d, A)) / frac_binom(d, t, d - A);
  return check;
}

IdentityCheck verify_partial_sum_claim(std::int64_t d, std::int64_t A, std::int64_t t) {
  require(d >= A && A >= 1 && t >= 1, "partial-sum claim needs d >= A >= 1, t >= 1");
  IdentityCheck check;
  BigRational sum = 0;
  for (std::int64_t r = 0; r <= d - A; ++r) {
    BigRational x = BigRational(A + r) + rational(1, t);
    sum += BigRational(binom(A - 1 + r, A - 1)) / general_binom(x, r);
  }
  check.lhs = sum / BigRational(t * A + 1);
  check.rhs = 1 - rational(t * A, t * A + 1) * BigRational(binom(d, A)) / frac_binom(d, t, d - A);
  return check;
}

SetSystem SetSystem::from_lists(std::size_t universe,
                                const std::vector<std::vector<std::size_t>>& lists) {
  SetSystem system;
  system.universe = universe;
  for (const auto& list : lists) {
    boost::dynamic_bitset<> bits(universe);
    for (auto x : list) {
      require(x < universe, "set element " + std::to_string(x) + " outside the universe");
      bits.set(x);
    }
    system.sets.push_back(std::move(bits));
  }
  return system;
}

MpieCheck verify_mpie(const SetSystem& system, std::int64_t a) {
  const auto d = static_cast<std::int64_t>(system.sets.size());
  require(a >= 0 && a <= d, "MPIE needs 0 <= a <= number of sets");
  if (system.sets.size() > kMaxMpieSets)
    throw capacity_error("MPIE enumeration supports at most " + std::to_string(kMaxMpieSets) +
                         " sets");
  for (const auto& s : system.sets)
    require(s.size() == system.universe, "set bitset size differs from the universe");

  MpieCheck check;
  for (std::size_t x = 0; x < system.universe; ++x) {
    std::int64_t hits = 0;
    for (const auto& s : system.sets) hits += s.test(x) ? 1 : 0;
    if (hits >= a) ++check.direct;
  }

  std::vector<BigInt> n_j(d + 1, 0);
  const std::uint64_t subsets = std::uint64_t{1} << d;
  boost::dynamic_bitset<> inter(system.universe);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    inter.set();
    int size = 0;
    for (std::int64_t i = 0; i < d; ++i)
      if (mask >> i & 1) {
        inter &= system.sets[i];
        ++size;
      }
    n_j[size] += inter.count();
  }
  for (std::int64_t i = 0; i <= d - a; ++i)
    check.formula += sign(i) * BigRational(multichoose(a, i) * n_j[i + a]);
  return check;
}

std::string to_string(Identity which) {
  switch (which) {
    case Identity::triple_threshold: return "triple_threshold";
    case Identity::triple_zero: return "triple_zero";
    case Identity::halving_sum: return "halving_sum";
    case Identity::general_threshold: return "general_threshold";
  }
  return "?";
}

IdentityCheck verify_identity(Identity which, const IdentityParams& p) {
  IdentityCheck check;
  const auto d = p.d, A = p.A, t = p.t;
  switch (which) {
    case Identity::triple_threshold: {
      require(d >= A && A >= 0, "triple_threshold needs d >= A >= 0");
      BigInt lhs = 0;
      for (std::int64_t a = 0; a <= A; ++a)
        for (std::int64_t i = 0; i <= d - a; ++i)
          lhs += binom(d, a + i) * binom(a + i, i) * pow_int(2, i) *
                 factorial(2 * d - 2 * a - i) * factorial(2 * a + i);
      check.lhs = BigRational(lhs);
      BigInt df = factorial(d);
      check.rhs = BigRational(df * df * pow_int(4, d - A) * (A + 1) * binom(2 * A + 1, A));
      return check;
    }
    case Identity::triple_zero: {
      require(d >= 0, "triple_zero needs d >= 0");
      BigInt lhs = 0;
      for (std::int64_t i = 0; i <= d; ++i)
        lhs += binom(d, i) * pow_int(2, i) * factorial(2 * d - i) * factorial(i);
      check.lhs = BigRational(lhs);
      BigInt base = factorial(d) * pow_int(2, d);
      check.rhs = BigRational(base * base);
      return check;
    }
    case Identity::halving_sum: {
      require(d >= 0, "halving_sum needs d >= 0");
      for (std::int64_t i = 0; i <= d; ++i)
        check.lhs += BigRational(binom(d + i, d), pow_int(2, i));
      check.rhs = BigRational(pow_int(2, d));
      return check;
    }
    case Identity::general_threshold: {
      require(d >= A + 1 && A >= 0 && t >= 2, "general_threshold needs d >= A+1 >= 1 and t >= 2");
      BigInt lhs = 0;
      std::vector<std::int64_t> parts(t - 1, 0);
      for (std::int64_t a = 0; a <= A; ++a)
        for (std::int64_t i = 0; i <= d - a; ++i)
          for_each_composition(i, parts, 0, [&](const std::vector<std::int64_t>& comp) {
            BigInt term = binom(d, a + i) * factorial(a + i) / factorial(a);
            std::int64_t before = t * a;
            for (std::size_t j = 0; j < comp.size(); ++j) {
              const auto c = comp[j];
              const auto jj = static_cast<std::int64_t>(j) + 1;
              term /= factorial(c);
              term *= pow_int(static_cast<std::int64_t>(binom(t, jj)), c);
              before += jj * c;
            }
            term *= factorial(before) * factorial(t * d - before);
            lhs += term;
          });
      check.lhs = BigRational(lhs);
      BigRational shrink = 1 / (1 + rational(1, t * A + t));
      check.rhs = BigRational(factorial(t * d + 1)) * shrink * BigRational(binom(d, A + 1)) /
                  frac_binom(d, t, d - A - 1);
      return check;
    }
  }
  throw input_error("unknown identity");
}

}  // namespace indepbound
