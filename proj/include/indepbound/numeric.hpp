#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace indepbound {

using BigInt = boost::multiprecision::cpp_int;
// Always normalised: positive denominator, lowest terms.
using BigRational = boost::multiprecision::cpp_rational;
// 60 decimal digits; used only where a real power or logarithm is unavoidable.
using HighPrecision = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<60>,
    boost::multiprecision::et_off>;

inline constexpr int kReportDigits = 30;

BigInt factorial(std::int64_t n);

// C(n, r) for integers; 0 whenever n < 0, r < 0 or r > n.
BigInt binom(std::int64_t n, std::int64_t r);

// C(a + i - 1, i): the number of size-i multisets over a types.
// multichoose(0, 0) == 1 and multichoose(0, i) == 0 for i >= 1.
BigInt multichoose(std::int64_t a, std::int64_t i);

BigRational rational(std::int64_t num, std::int64_t den = 1);

HighPrecision to_high_precision(const BigRational& q);

// "p/q" (or "p" for integers).
std::string to_string(const BigRational& q);
std::string to_string(const HighPrecision& x, int digits = kReportDigits);

// Parses "p", "p/q" or a finite decimal like "0.5" exactly.
BigRational parse_rational(const std::string& text);

}  // namespace indepbound
