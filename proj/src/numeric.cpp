#include "indepbound/numeric.hpp"

#include <sstream>

#include "indepbound/error.hpp"

namespace indepbound {

BigInt factorial(std::int64_t n) {
  if (n < 0) throw input_error("factorial of negative number");
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binom(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

BigInt multichoose(std::int64_t a, std::int64_t i) {
  if (i < 0 || a < 0) return 0;
  if (i == 0) return 1;
  return binom(a + i - 1, i);
}

BigRational rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw input_error("zero denominator");
  return BigRational(BigInt(num), BigInt(den));
}

HighPrecision to_high_precision(const BigRational& q) {
  HighPrecision num(numerator(q));
  HighPrecision den(denominator(q));
  return num / den;
}

std::string to_string(const BigRational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const HighPrecision& x, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << x;
  return out.str();
}

BigRational parse_rational(const std::string& text) {
  auto fail = [&]() -> BigRational {
    throw input_error("not a rational number: '" + text + "'");
  };
  if (text.empty()) return fail();
  auto all_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  // cpp_int reads a leading 0 as an octal prefix.
  auto integer = [](const std::string& digits) {
    auto first = digits.find_first_not_of('0');
    return first == std::string::npos ? BigInt(0) : BigInt(digits.substr(first));
  };
  std::string body = text;
  bool negative = false;
  if (body[0] == '-' || body[0] == '+') {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  BigRational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    BigInt d = integer(den);
    if (d == 0) return fail();
    value = BigRational(integer(num), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac))) return fail();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = BigRational(integer(whole + frac), scale);
  } else {
    if (!all_digits(body)) return fail();
    value = BigRational(integer(body));
  }
  return negative ? BigRational(-value) : value;
}

}  // namespace indepbound
