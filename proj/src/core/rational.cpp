#include "core/rational.hpp"

#include <cctype>

#include "core/error.hpp"

namespace planex {
namespace {

BigInt parse_integer(std::string_view digits, std::string_view context) {
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  require(!digits.empty(), ErrorKind::Parse, "bad rational '" + std::string(context) + "'");
  BigInt value = 0;
  for (char c : digits) {
    require(std::isdigit(static_cast<unsigned char>(c)), ErrorKind::Parse,
            "bad rational '" + std::string(context) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    require(den != 0, ErrorKind::InvalidArgument, "rational with zero denominator");
    return Rational(parse_integer(text.substr(0, slash), text), den);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_integer(text, text));
  const std::string_view frac = text.substr(dot + 1);
  const std::string whole = std::string(text.substr(0, dot)) + std::string(frac);
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  return Rational(parse_integer(whole, text), scale);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace planex
