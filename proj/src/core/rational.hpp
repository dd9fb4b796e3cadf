#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace planex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", "p", or a plain decimal such as "0.5" (converted exactly).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

template <class T>
T ipow(T base, unsigned exponent) {
  T result(1);
  while (exponent) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace planex
