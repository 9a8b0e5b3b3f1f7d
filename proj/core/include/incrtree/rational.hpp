#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace incrtree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an enumeration or simulation request exceeds its configured budget.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt factorial(unsigned n);

// Generalized binomial C(a, k) = a(a-1)...(a-k+1) / k! for rational a.
Rational binomial_rational(const Rational& a, unsigned k);

// Parses "3", "-2/7" or a plain decimal like "0.5" into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

}  // namespace incrtree
