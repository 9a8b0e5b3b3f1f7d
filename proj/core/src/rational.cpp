#include "incrtree/rational.hpp"

namespace incrtree {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational binomial_rational(const Rational& a, unsigned k) {
  Rational num = 1;
  for (unsigned i = 0; i < k; ++i) num *= (a - static_cast<int>(i));
  return num / Rational(factorial(k));
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      const BigInt num(s.substr(0, slash));
      const BigInt den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rational(num, den);
    }
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      if (frac.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad decimal literal");
      std::string digits = s.substr(0, dot) + frac;
      BigInt den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      return Rational(BigInt(digits), den);
    }
    return Rational(BigInt(s));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: " + s);
  }
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace incrtree
