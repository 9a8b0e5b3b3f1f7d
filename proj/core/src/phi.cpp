#include "incrtree/phi.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <vector>

namespace incrtree {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

// Coefficients c_i = (-1)^i C(k-1, i) / (base + i + 1) for the expansion of
// the integral in powers of (1-x); exponent of term i is base + i (+1 for
// the un-prefactored variant).
std::vector<Rational> expansion_coefficients(const Rational& base, int k) {
  std::vector<Rational> c(k);
  BigInt binom = 1;  // C(k-1, i)
  for (int i = 0; i < k; ++i) {
    c[i] = Rational(binom) / (base + i + 1);
    if (i % 2 == 1) c[i] = -c[i];
    binom = binom * (k - 1 - i) / (i + 1);
  }
  return c;
}

double closed_form_point(const Rational& base, int k, double x,
                         bool prefactor) {
  if (!(x >= 0.0) || x > 1.0 || (prefactor && x == 1.0))
    throw std::invalid_argument(prefactor ? "x must lie in [0, 1)"
                                          : "x must lie in [0, 1]");
  if (x == 1.0) return 0.0;
  const auto coeff = expansion_coefficients(base, k);
  const Float50 u = Float50(1) - Float50(x);
  const Float50 base50(base.convert_to<Float50>());
  Float50 sum = 0;
  for (int i = 0; i < k; ++i) {
    const Float50 expo = base50 + i + (prefactor ? 0 : 1);
    sum += coeff[i].convert_to<Float50>() * pow(u, expo);
  }
  return sum.convert_to<double>();
}

double quadrature_point(double expo, int k, double x, bool prefactor) {
  if (!(x >= 0.0) || x > 1.0 || (prefactor && x == 1.0))
    throw std::invalid_argument("x out of range");
  if (x == 1.0) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  const auto f = [&](double w) {
    return std::pow(1.0 - w, expo) * std::pow(w, k - 1);
  };
  const double integral = integrator.integrate(f, x, 1.0, 1e-13);
  return prefactor ? integral / (1.0 - x) : integral;
}

Rational inner_product_closed(const Rational& base, int k1, int k2,
                              int exponent_shift) {
  const auto a = expansion_coefficients(base, k1);
  const auto b = expansion_coefficients(base, k2);
  // term (i,j) integrates (1-x)^(2 base + i + j + shift) over [0,1]
  Rational sum = 0;
  for (int i = 0; i < k1; ++i)
    for (int j = 0; j < k2; ++j)
      sum += a[i] * b[j] / (2 * base + i + j + exponent_shift + 1);
  return sum;
}

double inner_product_quadrature(double expo, int k1, int k2, bool prefactor) {
  // fixed-order composite Gauss-Legendre on a mesh graded toward x = 1
  // (adaptive outer rules over-refine on the inner quadrature's noise floor);
  // the inner integrals stay adaptive
  const auto f = [&](double x) {
    return quadrature_point(expo, k1, x, prefactor) *
           quadrature_point(expo, k2, x, prefactor);
  };
  static const double mesh[] = {0.0,  0.25, 0.5,  0.75, 0.9,
                                0.96, 0.99, 0.999, 1.0};
  double total = 0;
  for (std::size_t i = 0; i + 1 < std::size(mesh); ++i)
    total += boost::math::quadrature::gauss<double, 64>::integrate(
        f, mesh[i], mesh[i + 1]);
  return total;
}

Rational dary_beta(int d) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  return Rational(d, d - 1);
}

Rational gport_gamma(const Rational& alpha) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  return alpha / (alpha + 1);
}

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

}  // namespace

double phi(int d, int k, double x) {
  check_k(k);
  return closed_form_point(dary_beta(d), k, x, /*prefactor=*/true);
}

double phi_quadrature(int d, int k, double x) {
  check_k(k);
  return quadrature_point(to_double(dary_beta(d)), k, x, /*prefactor=*/true);
}

double phi_inner_product(int d, int k1, int k2) {
  return to_double(phi_inner_product_rational(d, k1, k2));
}

Rational phi_inner_product_rational(int d, int k1, int k2) {
  check_k(k1);
  check_k(k2);
  return inner_product_closed(dary_beta(d), k1, k2, /*exponent_shift=*/0);
}

double phi_inner_product_quadrature(int d, int k1, int k2) {
  check_k(k1);
  check_k(k2);
  return inner_product_quadrature(to_double(dary_beta(d)), k1, k2,
                                  /*prefactor=*/true);
}

double varphi(const Rational& alpha, int k, double x, VarphiNorm norm) {
  check_k(k);
  return closed_form_point(gport_gamma(alpha), k, x,
                           norm == VarphiNorm::prefactor);
}

double varphi_quadrature(const Rational& alpha, int k, double x,
                         VarphiNorm norm) {
  check_k(k);
  return quadrature_point(to_double(gport_gamma(alpha)), k, x,
                          norm == VarphiNorm::prefactor);
}

double varphi_inner_product(const Rational& alpha, int k1, int k2,
                            VarphiNorm norm) {
  return to_double(varphi_inner_product_rational(alpha, k1, k2, norm));
}

Rational varphi_inner_product_rational(const Rational& alpha, int k1, int k2,
                                       VarphiNorm norm) {
  check_k(k1);
  check_k(k2);
  return inner_product_closed(gport_gamma(alpha), k1, k2,
                              norm == VarphiNorm::prefactor ? 0 : 2);
}

double varphi_inner_product_quadrature(const Rational& alpha, int k1, int k2,
                                       VarphiNorm norm) {
  check_k(k1);
  check_k(k2);
  return inner_product_quadrature(to_double(gport_gamma(alpha)), k1, k2,
                                  norm == VarphiNorm::prefactor);
}

}  // namespace incrtree
