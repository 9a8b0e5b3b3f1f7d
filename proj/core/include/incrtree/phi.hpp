#pragma once

#include "incrtree/rational.hpp"

namespace incrtree {

// Weight function of the d-ary variance double series:
//   phi_k(x) = (1-x)^{-1} * integral_x^1 (1-w)^{d/(d-1)} w^{k-1} dw.
//
// Closed form: expanding w^{k-1} in powers of (1-w) gives
//   phi_k(x) = sum_{i<k} (-1)^i C(k-1,i) (1-x)^{beta+i} / (beta+i+1),
// an alternating sum with exact rational coefficients in beta = d/(d-1).
// The sum cancels heavily for large k, so it is evaluated in 50-digit
// floating point; quadrature is the authoritative route beyond k ~ 20.
double phi(int d, int k, double x);

// Adaptive tanh-sinh quadrature of the defining integral.
double phi_quadrature(int d, int k, double x);

// integral_0^1 phi_k1(x) phi_k2(x) dx, exact rational coefficient product.
double phi_inner_product(int d, int k1, int k2);
Rational phi_inner_product_rational(int d, int k1, int k2);

// Independent route: nested quadrature (phi values themselves by quadrature).
double phi_inner_product_quadrature(int d, int k1, int k2);

// GPORT weight function. Theorem-2-as-printed defines
//   varphi_k(x) = integral_x^1 (1-w)^{alpha/(alpha+1)} w^{k-1} dw
// without the (1-x)^{-1} prefactor of phi. Both normalizations are
// implemented; the variance sign probe computes the constants under each and
// reports which one simulation supports (see GportConstants).
enum class VarphiNorm {
  plain,      // as printed: the bare integral
  prefactor,  // with the (1-x)^{-1} prefactor, mirroring phi
};

double varphi(const Rational& alpha, int k, double x,
              VarphiNorm norm = VarphiNorm::plain);
double varphi_quadrature(const Rational& alpha, int k, double x,
                         VarphiNorm norm = VarphiNorm::plain);
double varphi_inner_product(const Rational& alpha, int k1, int k2,
                            VarphiNorm norm = VarphiNorm::plain);
Rational varphi_inner_product_rational(const Rational& alpha, int k1, int k2,
                                       VarphiNorm norm = VarphiNorm::plain);
double varphi_inner_product_quadrature(const Rational& alpha, int k1, int k2,
                                       VarphiNorm norm = VarphiNorm::plain);

}  // namespace incrtree
