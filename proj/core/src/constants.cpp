#include "incrtree/constants.hpp"

#include <cmath>

#include "incrtree/additive.hpp"
#include "incrtree/counting.hpp"
#include "incrtree/summation.hpp"

namespace incrtree {

namespace {

Rational rational_pow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return e < 0 ? Rational(1) / r : r;
}

// Per-size sums over all trees of each size 1..K (gport: weighted by w(T)):
//   S_m = sum f(T),  Q_m = sum f(T)^2,  P_m = sum f(T) F(T).
struct SizeSums {
  std::vector<double> S, Q, P;  // index m-1
};

SizeSums collect_size_sums(const ModelParams& model, const Toll& toll, int K,
                           const EnumLimits& limits) {
  SizeSums sums;
  sums.S.resize(K);
  sums.Q.resize(K);
  sums.P.resize(K);
  const bool weighted = model.variant == ModelParams::Variant::gport;
  std::vector<double> tolls;
  for (int m = 1; m <= K; ++m) {
    NeumaierSum S, Q, P;
    enumerate_model(model, m, [&](const IncreasingTree& t) {
      tolls.resize(t.size());
      toll.eval_nodes(t, tolls);
      const double f = tolls[0];
      NeumaierSum total;
      for (double x : tolls) total.add(x);
      const double F = total.value();
      const double w =
          weighted ? to_double(weight_port(model.alpha, t)) : 1.0;
      S.add(w * f);
      Q.add(w * f * f);
      P.add(w * f * F);
    }, limits);
    sums.S[m - 1] = S.value();
    sums.Q[m - 1] = Q.value();
    sums.P[m - 1] = P.value();
  }
  return sums;
}

void add_condition_warnings(const Toll& toll, std::vector<std::string>& out) {
  if (!toll.meta().bounded)
    out.push_back("toll '" + toll.meta().name +
                  "' is not bounded: condition (C1) fails and the limit "
                  "constants may not exist");
}

double series_coefficient(int d, int m) {
  const double a = static_cast<double>(d - 1) * m + 1;
  const double b = static_cast<double>(d - 1) * m + d;
  return static_cast<double>(d) * (d - 1) / (a * b);
}

}  // namespace

TheoremConstants mu_enumeration(int d, const Toll& toll, int K,
                                const EnumLimits& limits) {
  if (d < 2 || K < 1) throw std::invalid_argument("need d >= 2 and K >= 1");
  const SizeSums sums =
      collect_size_sums(ModelParams::make_dary(d), toll, K, limits);
  Rational invD = 1;
  NeumaierSum mu;
  for (int m = 1; m <= K; ++m) {
    invD /= (d - 1) * m + d;
    mu.add(sums.S[m - 1] * to_double(invD));
  }
  TheoremConstants out;
  out.method = TheoremConstants::Method::enumeration;
  out.mu = (d - 1) * mu.value();
  out.tree_size_cutoff = K;
  add_condition_warnings(toll, out.warnings);
  return out;
}

TheoremConstants mu_size_series(int d, const Toll& toll,
                                const ExpectedTollProfile& profile, int N) {
  if (d < 2 || N < 1) throw std::invalid_argument("need d >= 2 and N >= 1");
  if (profile.max_size() < N)
    throw std::invalid_argument("profile does not cover sizes 1.." +
                                std::to_string(N));
  NeumaierSum mu;
  double var = 0;
  bool any_mc = false;
  for (int m = 1; m <= N; ++m) {
    const ProfileEntry& e = profile.at_size(m);
    const double coef = series_coefficient(d, m);
    mu.add(coef * e.value);
    if (!e.exact) {
      any_mc = true;
      var += coef * coef * e.std_error * e.std_error;
    }
  }
  TheoremConstants out;
  out.method = TheoremConstants::Method::size_series;
  out.mu = mu.value();
  out.series_length = N;
  if (any_mc) out.mu_std_error = std::sqrt(var);
  const TollMeta& meta = toll.meta();
  if (meta.support_cutoff && *meta.support_cutoff <= N) {
    out.tail_bound = 0.0;
  } else if (meta.bounded && meta.bound) {
    // sum_{m>N} of the series coefficient telescopes to d/((d-1)N + d)
    out.tail_bound =
        *meta.bound * d / (static_cast<double>(d - 1) * N + d);
  }
  add_condition_warnings(toll, out.warnings);
  return out;
}

double exact_mean(int d, const Toll& toll, int n,
                  const ExpectedTollProfile& profile) {
  if (d < 2 || n < 1) throw std::invalid_argument("need d >= 2 and n >= 1");
  if (!profile.exact_through(n))
    throw std::invalid_argument(
        "exact_mean requires an exact profile through size " +
        std::to_string(n));
  (void)toll;
  NeumaierSum sum;
  for (int m = 1; m < n; ++m) {
    const double a = static_cast<double>(d - 1) * m + 1;
    const double b = static_cast<double>(d - 1) * m + d;
    sum.add(profile.at_size(m).value / (a * b));
  }
  return (static_cast<double>(d) * (d - 1) * n + d) * sum.value() +
         profile.at_size(n).value;
}

TheoremConstants sigma2_enumeration(int d, const Toll& toll, int K,
                                    const EnumLimits& limits,
                                    double convergence_warn_tol) {
  if (d < 2 || K < 1) throw std::invalid_argument("need d >= 2 and K >= 1");
  const SizeSums sums =
      collect_size_sums(ModelParams::make_dary(d), toll, K, limits);

  std::vector<double> invD(K + 1, 1.0);
  {
    Rational acc = 1;
    for (int m = 1; m <= K; ++m) {
      acc /= (d - 1) * m + d;
      invD[m] = to_double(acc);
    }
  }
  // inner products and the (d-1)^(1-m1-m2)/((m1-1)!(m2-1)!) weights
  std::vector<std::vector<double>> pair_weight(K + 1,
                                               std::vector<double>(K + 1));
  for (int m1 = 1; m1 <= K; ++m1)
    for (int m2 = m1; m2 <= K; ++m2) {
      const Rational w = rational_pow(d - 1, 1 - m1 - m2) *
                         phi_inner_product_rational(d, m1, m2) /
                         Rational(factorial(m1 - 1) * factorial(m2 - 1));
      pair_weight[m1][m2] = pair_weight[m2][m1] = to_double(w);
    }

  TheoremConstants out;
  out.method = TheoremConstants::Method::enumeration;
  out.tree_size_cutoff = K;
  out.sigma2_sequence.resize(K);
  for (int k = 1; k <= K; ++k) {
    NeumaierSum mu_sum;
    for (int m = 1; m <= k; ++m) mu_sum.add(sums.S[m - 1] * invD[m]);
    const double mu = (d - 1) * mu_sum.value();

    NeumaierSum term2;
    for (int m = 1; m <= k; ++m)
      term2.add((sums.Q[m - 1] - 2 * sums.P[m - 1] +
                 2 * mu * m * sums.S[m - 1]) *
                invD[m]);

    NeumaierSum term3;
    for (int m1 = 1; m1 <= k; ++m1)
      for (int m2 = 1; m2 <= k; ++m2)
        term3.add(sums.S[m1 - 1] * sums.S[m2 - 1] * pair_weight[m1][m2]);

    const double sigma2 = -mu * mu / (d - 1) - (d - 1) * term2.value() +
                          d * term3.value();
    out.sigma2_sequence[k - 1] = sigma2;
    if (k == K) {
      out.mu = mu;
      out.sigma2 = sigma2;
    }
  }
  if (K >= 2) {
    const double step = std::abs(out.sigma2_sequence[K - 1] -
                                 out.sigma2_sequence[K - 2]);
    if (step > convergence_warn_tol)
      out.warnings.push_back(
          "sigma2 truncation has not settled: |sigma2_K - sigma2_(K-1)| = " +
          std::to_string(step));
  }
  add_condition_warnings(toll, out.warnings);
  return out;
}

TheoremConstants fringe_constants(int d, FringeMode mode, int k) {
  if (d < 2 || k < 1) throw std::invalid_argument("need d >= 2 and k >= 1");
  Rational invD = 1;  // prod_{j<=k} 1/((d-1)j + d)
  for (int j = 1; j <= k; ++j) invD /= (d - 1) * j + d;

  Rational mu;
  Rational integral_factor =
      Rational(d) * rational_pow(d - 1, 1 - 2 * k) /
      Rational(factorial(k - 1) * factorial(k - 1));
  if (mode == FringeMode::occurrence) {
    mu = (d - 1) * invD;
  } else {
    mu = Rational(d) * (d - 1) /
         (Rational((d - 1) * k + d) * ((d - 1) * k + 1));
    const BigInt yk = count_dary(d, k);
    integral_factor *= Rational(yk * yk);
  }
  const Rational sigma2 = -mu * mu * (2 * k + Rational(1, d - 1)) + mu +
                          integral_factor *
                              phi_inner_product_rational(d, k, k);

  TheoremConstants out;
  out.method = TheoremConstants::Method::closed_form;
  out.mu = to_double(mu);
  out.sigma2 = to_double(sigma2);
  out.tree_size_cutoff = k;
  if (sigma2 < 0)
    out.warnings.push_back("closed-form sigma2 is negative; check parameters");
  return out;
}

GportConstants gport_constants(const Rational& alpha, const Toll& toll, int K,
                               const EnumLimits& limits) {
  if (alpha <= 0 || K < 1)
    throw std::invalid_argument("need alpha > 0 and K >= 1");
  const SizeSums sums =
      collect_size_sums(ModelParams::make_gport(alpha), toll, K, limits);

  std::vector<double> invD(K + 1, 1.0);
  {
    Rational acc = 1;
    for (int m = 1; m <= K; ++m) {
      acc /= (alpha + 1) * m + alpha;
      invD[m] = to_double(acc);
    }
  }
  const double ap1 = to_double(alpha + 1);

  std::vector<std::vector<double>> weight_plain(K + 1,
                                                std::vector<double>(K + 1));
  std::vector<std::vector<double>> weight_pref(K + 1,
                                               std::vector<double>(K + 1));
  for (int m1 = 1; m1 <= K; ++m1)
    for (int m2 = m1; m2 <= K; ++m2) {
      const Rational base = rational_pow(alpha + 1, 1 - m1 - m2) /
                            Rational(factorial(m1 - 1) * factorial(m2 - 1));
      weight_plain[m1][m2] = weight_plain[m2][m1] = to_double(
          base * varphi_inner_product_rational(alpha, m1, m2,
                                               VarphiNorm::plain));
      weight_pref[m1][m2] = weight_pref[m2][m1] = to_double(
          base * varphi_inner_product_rational(alpha, m1, m2,
                                               VarphiNorm::prefactor));
    }

  GportConstants out;
  out.tree_size_cutoff = K;
  for (auto& seq : out.sigma2_sequences) seq.resize(K);
  const double alpha_d = to_double(alpha);
  for (int k = 1; k <= K; ++k) {
    NeumaierSum mu_sum;
    for (int m = 1; m <= k; ++m) mu_sum.add(sums.S[m - 1] * invD[m]);
    const double mu = ap1 * mu_sum.value();

    NeumaierSum term2;
    for (int m = 1; m <= k; ++m)
      term2.add((sums.Q[m - 1] - 2 * sums.P[m - 1] +
                 2 * mu * m * sums.S[m - 1]) *
                invD[m]);

    NeumaierSum t3_plain, t3_pref;
    for (int m1 = 1; m1 <= k; ++m1)
      for (int m2 = 1; m2 <= k; ++m2) {
        const double ss = sums.S[m1 - 1] * sums.S[m2 - 1];
        t3_plain.add(ss * weight_plain[m1][m2]);
        t3_pref.add(ss * weight_pref[m1][m2]);
      }

    const double lead = mu * mu / ap1;
    const double mid = -ap1 * term2.value();
    out.sigma2_sequences[GportConstants::printed_sign_plain][k - 1] =
        lead + mid + alpha_d * t3_plain.value();
    out.sigma2_sequences[GportConstants::flipped_sign_plain][k - 1] =
        -lead + mid + alpha_d * t3_plain.value();
    out.sigma2_sequences[GportConstants::printed_sign_prefactor][k - 1] =
        lead + mid + alpha_d * t3_pref.value();
    out.sigma2_sequences[GportConstants::flipped_sign_prefactor][k - 1] =
        -lead + mid + alpha_d * t3_pref.value();
    if (k == K) out.mu = mu;
  }
  for (int v = 0; v < 4; ++v)
    if (out.sigma2_sequences[v].back() < 0)
      out.warnings.push_back("gport sigma2 variant " + std::to_string(v) +
                             " truncates to a negative value");
  add_condition_warnings(toll, out.warnings);
  return out;
}

}  // namespace incrtree
