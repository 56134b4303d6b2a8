#pragma once

// Decomposition of the main integrals into core integrals: main terms, errors
// of the first kind (constant terms), errors of the second kind (frequency 4r),
// and the remainder estimate for the expansion of J_m.

#include <besselsix/certified.hpp>
#include <besselsix/closed_form.hpp>
#include <besselsix/exactnum.hpp>
#include <besselsix/expansions.hpp>

#include <array>
#include <cmath>
#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace besselsix {

enum class TrigKind { cos, sin };

inline const char* trig_kind_name(TrigKind k) { return k == TrigKind::cos ? "cos" : "sin"; }

struct CoefficientTables {
  Variant variant = Variant::I0;
  std::array<long long, 3> alphas_cos{};        // alpha_0, alpha_2, alpha_4
  std::array<long long, 6> betas_gammas_cos{};  // beta_0, gamma_1, beta_2, gamma_3, beta_4, gamma_5
  std::array<long long, 3> alphas_sin{};        // alpha_1, alpha_3, alpha_5
  std::array<long long, 6> gammas_betas_sin{};  // gamma_0, beta_1, gamma_2, beta_3, gamma_4, beta_5

  friend bool operator==(const CoefficientTables&, const CoefficientTables&) = default;
};

inline const CoefficientTables& coefficient_tables(Variant v) {
  static const CoefficientTables i0{Variant::I0,
                                    {3, -150, 65250},
                                    {-1, -6, 66, 1124, -26838, -840564},
                                    {6, -1092, 826164},
                                    {-1, 6, 66, -1124, -26838, 840564}};
  static const CoefficientTables i1{Variant::I1,
                                    {1, 174, -33354},
                                    {1, -10, 30, 444, -10602, -335340},
                                    {18, -1164, 1071900},
                                    {1, 10, 30, -444, -10602, 335340}};
  return v == Variant::I0 ? i0 : i1;
}

inline const RemainderedExpansion& variant_expansion(Variant v) {
  static const RemainderedExpansion j000 = product_expansion(ProductTag::J000);
  static const RemainderedExpansion j110 = product_expansion(ProductTag::J110);
  return v == Variant::I0 ? j000 : j110;
}

/// Coefficients in the basis {1, cos 2r, sin 2r, cos 4r, sin 4r}, per power of t.
struct FreqPoly {
  enum Basis { one = 0, cos2 = 1, sin2 = 2, cos4 = 3, sin4 = 4 };
  std::map<int, std::array<Rational, 5>> by_t;

  Rational get(int tpow, Basis b) const {
    auto it = by_t.find(tpow);
    return it == by_t.end() ? Rational(0) : it->second[b];
  }
  void add(int tpow, Basis b, const Rational& q) {
    auto& row = by_t[tpow];
    row[b] += q;
  }
};

namespace detail {

using Freq5 = std::array<Rational, 5>;

inline Freq5 freq_mul(const Freq5& a, const Freq5& b) {
  // Products of {1, C2, S2} only; higher inputs are never formed here.
  for (int i = 3; i < 5; ++i)
    if (a[i] != 0 || b[i] != 0) throw std::logic_error("freq_mul: frequency 4 operand");
  Freq5 out{};
  out[0] += a[0] * b[0];
  out[1] += a[0] * b[1] + a[1] * b[0];
  out[2] += a[0] * b[2] + a[2] * b[0];
  // C2^2 = (1 + C4)/2, S2^2 = (1 - C4)/2, C2 S2 = S4/2
  Rational cc = a[1] * b[1], ss = a[2] * b[2], cs = a[1] * b[2] + a[2] * b[1];
  out[0] += (cc + ss) / 2;
  out[3] += (cc - ss) / 2;
  out[4] += cs / 2;
  return out;
}

// c^2 = (1 + S2)/2, s^2 = (1 - S2)/2, cs = -C2/2
inline Freq5 quadratic(int i, int j) {
  Freq5 out{};
  if (i == 2 && j == 0) {
    out[0] = Rational(1, 2);
    out[2] = Rational(1, 2);
  } else if (i == 0 && j == 2) {
    out[0] = Rational(1, 2);
    out[2] = Rational(-1, 2);
  } else if (i == 1 && j == 1) {
    out[1] = Rational(-1, 2);
  } else {
    throw std::logic_error("quadratic: not a degree-2 monomial");
  }
  return out;
}

inline Freq5 reduce_monomial(int i, int j) {
  const int deg = i + j;
  Freq5 unit{};
  unit[0] = 1;
  if (deg == 0) return unit;
  if (deg == 2) return quadratic(i, j);
  if (deg == 4) {
    // split into two quadratic factors
    int i1 = std::min(i, 2);
    int j1 = 2 - i1;
    return freq_mul(quadratic(i1, j1), quadratic(i - i1, j - j1));
  }
  throw std::domain_error("trig_reduce: monomial of degree " + std::to_string(deg) + " not supported");
}

}  // namespace detail

/// Rewrites c^i s^j (i + j in {0, 2, 4}) into the frequency basis.
inline FreqPoly trig_reduce(const TrigPoly& p) {
  FreqPoly out;
  for (const auto& [mono, q] : p.terms()) {
    detail::Freq5 f = detail::reduce_monomial(mono[0], mono[1]);
    for (int b = 0; b < 5; ++b)
      if (f[b] != 0) out.add(mono[2], static_cast<FreqPoly::Basis>(b), q * f[b]);
  }
  return out;
}

/// Recomputes the coefficient tables from the product expansions.
inline CoefficientTables derive_coefficient_tables(Variant v) {
  const RemainderedExpansion& e = variant_expansion(v);
  const TrigPoly c(1, 0, 0, Rational(1)), s(0, 1, 0, Rational(1));
  CoefficientTables out;
  out.variant = v;
  auto as_int = [](const Rational& q) {
    if (boost::multiprecision::denominator(q) != 1) throw std::logic_error("coefficient table entry not an integer");
    return static_cast<long long>(boost::multiprecision::numerator(q));
  };
  for (int k = 0; k < kExpansionTerms; ++k) {
    FreqPoly fc = trig_reduce(c * e.terms[k]);
    FreqPoly fs = trig_reduce(s * e.terms[k]);
    Rational eight = 8;
    if (k % 2 == 0) {
      out.alphas_cos[k / 2] = as_int(eight * fc.get(k, FreqPoly::one));
      out.betas_gammas_cos[k] = as_int(eight * fc.get(k, FreqPoly::cos4));
      out.gammas_betas_sin[k] = as_int(eight * fs.get(k, FreqPoly::sin4));
      if (fc.get(k, FreqPoly::sin4) != 0 || fs.get(k, FreqPoly::one) != 0 || fs.get(k, FreqPoly::cos4) != 0)
        throw std::logic_error("unexpected frequency component in even term");
    } else {
      out.alphas_sin[k / 2] = as_int(eight * fs.get(k, FreqPoly::one));
      out.betas_gammas_cos[k] = as_int(eight * fc.get(k, FreqPoly::sin4));
      out.gammas_betas_sin[k] = as_int(eight * fs.get(k, FreqPoly::cos4));
      if (fs.get(k, FreqPoly::sin4) != 0 || fc.get(k, FreqPoly::one) != 0 || fc.get(k, FreqPoly::cos4) != 0)
        throw std::logic_error("unexpected frequency component in odd term");
    }
  }
  return out;
}

/// Keys of the frequency-2 core integrals arising in mu_* for (m, n).
inline std::vector<CoreIntegralKey> freq2_keys(int m, int n, Variant v) {
  const RemainderedExpansion& e = variant_expansion(v);
  const TrigPoly c(1, 0, 0, Rational(1)), s(0, 1, 0, Rational(1));
  std::vector<CoreIntegralKey> keys;
  for (int kind = 0; kind < 2; ++kind)
    for (int k = 0; k < kExpansionTerms; ++k) {
      FreqPoly f = trig_reduce((kind == 0 ? c : s) * e.terms[k]);
      for (int j = 0; j <= m / 2 + 1; ++j) {
        int kappa = 2 * j + k + (kind == 0 ? 1 : 2);
        if (f.get(k, FreqPoly::cos2) != 0) keys.push_back({n, n + m, kappa, Freq::two, Trig::cos});
        if (f.get(k, FreqPoly::sin2) != 0) keys.push_back({n, n + m, kappa, Freq::two, Trig::sin});
      }
    }
  return keys;
}

namespace detail {

inline void check_m_n(int m, int n, int min_n, const char* who) {
  if (m < 0 || m % 2 != 0) throw std::domain_error(std::string(who) + ": m must be even and nonnegative");
  if (n < min_n) throw std::domain_error(std::string(who) + ": n must be at least " + std::to_string(min_n));
  if (m >= 6 && m > n) throw std::domain_error(std::string(who) + ": m <= n required for m >= 6");
}

// Largest power r^-kappa assigned to the main term.
inline int main_kappa(int m) { return m <= 2 ? 3 : (m == 4 ? 5 : 0); }

struct ConstantParts {
  Rational main_cos, main_sin, e1_cos, e1_sin;
};

// Exact constant-term contributions via Weber-Schafheitlin integrals.
inline ConstantParts constant_parts(int m, int n, Variant v) {
  const CoefficientTables& tab = coefficient_tables(v);
  const int sign_m = (m / 2) % 2 == 0 ? 1 : -1;
  const int cut = main_kappa(m);
  ConstantParts out;
  auto w = [&](int kappa) {
    ExactScalar val = weber_schafheitlin(n, n + m, kappa);
    if (!val.is_rational()) throw std::logic_error("constant_parts: non-rational core integral");
    return val.coeff();
  };
  auto p16 = [](int p) { return Rational(pow_int(BigInt(16), static_cast<unsigned>(p))); };
  for (int k = 0; k <= m / 2 + 1; ++k) {
    int sk = k % 2 == 0 ? 1 : -1;
    Rational a_even = a_coeff(2 * k, m).coeff();
    Rational a_odd = a_coeff(2 * k + 1, m).coeff();
    for (int idx = 0; idx < 3; ++idx) {
      int p = 2 * idx;
      int kappa = 2 * k + 1 + p;
      Rational term = Rational(sign_m * sk) / 8 * a_even * Rational(tab.alphas_cos[idx]) / p16(p) * w(kappa);
      (kappa <= cut ? out.main_cos : out.e1_cos) += term;
    }
    for (int idx = 0; idx < 3; ++idx) {
      int p = 2 * idx + 1;
      int kappa = 2 * k + 2 + p;
      Rational term = -Rational(sign_m * sk) / 8 * a_odd * Rational(tab.alphas_sin[idx]) / p16(p) * w(kappa);
      (kappa <= cut ? out.main_sin : out.e1_sin) += term;
    }
  }
  return out;
}

}  // namespace detail

/// Main term M_cos + M_sin as the printed closed form; m >= 6 gives zero.
inline ExactScalar main_term_part(int m, int n, Variant v, TrigKind kind) {
  if (m < 0 || m % 2 != 0) throw std::domain_error("main_term: m must be even and nonnegative");
  if (n < 2) throw std::domain_error("main_term: n must be at least 2");
  const bool i0 = v == Variant::I0;
  const bool cs = kind == TrigKind::cos;
  Rational N = n;
  switch (m) {
    case 0: {
      Rational cubic = (N - 1) * N * (N + 1);
      if (cs) return i0 ? Rational(3) / (16 * N) - Rational(51) / (2048 * cubic) : Rational(1) / (16 * N) + Rational(39) / (2048 * cubic);
      return Rational(i0 ? 3 : 9) / (2048 * cubic);
    }
    case 2: {
      Rational cubic = N * (N + 1) * (N + 2);
      return Rational(cs ? (i0 ? 195 : 9) : (i0 ? 45 : 135)) / (4096 * cubic);
    }
    case 4: {
      Rational quintic = N * (N + 1) * (N + 2) * (N + 3) * (N + 4);
      return Rational(cs ? (i0 ? 322425 : 7011) : (i0 ? 76167 : 211869)) / (1048576 * quintic);
    }
    default:
      return {};
  }
}

inline ExactScalar main_term(int m, int n, Variant v) {
  return main_term_part(m, n, v, TrigKind::cos) + main_term_part(m, n, v, TrigKind::sin);
}

/// Main term recomputed from the coefficient tables and exact core integrals.
inline ExactScalar main_term_from_tables(int m, int n, Variant v) {
  detail::check_m_n(m, n, 5, "main_term_from_tables");
  auto parts = detail::constant_parts(m, n, v);
  return {parts.main_cos + parts.main_sin};
}

/// Signed exact error of the first kind.
inline Rational e1_exact(int m, int n, Variant v, TrigKind kind) {
  detail::check_m_n(m, n, 5, "e1_exact");
  auto parts = detail::constant_parts(m, n, v);
  return kind == TrigKind::cos ? parts.e1_cos : parts.e1_sin;
}

inline double e1_printed_constant(int m, Variant v, TrigKind kind) {
  const bool i0 = v == Variant::I0;
  const bool cs = kind == TrigKind::cos;
  switch (m) {
    case 0: return cs ? (i0 ? 0.026 : 0.015) : (i0 ? 0.0016 : 0.0030);
    case 2: return cs ? (i0 ? 0.039 : 0.012) : (i0 ? 0.0062 : 0.0031);
    case 4: return cs ? (i0 ? 0.42 : 0.11) : (i0 ? 0.086 : 0.063);
    default: return cs ? (i0 ? 6.34 : 0.09) : (i0 ? 1.49 : 4.08);
  }
}

/// Powers (a, b) in the printed form C n0^-a n^-b.
inline std::pair<int, int> e1_scaling(int m) {
  if (m == 4) return {1, 6};
  if (m >= 6) return {3, 4};
  return {1, 4};
}

/// Printed bound on |E1|.
inline double e1_bound(int m, int n, Variant v, TrigKind kind) {
  detail::check_m_n(m, n, kN0, "e1_bound");
  auto [a, b] = e1_scaling(m);
  return e1_printed_constant(m, v, kind) * std::pow(kN0, -a) * std::pow(n, -static_cast<double>(b));
}

// ---- Estimate B ----

inline double estimate_B_printed_constant(int m, Variant v) {
  const bool i0 = v == Variant::I0;
  switch (m) {
    case 0: return i0 ? 0.022 : 0.023;
    case 2: return i0 ? 0.162 : 0.166;
    case 4: return i0 ? 2.823 : 2.885;
    default: return 0.015;
  }
}

/// Power b in the printed form C n0^-1 n^-b.
inline int estimate_B_power(int m) {
  if (m == 2) return 6;
  if (m == 4) return 8;
  return 4;
}

inline double estimate_B(int m, int n, Variant v) {
  detail::check_m_n(m, n, kN0, "estimate_B");
  return estimate_B_printed_constant(m, v) / kN0 * std::pow(n, -static_cast<double>(estimate_B_power(m)));
}

/// Coefficients of t^j in the variant's expansion, bounded by |c|, |s| <= 1.
inline std::array<Rational, 6> expansion_weights(Variant v) {
  std::array<Rational, 6> out;
  const RemainderedExpansion& e = variant_expansion(v);
  for (int j = 0; j < 6; ++j) out[j] = e.terms[j].abs_sum();
  return out;
}

/// c_l^(0) = W(20, 20, l) 20^l.
inline HighReal c_ell_m0(int ell) {
  return weber_schafheitlin(kN0, kN0, ell).to_real<HighReal>() * pow(HighReal(kN0), ell);
}

/// c_l^(m) = sqrt(W(20, 20, 1) W(20 + m, 20 + m, 2m + 2l - 1)) 20^(m + l), for m in {2, ..., 10}.
inline HighReal c_ell_cs(int m, int ell) {
  HighReal a = weber_schafheitlin(kN0, kN0, 1).to_real<HighReal>();
  HighReal b = weber_schafheitlin(kN0 + m, kN0 + m, 2 * m + 2 * ell - 1).to_real<HighReal>();
  return sqrt(a * b) * pow(HighReal(kN0), m + ell);
}

/// c_l^(m) for even m >= 12.
inline HighReal c_ell_large(int m, int ell) {
  HighReal pi = pi_v<HighReal>();
  HighReal prod = 1;
  for (int k = 0; k <= 2 * ell - 2; ++k) prod *= HighReal(kN0 - ell + 1 + k);
  return HighReal(0.5) * sqrt(2 / pi) / sqrt(HighReal(2 * m - 1)) * pow(HighReal(2), m) * exp(HighReal(-m)) *
         sqrt(pow(HighReal(kN0), 2 * ell - 1) / prod);
}

/// Recomputed Estimate B constant C such that the bound reads C n0^-1 n^-b (see estimate_B_power).
inline double estimate_B_recomputed_constant(int m, Variant v) {
  if (m < 0 || m % 2 != 0) throw std::domain_error("estimate_B_recomputed_constant: m must be even");
  auto w = expansion_weights(v);
  HighReal sum = 0;
  for (int j = 0; j < 6; ++j) {
    const int ell = 5 + j;
    HighReal weight = to_real<HighReal>(w[j]) / pow(HighReal(16), j);
    HighReal c;
    if (m == 0) {
      c = c_ell_m0(ell);
    } else if (m <= 10) {
      c = c_ell_cs(m, ell);
    } else {
      c = c_ell_large(m, ell);
    }
    sum += weight * c / pow(HighReal(kN0), j);
  }
  HighReal lead;
  if (m == 0) {
    lead = a_coeff(4, 0).abs().to_real<HighReal>();
  } else if (m <= 10) {
    lead = a_coeff(m + 4, m).abs().to_real<HighReal>();
  } else {
    lead = HighReal(105) / 16;
  }
  HighReal out = lead * sum;
  // m in {6, 8, 10}: rescale n^-(m+5) to n0^-1 n^-4 at n = n0.
  if (m >= 6 && m <= 10) out /= pow(HighReal(kN0), m);
  return static_cast<double>(out);
}

/// Estimate B evaluated at the given n without passing through n0: exact
/// Weber-Schafheitlin integrals, Cauchy-Schwarz for m >= 2.
inline double estimate_B_exact(int m, int n, Variant v) {
  detail::check_m_n(m, n, kN0, "estimate_B_exact");
  auto w = expansion_weights(v);
  HighReal sum = 0;
  for (int j = 0; j < 6; ++j) {
    const int ell = 5 + j;
    HighReal integral;
    if (m == 0) {
      integral = weber_schafheitlin(n, n, ell).to_real<HighReal>();
    } else {
      HighReal a = weber_schafheitlin(n, n, 1).to_real<HighReal>();
      HighReal b = weber_schafheitlin(n + m, n + m, 2 * m + 2 * ell - 1).to_real<HighReal>();
      integral = sqrt(a * b);
    }
    sum += to_real<HighReal>(w[j]) / pow(HighReal(16), j) * integral;
  }
  return static_cast<double>(a_coeff(m + 4, m).abs().to_real<HighReal>() * sum);
}

/// sup over n >= max(n0, m) of estimate_B_exact * n0 * n^b, scanned over 240 orders
/// (the normalized value decreases beyond its peak), rounded up.
inline double estimate_B_uniform_constant(int m, Variant v) {
  if (m < 0 || m % 2 != 0) throw std::domain_error("estimate_B_uniform_constant: m must be even");
  static std::mutex mu;
  static std::map<std::pair<int, int>, double> cache;
  const std::pair<int, int> key{m, static_cast<int>(v)};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const int start = std::max(kN0, m);
  const double b = estimate_B_power(m);
  double best = 0;
  for (int n = start; n < start + 240; ++n) best = std::max(best, estimate_B_exact(m, n, v) * kN0 * std::pow(n, b));
  best *= 1 + 1e-9;
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = best;
  return best;
}

/// Estimate B with the larger of the printed and the uniform constant.
inline double estimate_B_certified(int m, int n, Variant v) {
  detail::check_m_n(m, n, kN0, "estimate_B_certified");
  double c = std::max(estimate_B_printed_constant(m, v), estimate_B_uniform_constant(m, v));
  return c / kN0 * std::pow(n, -static_cast<double>(estimate_B_power(m)));
}

// ---- Errors of the second kind ----

inline double e2_printed_prefactor(Variant v) { return v == Variant::I0 ? 0.39 : 0.30; }

/// (1/8) sum |beta|, |gamma| / 16^j for the chosen table.
inline Rational e2_recomputed_prefactor(Variant v, TrigKind kind) {
  const CoefficientTables& t = coefficient_tables(v);
  const auto& row = kind == TrigKind::cos ? t.betas_gammas_cos : t.gammas_betas_sin;
  Rational sum = 0;
  for (int j = 0; j < 6; ++j)
    sum += Rational(std::llabs(row[j])) / Rational(pow_int(BigInt(16), static_cast<unsigned>(j)));
  return sum / 8;
}

inline double e2_bound(int m, int n, Variant v, TrigKind /*kind*/) {
  detail::check_m_n(m, n, kN0, "e2_bound");
  const double theta = m == 4 ? 0.75 : 0.6;
  const double tau = m == 4 ? 6.0 : 4.0;
  return e2_printed_prefactor(v) * std::pow(theta, kN0) * std::pow(n, -tau);
}

// ---- Frequency-4 sums ----

enum class Prop4rCase { i, ii, iii, iv };

inline double prop_4r_bound(int m, int n, Prop4rCase /*which*/) {
  if (m < 0 || m % 2 != 0) throw std::domain_error("prop_4r_bound: m must be even and nonnegative");
  if (n < kN0) throw std::domain_error("prop_4r_bound: n must be at least 20");
  if (m > n) throw std::domain_error("prop_4r_bound: m must not exceed n");
  return std::pow(0.35, n) / n;
}

/// A = 4^(log 2 / 9) exp(-(log 2 / 3)^2).
inline double gaussian_sum_base() {
  const double l2 = std::log(2.0);
  return std::pow(4.0, l2 / 9) * std::exp(-(l2 / 3) * (l2 / 3));
}

/// Upsilon_m = sum_{k=0}^{m/2} 4^k exp(-(3k - m/2)^2 / (m/2 + k + 1)).
inline double upsilon(int m) {
  double s = 0;
  for (int k = 0; k <= m / 2; ++k) {
    double d = 3.0 * k - m / 2.0;
    s += std::pow(4.0, k) * std::exp(-d * d / (m / 2.0 + k + 1));
  }
  return s;
}

inline double upsilon_bound(int m) {
  return (m / 2.0 + 1) * std::exp2(m / 3.0) * std::pow(gaussian_sum_base(), m + 1);
}

struct Prop4rChain {
  double k_sum_main = 0;    // first summand of the k-sum estimate
  double k_sum_last = 0;    // k = m/2 + 1 term
  double binomial = 0;      // bound on Gamma(2n+m)/(Gamma(n+1) Gamma(n+m+1)) times 4^-(2n+m)
  double chain = 0;         // full chain
};

inline Prop4rChain prop_4r_chain(int m, int n) {
  if (m < 0 || m % 2 != 0 || n < 1 || m > n) throw std::domain_error("prop_4r_chain: need even 0 <= m <= n");
  const double pi = pi_v<double>();
  const double e24 = std::exp(1.0 / 24);
  Prop4rChain out;
  out.k_sum_main = 2 * e24 / std::sqrt(pi) / std::sqrt(m + 1.0) * std::exp2(m) * (m / 2.0 + 1) * std::exp2(m / 3.0) *
                   std::pow(gaussian_sum_base(), m + 1);
  out.k_sum_last = 3 / (4 * std::sqrt(pi)) / ((2.0 * m + 4) * (2.0 * m + 3));
  // 2^(2n+m) 4^-(2n+m) = 2^-(2n+m)
  out.binomial = e24 / (2 * std::sqrt(pi)) / (n * std::sqrt(static_cast<double>(n + m))) * std::exp2(-(2.0 * n + m));
  out.chain = 1.03 * out.k_sum_main * out.binomial;
  return out;
}

/// The frequency-4 sums with each integral replaced by its descent bound; max over the allowed powers.
inline double prop_4r_direct(int m, int n, Prop4rCase which) {
  if (m < 0 || m % 2 != 0 || m > n) throw std::domain_error("prop_4r_direct: need even 0 <= m <= n");
  const bool odd_coeff = which == Prop4rCase::iii || which == Prop4rCase::iv;
  const bool alpha_power = which == Prop4rCase::i || which == Prop4rCase::iv;
  const int powers[3] = {alpha_power ? 1 : 2, alpha_power ? 3 : 4, alpha_power ? 5 : 6};
  double best = 0;
  for (int p : powers) {
    Rational sum = 0;
    for (int k = 0; k <= m / 2 + 1; ++k) {
      int j = odd_coeff ? 2 * k + 1 : 2 * k;
      sum += a_coeff(j, m).abs().coeff() * descent_bound(n, n + m, j + p);
    }
    best = std::max(best, to_real<double>(sum));
  }
  return best;
}

// ---- Breakdown ----

struct CoreBoundBreakdown {
  ExactScalar main_cos;
  ExactScalar main_sin;
  double e1_cos = 0;
  double e1_sin = 0;
  double e2_cos = 0;
  double e2_sin = 0;
};

inline CoreBoundBreakdown core_bounds(int m, int n, Variant v) {
  detail::check_m_n(m, n, kN0, "core_bounds");
  CoreBoundBreakdown out;
  out.main_cos = main_term_part(m, n, v, TrigKind::cos);
  out.main_sin = main_term_part(m, n, v, TrigKind::sin);
  out.e1_cos = e1_bound(m, n, v, TrigKind::cos);
  out.e1_sin = e1_bound(m, n, v, TrigKind::sin);
  out.e2_cos = e2_bound(m, n, v, TrigKind::cos);
  out.e2_sin = e2_bound(m, n, v, TrigKind::sin);
  return out;
}

}  // namespace besselsix
