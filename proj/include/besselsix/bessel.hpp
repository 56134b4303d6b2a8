#pragma once

// Bessel functions J_n of integer order on the nonnegative real axis.

#include "certified.hpp"
#include "exactnum.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace besselsix {

using OracleReal = boost::multiprecision::cpp_bin_float_100;

inline constexpr int kMaxOrder = 40;

struct BesselEvalConfig {
  /// Below this radius (or the order-dependent bound) J is evaluated by
  /// normalized backward recurrence; above it by the Hankel expansion of J0, J1
  /// followed by forward recurrence.
  double series_cutoff = 30.0;
  double target_abs_error = 1e-13;

  void validate() const {
    if (!(series_cutoff >= 1.0)) throw std::domain_error("BesselEvalConfig: series_cutoff must be >= 1");
    if (!(target_abs_error > 0.0 && target_abs_error <= 1e-9))
      throw std::domain_error("BesselEvalConfig: target_abs_error must lie in (0, 1e-9]");
  }
};

namespace detail {

struct QuarterPiSplit {
  double p1, p2, p3;
};

// pi/4 = p1 + p2 + p3 with p1, p2 carrying 30 significant bits each.
inline const QuarterPiSplit& quarter_pi_split() {
  static const QuarterPiSplit split = [] {
    HighReal x = pi_v<HighReal>() / 4;
    auto chop30 = [](const HighReal& v) {
      int e = 0;
      double m = std::frexp(static_cast<double>(v), &e);
      return std::ldexp(std::trunc(std::ldexp(m, 30)), e - 30);
    };
    double p1 = chop30(x);
    HighReal rest = x - p1;
    double p2 = chop30(rest);
    rest -= p2;
    return QuarterPiSplit{p1, p2, static_cast<double>(rest)};
  }();
  return split;
}

// (hi + lo) - q0 * pi/4, reduced into (-pi, pi]. lo must be tiny compared to hi.
inline double reduce_quarter_pi(double hi, double lo, long long q0) {
  const QuarterPiSplit& s = quarter_pi_split();
  constexpr double two_pi = 6.283185307179586;
  double approx = hi - static_cast<double>(q0) * 0.7853981633974483;
  long long k = std::llround(approx / two_pi);
  long long q = q0 + 8 * k;
  if (std::llabs(q) >= (1LL << 23)) {
    HighReal v = HighReal(hi) + HighReal(lo) - HighReal(q0) * pi_v<HighReal>() / 4;
    HighReal tp = 2 * pi_v<HighReal>();
    v -= tp * round(v / tp);
    if (v <= -pi_v<HighReal>()) v += tp;
    if (v > pi_v<HighReal>()) v -= tp;
    return static_cast<double>(v);
  }
  double qd = static_cast<double>(q);
  double v = ((hi - qd * s.p1) - qd * s.p2) + lo - qd * s.p3;
  constexpr double pi = 3.141592653589793;
  if (v > pi) v = ((v - 8 * s.p1) - 8 * s.p2) - 8 * s.p3;
  if (v <= -pi) v = ((v + 8 * s.p1) + 8 * s.p2) + 8 * s.p3;
  return v;
}

}  // namespace detail

/// omega_n = r - n pi/2 - pi/4 reduced into (-pi, pi].
inline double phase(int n, double r) {
  if (!(r >= 0.0)) throw std::domain_error("phase: r must be nonnegative");
  return detail::reduce_quarter_pi(r, 0.0, 2LL * n + 1);
}

/// k (r - pi/4) reduced into (-pi, pi], with k r formed exactly as a double-double.
inline double harmonic_phase(int k, double r) {
  double hi = static_cast<double>(k) * r;
  double lo = std::fma(static_cast<double>(k), r, -hi);
  return detail::reduce_quarter_pi(hi, lo, k);
}

namespace detail {

// Hankel expansion for J_n at large r, summed until terms drop below tol.
inline double hankel_j(int n, double r, double tol) {
  const double mu = 4.0 * n * n;
  const double pref = std::sqrt(2.0 / (pi_v<double>() * r));
  double p = 0.0, q = 0.0, term = 1.0;
  for (int j = 0; j < 200; ++j) {
    switch (j % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      default: q -= term; break;
    }
    double odd = 2.0 * j + 1.0;
    double next = term * (mu - odd * odd) / (8.0 * (j + 1) * r);
    if (std::abs(next) >= std::abs(term) && j > n) break;
    if (std::abs(next) * pref < tol) break;
    term = next;
  }
  double w = phase(n, r);
  return pref * (std::cos(w) * p - std::sin(w) * q);
}

inline int miller_start(int nmax, double r) {
  double top = std::max(static_cast<double>(nmax), r);
  int k = static_cast<int>(std::ceil(top + 20.0 + 6.0 * std::sqrt(top + 1.0)));
  return k + (k & 1);
}

inline void miller(int nmax, double r, std::span<double> out) {
  const int start = miller_start(nmax, r);
  constexpr double big = 1e250, shrink = 1e-250;
  double jp1 = 0.0, j = 1.0;
  double sum = 2.0 * j;  // start is even
  for (int k = start; k >= 1; --k) {
    double jm1 = (2.0 * k / r) * j - jp1;
    jp1 = j;
    j = jm1;
    int idx = k - 1;
    if (idx <= nmax) out[idx] = j;
    if (idx == 0) {
      sum += j;
    } else if (idx % 2 == 0) {
      sum += 2.0 * j;
    }
    if (std::abs(j) > big) {
      j *= shrink;
      jp1 *= shrink;
      sum *= shrink;
      for (int i = std::max(idx, 0); i <= nmax; ++i) out[i] *= shrink;
    }
  }
  for (int i = 0; i <= nmax; ++i) out[i] /= sum;
}

inline void small_argument(int nmax, double r, std::span<double> out) {
  double h = 0.5 * r, x = h * h, lead = 1.0;
  for (int k = 0; k <= nmax; ++k) {
    if (k > 0) lead *= h / k;
    double a = k + 1.0;
    out[k] = lead * (1.0 - x / a * (1.0 - x / (2.0 * (a + 1.0))));
  }
}

}  // namespace detail

/// Fills out[0..nmax] with J_0(r), ..., J_nmax(r).
inline void bessel_j_sequence(int nmax, double r, std::span<double> out, const BesselEvalConfig& cfg = {}) {
  if (nmax < 0 || out.size() < static_cast<std::size_t>(nmax) + 1)
    throw std::domain_error("bessel_j_sequence: output span too small");
  if (!(r >= 0.0) || !std::isfinite(r)) throw std::domain_error("bessel_j_sequence: r must be finite and >= 0");
  if (r == 0.0) {
    out[0] = 1.0;
    for (int k = 1; k <= nmax; ++k) out[k] = 0.0;
    return;
  }
  if (r < 1e-3) {
    detail::small_argument(nmax, r, out);
    return;
  }
  double threshold = std::max(cfg.series_cutoff, 1.25 * nmax + 10.0);
  if (r < threshold) {
    detail::miller(nmax, r, out);
    return;
  }
  double tol = cfg.target_abs_error * 1e-4;
  out[0] = detail::hankel_j(0, r, tol);
  if (nmax == 0) return;
  out[1] = detail::hankel_j(1, r, tol);
  for (int k = 1; k < nmax; ++k) out[k + 1] = (2.0 * k / r) * out[k] - out[k - 1];
}

inline double bessel_j(int n, double r, const BesselEvalConfig& cfg = {}) {
  if (n < 0 || n > kMaxOrder) throw std::domain_error("bessel_j: order out of range [0, 40]");
  if (!(r >= 0.0) || !std::isfinite(r)) throw std::domain_error("bessel_j: r must be finite and >= 0");
  std::array<double, kMaxOrder + 1> buf{};
  bessel_j_sequence(n, r, buf, cfg);
  return buf[n];
}

namespace detail {

inline Rational exact_rational(double v) {
  int e = 0;
  double m = std::frexp(v, &e);
  auto mant = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Rational out(mant);
  if (e >= 0) return out * Rational(pow_int(BigInt(2), static_cast<unsigned>(e)));
  return out / Rational(pow_int(BigInt(2), static_cast<unsigned>(-e)));
}

}  // namespace detail

/// Enclosure of J_n(r) from the power series, summed in exact rational arithmetic.
inline CertifiedValue<OracleReal> bessel_series_oracle(int n, double r, int precision_bits) {
  if (n < 0) throw std::domain_error("bessel_series_oracle: negative order");
  if (!(r >= 0.0) || r > 200.0) throw std::domain_error("bessel_series_oracle: need 0 <= r <= 200");
  if (precision_bits < 8 || precision_bits > 300)
    throw std::domain_error("bessel_series_oracle: precision_bits must lie in [8, 300]");
  if (r == 0.0) return {OracleReal(n == 0 ? 1 : 0), OracleReal(0)};

  // Number of terms: past the peak and below 2^-(p+4) in magnitude.
  const double h = 0.5 * r;
  const double target = -(precision_bits + 4) * std::log(2.0);
  auto log_term = [&](int k) {
    return (2.0 * k + n) * std::log(h) - std::lgamma(k + 1.0) - std::lgamma(n + k + 1.0);
  };
  int terms = 1;
  while (static_cast<double>(terms + 1) * (n + terms + 1) <= h * h || log_term(terms) > target - 2.0) ++terms;

  Rational half = detail::exact_rational(h);
  Rational x = half * half;
  const BigInt& xp = boost::multiprecision::numerator(x);
  const BigInt& xq = boost::multiprecision::denominator(x);
  // Horner from the inside: s <- 1 - x s / (k (n + k)), kept as num/den.
  BigInt num = 1, den = 1;
  for (int k = terms - 1; k >= 1; --k) {
    BigInt scale = BigInt(k) * (n + k);
    BigInt d = den * scale * xq;
    num = d - xp * num;
    den = d;
  }
  den *= factorial(static_cast<unsigned>(n));
  num *= pow_int(boost::multiprecision::numerator(half), static_cast<unsigned>(n));
  den *= pow_int(boost::multiprecision::denominator(half), static_cast<unsigned>(n));

  OracleReal mid = OracleReal(num) / OracleReal(den);
  OracleReal tail = pow(to_real<OracleReal>(half), 2 * terms + n) /
                    (OracleReal(factorial(static_cast<unsigned>(terms))) *
                     OracleReal(factorial(static_cast<unsigned>(n + terms))));
  OracleReal conversion = abs(mid) * pow(OracleReal(2), -320);
  return {mid, tail * (1 + pow(OracleReal(2), -300)) + conversion};
}

/// Hankel expansion with the certified remainder: terms j < ell, remainder |a_ell(n)| r^-ell.
template <class Real = double>
CertifiedValue<Real> asymptotic_eval(int n, const Real& r, int ell) {
  using std::abs;
  using std::cos;
  using std::sin;
  using std::sqrt;
  if (n < 0) throw std::domain_error("asymptotic_eval: negative order");
  if (!(r > 0)) throw std::domain_error("asymptotic_eval: r must be positive");
  if (ell < 1 || ell < n) throw std::domain_error("asymptotic_eval: ell below max(n - 1/2, 1)");

  Real pref = sqrt(Real(2) / (pi_v<Real>() * r));
  Real p = 0, q = 0, magnitude = 0, rpow = 1;
  for (int j = 0; j < ell; ++j) {
    Real term = to_real<Real>(a_coeff(j, n).coeff()) / rpow;
    magnitude += abs(term);
    switch (j % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      default: q -= term; break;
    }
    rpow *= r;
  }
  Real c, s, slack;
  if constexpr (std::is_same_v<Real, double>) {
    double w = phase(n, r);
    c = std::cos(w);
    s = std::sin(w);
    double phase_err = 4e-16 * (1.0 + std::log2(1.0 + r));
    slack = pref * magnitude * (phase_err + 16.0 * DBL_EPSILON);
  } else {
    Real w = r - Real(2 * n + 1) * pi_v<Real>() / 4;
    c = cos(w);
    s = sin(w);
    slack = pref * magnitude * Real(std::numeric_limits<Real>::epsilon()) * 64;
  }
  Real remainder = pref * abs(to_real<Real>(a_coeff(ell, n).coeff())) / rpow;
  return {pref * (c * p - s * q), remainder + slack};
}

}  // namespace besselsix
