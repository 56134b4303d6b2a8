#pragma once

// Exact values and bounds for the two-Bessel integrals
// int_0^inf J_n(r) J_m(r) r^{-k} [cos|sin](jr) dr, j in {0, 2, 4}.

#include <besselsix/exactnum.hpp>

#include <stdexcept>
#include <string>

namespace besselsix {

enum class Freq { zero, two, four };
enum class Trig { cos, sin, none };

inline const char* freq_name(Freq f) {
  switch (f) {
    case Freq::zero: return "zero";
    case Freq::two: return "two";
    case Freq::four: return "four";
  }
  return "?";
}

inline const char* trig_name(Trig t) {
  switch (t) {
    case Trig::cos: return "cos";
    case Trig::sin: return "sin";
    case Trig::none: return "none";
  }
  return "?";
}

struct CoreIntegralKey {
  int n = 0;
  int m = 0;
  int k = 1;
  Freq freq = Freq::zero;
  Trig trig = Trig::none;

  void validate() const {
    if (n < 0 || m < 0) throw std::domain_error("CoreIntegralKey: orders must be nonnegative");
    if (k < 1) throw std::domain_error("CoreIntegralKey: k must be positive");
    if ((freq == Freq::zero) != (trig == Trig::none))
      throw std::domain_error("CoreIntegralKey: trig must be none exactly when freq is zero");
  }
};

/// int_0^inf J_n J_m r^{-1} dr.
inline ExactScalar kapteyn(int n, int m) {
  if (n < 0 || m < 0) throw std::domain_error("kapteyn: orders must be nonnegative");
  if (n == 0 && m == 0) throw std::domain_error("kapteyn: n = m = 0 diverges");
  if (n == m) return {Rational(1, 2 * n)};
  int d = m - n;
  if (d % 2 == 0) return {};
  int s = ((d % 4) + 4) % 4 == 1 ? 1 : -1;
  return {Rational(2 * s) / Rational(m * m - n * n), -2};
}

/// int_0^inf J_n J_m r^{-k} dr for 1 <= k <= n + m.
inline ExactScalar weber_schafheitlin(int n, int m, int k) {
  if (n < 0 || m < 0) throw std::domain_error("weber_schafheitlin: orders must be nonnegative");
  if (k < 1 || k > n + m) throw std::domain_error("weber_schafheitlin: need 1 <= k <= n + m");
  const int a = m + n + 1 - k;
  const int b = m + n + 1 + k;
  const int c = n - m + k + 1;
  const int d = m - n + k + 1;
  if (is_gamma_pole(c) || is_gamma_pole(d)) return {};
  ExactScalar out = gamma_ratio(a, b) / (gamma_half(c) * gamma_half(d));
  return out * ExactScalar(Rational(factorial(static_cast<unsigned>(k - 1)), pow_int(BigInt(2), k)));
}

/// True iff the frequency-2 integral is identically zero by parity.
inline bool vanishes_freq2(const CoreIntegralKey& key) {
  key.validate();
  if (key.freq != Freq::two) throw std::domain_error("vanishes_freq2: key must have frequency two");
  if ((key.n - key.m) % 2 != 0) return false;
  if (key.k < 1 || key.k > key.n + key.m) return false;
  return (key.k % 2 == 0 && key.trig == Trig::cos) || (key.k % 2 == 1 && key.trig == Trig::sin);
}

/// Bound on |int_0^inf J_n J_m r^{-k} e^{4ir} dr| for 1 <= k < n + m.
inline Rational descent_bound(int n, int m, int k) {
  if (n < 0 || m < 0) throw std::domain_error("descent_bound: orders must be nonnegative");
  if (k < 1 || k >= n + m) throw std::domain_error("descent_bound: need 1 <= k < n + m");
  BigInt num = pow_int(BigInt(2), static_cast<unsigned>(k - 1)) * factorial(static_cast<unsigned>(n + m - k));
  BigInt den = pow_int(BigInt(4), static_cast<unsigned>(n + m)) * factorial(static_cast<unsigned>(n)) *
               factorial(static_cast<unsigned>(m));
  return Rational(num, den);
}

}  // namespace besselsix
