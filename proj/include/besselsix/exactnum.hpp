#pragma once

// Exact rationals, Gamma at integers and half-integers, and the Gamma
// inequalities used by the error estimates.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace besselsix {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using HighReal = boost::multiprecision::cpp_bin_float_50;

template <class Real>
Real pi_v() {
  return boost::math::constants::pi<Real>();
}

inline BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

inline BigInt pow_int(const BigInt& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

inline Rational pow_rational(const Rational& base, int e) {
  Rational out = 1;
  Rational b = e >= 0 ? base : Rational(1) / base;
  for (int k = 0; k < std::abs(e); ++k) out *= b;
  return out;
}

template <class Real>
Real to_real(const Rational& q) {
  if constexpr (std::is_same_v<Real, double>) {
    HighReal v = HighReal(boost::multiprecision::numerator(q)) /
                 HighReal(boost::multiprecision::denominator(q));
    return static_cast<double>(v);
  } else {
    return Real(boost::multiprecision::numerator(q)) /
           Real(boost::multiprecision::denominator(q));
  }
}

/// coeff * pi^(sqrtpi_power / 2).
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(Rational coeff, int sqrtpi_power = 0)  // NOLINT: implicit from rationals is intended
      : coeff_(std::move(coeff)), power_(sqrtpi_power) {
    if (coeff_ == 0) power_ = 0;
  }
  ExactScalar(long long v) : ExactScalar(Rational(v)) {}  // NOLINT

  const Rational& coeff() const { return coeff_; }
  int sqrtpi_power() const { return power_; }
  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return power_ == 0; }

  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    return {a.coeff_ * b.coeff_, a.power_ + b.power_};
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    if (b.is_zero()) throw std::domain_error("ExactScalar: division by zero");
    return {a.coeff_ / b.coeff_, a.power_ - b.power_};
  }
  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.power_ != b.power_)
      throw std::logic_error("ExactScalar: adding terms with different powers of pi");
    return {a.coeff_ + b.coeff_, a.power_};
  }
  friend ExactScalar operator-(const ExactScalar& a) { return {-a.coeff_, a.power_}; }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return a + (-b); }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.coeff_ == b.coeff_ && a.power_ == b.power_;
  }

  ExactScalar abs() const { return {coeff_ < 0 ? Rational(-coeff_) : coeff_, power_}; }

  template <class Real = double>
  Real to_real() const {
    using Work = std::conditional_t<std::is_same_v<Real, double>, HighReal, Real>;
    Work v = Work(boost::multiprecision::numerator(coeff_)) /
             Work(boost::multiprecision::denominator(coeff_));
    if (power_ != 0) v *= pow(sqrt(pi_v<Work>()), power_);
    return static_cast<Real>(v);
  }

  std::string str() const {
    const BigInt& p = boost::multiprecision::numerator(coeff_);
    const BigInt& q = boost::multiprecision::denominator(coeff_);
    std::string out = p.str() + "/" + q.str();
    if (power_ != 0) out += "*sqrtpi^" + std::to_string(power_);
    return out;
  }

  static ExactScalar parse(std::string_view text) {
    int power = 0;
    std::string_view body = text;
    if (auto star = text.find('*'); star != std::string_view::npos) {
      constexpr std::string_view tag = "sqrtpi^";
      std::string_view tail = text.substr(star + 1);
      if (tail.substr(0, tag.size()) != tag)
        throw std::invalid_argument("ExactScalar: malformed '" + std::string(text) + "'");
      std::size_t used = 0;
      std::string exponent(tail.substr(tag.size()));
      try {
        power = std::stoi(exponent, &used);
      } catch (const std::exception&) {
        used = std::string::npos;
      }
      if (used != exponent.size())
        throw std::invalid_argument("ExactScalar: malformed exponent in '" + std::string(text) + "'");
      body = text.substr(0, star);
    }
    try {
      return {Rational(std::string(body)), power};
    } catch (const std::exception&) {
      throw std::invalid_argument("ExactScalar: malformed rational '" + std::string(body) + "'");
    }
  }

 private:
  Rational coeff_{0};
  int power_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ExactScalar& v) { return os << v.str(); }

inline bool is_gamma_pole(int two_x) { return two_x <= 0 && two_x % 2 == 0; }

/// Gamma(two_x / 2) for integer or half-integer arguments.
inline ExactScalar gamma_half(int two_x) {
  if (is_gamma_pole(two_x))
    throw std::domain_error("gamma_half: pole at " + std::to_string(two_x) + "/2");
  if (two_x % 2 == 0) return {Rational(factorial(static_cast<unsigned>(two_x / 2 - 1)))};
  if (two_x > 0) {
    // Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi)
    unsigned n = static_cast<unsigned>((two_x - 1) / 2);
    return {Rational(factorial(2 * n), pow_int(BigInt(4), n) * factorial(n)), 1};
  }
  // Gamma(1/2 - n) = (-4)^n n! / (2n)! sqrt(pi)
  unsigned n = static_cast<unsigned>((1 - two_x) / 2);
  BigInt num = pow_int(BigInt(4), n) * factorial(n);
  if (n % 2 == 1) num = -num;
  return {Rational(num, factorial(2 * n)), 1};
}

/// Gamma(two_a / 2) / Gamma(two_b / 2); a pole only in the denominator gives 0.
inline ExactScalar gamma_ratio(int two_a, int two_b) {
  bool pole_a = is_gamma_pole(two_a);
  bool pole_b = is_gamma_pole(two_b);
  if (pole_a && pole_b) throw std::domain_error("gamma_ratio: poles in numerator and denominator");
  if (pole_a) throw std::domain_error("gamma_ratio: pole in numerator");
  if (pole_b) return {};
  if ((two_a - two_b) % 2 != 0) return gamma_half(two_a) / gamma_half(two_b);
  // Integer shift: walk the functional equation between the two arguments.
  Rational out = 1;
  if (two_a >= two_b) {
    for (int s = two_b; s < two_a; s += 2) out *= Rational(s, 2);
  } else {
    for (int s = two_a; s < two_b; s += 2) out /= Rational(s, 2);
  }
  return {out};
}

/// Gamma(n + j + 1/2) / (Gamma(n - j + 1/2) j! 2^j).
inline ExactScalar a_coeff(int j, int n) {
  if (j < 0 || n < 0) throw std::domain_error("a_coeff: negative index");
  ExactScalar ratio = gamma_ratio(2 * (n + j) + 1, 2 * (n - j) + 1);
  return ratio / ExactScalar(Rational(factorial(static_cast<unsigned>(j)) * pow_int(BigInt(2), j)));
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
  template <class Real>
  bool contains_exact(const Real& x) const {
    return Real(lo) <= x && x <= Real(hi);
  }
};

namespace detail {

inline double widen_down(double v, int ulps) {
  for (int i = 0; i < ulps; ++i) v = std::nextafter(v, -std::numeric_limits<double>::infinity());
  return v;
}
inline double widen_up(double v, int ulps) {
  for (int i = 0; i < ulps; ++i) v = std::nextafter(v, std::numeric_limits<double>::infinity());
  return v;
}

}  // namespace detail

/// Enclosure of Gamma(x) from Stirling's formula with the 1/(12x+1), 1/(12x) corrections.
inline Interval stirling_gamma_bounds(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("stirling_gamma_bounds: x must be positive");
  using ld = long double;
  ld lx = x;
  ld base = std::sqrt(2.0L * boost::math::constants::pi<ld>()) * std::pow(lx, lx - 0.5L) * std::exp(-lx);
  ld lo = base * std::exp(1.0L / (12.0L * lx + 1.0L));
  ld hi = base * std::exp(1.0L / (12.0L * lx));
  return {detail::widen_down(static_cast<double>(lo), 4), detail::widen_up(static_cast<double>(hi), 4)};
}

/// Upper bound for Gamma(2x) / (Gamma(x - d) Gamma(x + d)).
inline double gaussian_binomial_bound(double x, double d) {
  if (!(x >= 1.0) || !(d >= 0.0) || !(d < x))
    throw std::domain_error("gaussian_binomial_bound: need x >= 1 and 0 <= d < x");
  const double c = std::exp(1.0 / 24.0) / (2.0 * std::sqrt(boost::math::constants::pi<double>()));
  return c * std::sqrt(x) * std::exp2(2.0 * x) * std::exp(-d * d / x);
}

/// Upper bound for |a_{m+4}(m)|.
inline double a_m4_bound(int m) {
  if (m < 1) throw std::domain_error("a_m4_bound: m must be at least 1");
  const double pi = boost::math::constants::pi<double>();
  double md = m;
  return (105.0 / 16.0) * std::sqrt(2.0 / pi) / std::sqrt(2.0 * md - 1.0) *
         std::exp(md * std::log(2.0 * md) - md);
}

}  // namespace besselsix
