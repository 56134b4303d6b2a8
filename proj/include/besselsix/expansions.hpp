#pragma once

// Truncated asymptotic expansions in c = cos(r - pi/4), s = sin(r - pi/4),
// t = 1/(16 r) with tracked remainders, and their products.

#include <besselsix/bessel.hpp>
#include <besselsix/certified.hpp>
#include <besselsix/exactnum.hpp>

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace besselsix {

/// Finitely supported sum of coeff * c^i s^j t^k.
class TrigPoly {
 public:
  using Monomial = std::array<int, 3>;

  TrigPoly() = default;
  TrigPoly(int i, int j, int k, Rational coeff) { add(i, j, k, std::move(coeff)); }

  void add(int i, int j, int k, const Rational& coeff) {
    if (i < 0 || j < 0 || k < 0) throw std::domain_error("TrigPoly: negative exponent");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(Monomial{i, j, k}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Rational coeff(int i, int j, int k) const {
    auto it = terms_.find(Monomial{i, j, k});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Sum of absolute coefficients: the supremum bound with |c|, |s| <= 1 and t = 1.
  Rational abs_sum() const {
    Rational out = 0;
    for (const auto& [mono, q] : terms_) out += q < 0 ? Rational(-q) : q;
    return out;
  }

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly out = a;
    for (const auto& [mono, q] : b.terms_) out.add(mono[0], mono[1], mono[2], q);
    return out;
  }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly out;
    for (const auto& [ma, qa] : a.terms_)
      for (const auto& [mb, qb] : b.terms_) out.add(ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], qa * qb);
    return out;
  }
  friend TrigPoly operator*(const Rational& q, const TrigPoly& a) {
    TrigPoly out;
    for (const auto& [mono, v] : a.terms_) out.add(mono[0], mono[1], mono[2], q * v);
    return out;
  }
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.terms_ == b.terms_; }

  template <class Real = double>
  Real evaluate(const Real& c, const Real& s, const Real& t) const {
    using std::pow;
    Real out = 0;
    for (const auto& [mono, q] : terms_)
      out += to_real<Real>(q) * pow(c, mono[0]) * pow(s, mono[1]) * pow(t, mono[2]);
    return out;
  }

  /// e.g. "-36*t^2*c^2 + 4*t^2*s^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending powers of c, as in the printed displays.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [mono, q] = *it;
      bool neg = q < 0;
      Rational mag = neg ? Rational(-q) : q;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      std::string body;
      auto factor = [&](const char* sym, int e) {
        if (e == 0) return;
        if (!body.empty()) body += "*";
        body += sym;
        if (e > 1) body += "^" + std::to_string(e);
      };
      factor("t", mono[2]);
      factor("c", mono[0]);
      factor("s", mono[1]);
      if (mag != 1 || body.empty()) {
        os << mag.str();
        if (!body.empty()) os << "*";
      }
      os << body;
    }
    return os.str();
  }

 private:
  std::map<Monomial, Rational> terms_;
};

inline constexpr int kExpansionTerms = 6;

/// Six terms a_0..a_5 (a_k homogeneous of degree k in t) and seven remainders:
/// |target - sum_{i<K} a_i| <= remainders[K] t^K for 0 <= K <= 6.
struct RemainderedExpansion {
  std::array<TrigPoly, kExpansionTerms> terms{};
  std::array<Rational, kExpansionTerms + 1> remainders{};

  void validate() const {
    for (int k = 0; k < kExpansionTerms; ++k)
      for (const auto& [mono, q] : terms[k].terms()) {
        if (mono[2] != k) throw std::domain_error("RemainderedExpansion: term " + std::to_string(k) + " is not of degree " + std::to_string(k) + " in t");
        if (mono[0] + mono[1] > 6) throw std::domain_error("RemainderedExpansion: trigonometric degree above 6");
      }
    for (const auto& r : remainders)
      if (r < 0) throw std::domain_error("RemainderedExpansion: negative remainder");
  }

  friend bool operator==(const RemainderedExpansion& a, const RemainderedExpansion& b) {
    return a.terms == b.terms && a.remainders == b.remainders;
  }
};

enum class BaseWhich { J0, J1 };
enum class ProductTag { J000, J110 };

/// The multiplicative identity.
inline RemainderedExpansion one_expansion() {
  RemainderedExpansion out;
  out.terms[0] = TrigPoly(0, 0, 0, Rational(1));
  out.remainders[0] = 1;
  return out;
}

/// Expansion of sqrt(pi r / 2) J_n(r), n in {0, 1}.
inline RemainderedExpansion base_expansion(BaseWhich which) {
  const int n = which == BaseWhich::J0 ? 0 : 1;
  RemainderedExpansion out;
  // cos(omega_n), sin(omega_n) in terms of (c, s): for n = 1, cos = s and sin = -c.
  for (int k = 0; k < kExpansionTerms; ++k) {
    Rational scaled = a_coeff(k, n).coeff() * Rational(pow_int(BigInt(16), static_cast<unsigned>(k)));
    // even k: (-1)^(k/2) cos(omega); odd k: -(-1)^((k-1)/2) sin(omega)
    bool use_cos = k % 2 == 0;
    int sign = use_cos ? ((k / 2) % 2 == 0 ? 1 : -1) : (((k - 1) / 2) % 2 == 0 ? -1 : 1);
    int ci = 0, si = 0;
    if (n == 0) {
      (use_cos ? ci : si) = 1;
    } else if (use_cos) {
      si = 1;
    } else {
      ci = 1;
      sign = -sign;
    }
    out.terms[k] = TrigPoly(ci, si, k, Rational(sign) * scaled);
  }
  out.remainders[0] = n == 0 ? Rational(9, 8) : Rational(11, 8);
  for (int k = 1; k <= kExpansionTerms; ++k)
    out.remainders[k] = a_coeff(k, n).abs().coeff() * Rational(pow_int(BigInt(16), static_cast<unsigned>(k)));
  return out;
}

/// Product rule: terms_k = sum a_i b_{k-i}, remainder_k = r_0 s_k + sum_{i=1}^k r_i |b_{k-i}|.
inline RemainderedExpansion multiply(const RemainderedExpansion& a, const RemainderedExpansion& b) {
  a.validate();
  b.validate();
  RemainderedExpansion out;
  for (int k = 0; k < kExpansionTerms; ++k)
    for (int i = 0; i <= k; ++i) out.terms[k] = out.terms[k] + a.terms[i] * b.terms[k - i];
  for (int k = 0; k <= kExpansionTerms; ++k) {
    Rational rem = a.remainders[0] * b.remainders[k];
    for (int i = 1; i <= k; ++i) rem += a.remainders[i] * b.terms[k - i].abs_sum();
    out.remainders[k] = rem;
  }
  out.validate();
  return out;
}

inline RemainderedExpansion product_expansion(ProductTag tag) {
  RemainderedExpansion j0 = base_expansion(BaseWhich::J0);
  if (tag == ProductTag::J000) return multiply(multiply(j0, j0), j0);
  RemainderedExpansion j1 = base_expansion(BaseWhich::J1);
  return multiply(multiply(j1, j1), j0);
}

/// Sum of the first K terms at r, with radius remainders[K] (16 r)^-K.
inline CertifiedValue<double> eval_expansion(const RemainderedExpansion& e, double r, int K) {
  if (!(r > 0.0) || !std::isfinite(r)) throw std::domain_error("eval_expansion: r must be positive");
  if (K < 0 || K > kExpansionTerms) throw std::domain_error("eval_expansion: K must lie in [0, 6]");
  double w = phase(0, r);
  double c = std::cos(w), s = std::sin(w), t = 1.0 / (16.0 * r);
  double mid = 0.0;
  for (int i = 0; i < K; ++i) mid += e.terms[i].evaluate(c, s, t);
  return {mid, to_real<double>(e.remainders[K]) * std::pow(t, K)};
}

inline constexpr int kN0 = 20;

/// Gamma(29/2) / Gamma(53/2) * 20^12.
inline Rational estimate_a_a0() {
  return gamma_ratio(29, 53).coeff() * Rational(pow_int(BigInt(20), 12));
}

/// Pre-constant of the Cauchy-Schwarz chain: (r_6 / 16^6) sqrt(a0) sqrt(64/693).
inline double estimate_A_constant(Variant v) {
  const RemainderedExpansion e = product_expansion(v == Variant::I0 ? ProductTag::J000 : ProductTag::J110);
  HighReal last = to_real<HighReal>(e.remainders[kExpansionTerms] / Rational(pow_int(BigInt(16), 6)));
  HighReal a0 = to_real<HighReal>(estimate_a_a0());
  HighReal out = last * sqrt(a0) * sqrt(HighReal(64) / 693);
  return static_cast<double>(out);
}

inline double estimate_A_printed_constant(Variant v) { return v == Variant::I0 ? 0.74 : 1.12; }

/// Estimate A: bound on the contribution of the expansion remainder, n >= 20.
inline double estimate_A(int m, int n, Variant v) {
  if (n < kN0) throw std::domain_error("estimate_A: requires n >= 20");
  if (m < 0) throw std::domain_error("estimate_A: m must be nonnegative");
  return estimate_A_printed_constant(v) / std::sqrt(static_cast<double>(kN0)) * std::pow(n + m, -6.0);
}

}  // namespace besselsix
