#pragma once

// Certified predictions for I0/I1 at n >= 20 and the applicability map of the
// main theorem's constants.

#include <besselsix/certified.hpp>
#include <besselsix/core_integrals.hpp>
#include <besselsix/exactnum.hpp>
#include <besselsix/expansions.hpp>

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace besselsix {

/// 4 / pi^2 as an ExactScalar.
inline ExactScalar normalizing_factor() { return {Rational(4), -4}; }

inline double normalizing_factor_value() { return 4.0 / (pi_v<double>() * pi_v<double>()); }

/// The theorem's main expression: (4 / pi^2) times the core main term.
inline ExactScalar theorem_main(int m, int n, Variant v) { return normalizing_factor() * main_term(m, n, v); }

/// Power of n in the assembled bound: n^-6 for m = 4, else n^-4.
inline int assembly_power(int m) { return m == 4 ? 6 : 4; }

struct BudgetItem {
  std::string name;
  double value = 0;
};

/// The four pieces of the assembled bound as coefficients of n^-tau (before 4 / pi^2).
struct Bracket {
  double estimate_a = 0;
  double estimate_b = 0;
  double e1 = 0;
  double e2 = 0;
  double total() const { return estimate_a + estimate_b + e1 + e2; }
};

/// Pieces evaluated at n0. With certified_b the Estimate B constant is the larger
/// of the printed and the uniform one; otherwise the printed constant alone.
inline Bracket assembly_bracket(int m, Variant v, bool certified_b = true) {
  if (m < 0 || m % 2 != 0) throw std::domain_error("assembly_bracket: m must be even and nonnegative");
  const double n0 = kN0;
  Bracket b;
  b.estimate_a = estimate_A_printed_constant(v) * std::pow(n0, m == 4 ? -0.5 : -2.5);
  double cb = estimate_B_printed_constant(m, v);
  if (certified_b) cb = std::max(cb, estimate_B_uniform_constant(m, v));
  b.estimate_b = cb * std::pow(n0, (m == 0 || m >= 6) ? -1 : -3);
  const int a = e1_scaling(m).first;
  b.e1 = (e1_printed_constant(m, v, TrigKind::cos) + e1_printed_constant(m, v, TrigKind::sin)) * std::pow(n0, -a);
  b.e2 = 2 * e2_printed_prefactor(v) * std::pow(m == 4 ? 0.75 : 0.6, kN0);
  return b;
}

/// Rolled-up constants as printed: |core - main| <= C n^-tau.
inline double rolled_up_printed(int m, Variant v) {
  if (m < 0 || m % 2 != 0) throw std::domain_error("rolled_up_printed: m must be even and nonnegative");
  const bool i0 = v == Variant::I0;
  switch (m) {
    case 0: return i0 ? 0.0030 : 0.0028;
    case 2: return i0 ? 0.0028 : 0.0015;
    case 4: return i0 ? 0.197 : 0.264;
    default: return i0 ? 0.0022 : 0.0020;
  }
}

inline double rolled_up_recomputed(int m, Variant v, bool certified_b = true) {
  return assembly_bracket(m, v, certified_b).total();
}

struct Prediction {
  Variant variant = Variant::I0;
  int m = 0;
  int n = 0;
  ExactScalar main;
  double radius = 0;
  std::vector<BudgetItem> budget;
};

inline Prediction predict(int m, int n, Variant v) {
  if (n < kN0) throw std::domain_error("predict: n must be at least 20; use integrate or table for smaller n");
  detail::check_m_n(m, n, kN0, "predict");
  Prediction p;
  p.variant = v;
  p.m = m;
  p.n = n;
  p.main = theorem_main(m, n, v);
  const Bracket b = assembly_bracket(m, v, true);
  const double scale = std::pow(static_cast<double>(n), -assembly_power(m)) * normalizing_factor_value();
  p.budget = {{"estimate_A", b.estimate_a * scale},
              {"estimate_B", b.estimate_b * scale},
              {"e1", b.e1 * scale},
              {"e2", b.e2 * scale}};
  for (const auto& item : p.budget) p.radius += item.value;
  return p;
}

// ---- Theorem constants ----

struct TheoremRule {
  std::optional<Variant> variant;  // empty: both
  int m_lo = 0;
  std::optional<int> m_hi;  // empty: every even m >= m_lo
  int n_lo = 2;             // n >= max(n_lo, m) always applies
  std::optional<int> n_hi;
  double constant = 0;
  const char* label = "";
};

/// Applicability map; the first matching rule wins.
inline const std::vector<TheoremRule>& theorem_rules() {
  static const std::vector<TheoremRule> rules = {
      {Variant::I0, 0, 0, 2, 6, 0.01, "exception"},
      {Variant::I0, 0, 0, 7, std::nullopt, 0.002, "(i)"},
      {Variant::I1, 0, 0, 2, 3, 0.01, "exception"},
      {Variant::I1, 0, 0, 4, std::nullopt, 0.002, "(i)"},
      {std::nullopt, 2, 2, 2, std::nullopt, 0.002, "(ii)"},
      {std::nullopt, 4, 4, 4, std::nullopt, 0.0015, "(iii)"},
      {std::nullopt, 6, std::nullopt, 6, std::nullopt, 0.0015, "(iv)"},
  };
  return rules;
}

inline const TheoremRule* theorem_rule(int m, int n, Variant v) {
  if (m < 0 || m % 2 != 0 || n < 2 || m > n) return nullptr;
  for (const auto& r : theorem_rules()) {
    if (r.variant && *r.variant != v) continue;
    if (m < r.m_lo || (r.m_hi && m > *r.m_hi)) continue;
    if (n < std::max(r.n_lo, m) || (r.n_hi && n > *r.n_hi)) continue;
    return &r;
  }
  return nullptr;
}

inline std::optional<double> theorem_constants(int m, int n, Variant v) {
  const TheoremRule* r = theorem_rule(m, n, v);
  if (!r) return std::nullopt;
  return r->constant;
}

struct TheoremCheck {
  bool pass = false;
  double deviation = 0;  // |mid - main| + rad
  double bound = 0;      // constant * n^-4
  double slack = 0;      // bound - deviation
};

inline TheoremCheck check_theorem(int m, int n, Variant v, const CertifiedValue<double>& measured) {
  auto c = theorem_constants(m, n, v);
  if (!c) throw std::domain_error("check_theorem: no theorem constant for this (m, n, variant)");
  if (!(measured.rad >= 0) || !std::isfinite(measured.mid)) throw std::domain_error("check_theorem: invalid enclosure");
  TheoremCheck out;
  const double main = theorem_main(m, n, v).to_real<double>();
  out.deviation = std::abs(measured.mid - main) + measured.rad;
  out.bound = *c * std::pow(static_cast<double>(n), -4);
  out.slack = out.bound - out.deviation;
  out.pass = out.slack >= 0;
  return out;
}

}  // namespace besselsix
