#pragma once

// Composite 7-point Newton-Cotes quadrature of I0/I1 on [0, R] with a certified
// tail on [R, inf), and the table of normalized deviations for 2 <= n <= 19.

#include <besselsix/bessel.hpp>
#include <besselsix/certified.hpp>
#include <besselsix/certify.hpp>
#include <besselsix/exactnum.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace besselsix {

inline constexpr std::array<int, 7> kNC7Weights{41, 216, 27, 272, 27, 216, 41};  // over 140
inline constexpr double kRoundingAllowance = 0.05e-8;
inline constexpr double kTableRadius = 0.9e-8;

struct QuadratureScheme {
  double S = 3600;
  double R = 63000;
  double w_low = 0.003;
  double w_high = 0.05;

  /// Finer grid and longer range used to compare with the analytic regime at n >= 20.
  static QuadratureScheme refined() { return {3600, 126000, 0.0025, 0.03}; }

  bool is_default() const { return S == 3600 && R == 63000 && w_low == 0.003 && w_high == 0.05; }

  void validate() const;
  long long panels_low() const;
  long long panels_high() const;
};

namespace detail {

inline long long panel_count(double a, double b, double w, const char* who) {
  if (!(w > 0) || !(b > a) || !std::isfinite(a) || !std::isfinite(b))
    throw std::domain_error(std::string(who) + ": need a < b and w > 0");
  const double n = (b - a) / (6 * w);
  const double k = std::round(n);
  if (k < 1 || std::abs(n - k) > 1e-9 * std::max(1.0, n))
    throw std::domain_error(std::string(who) + ": (b - a) / (6 w) must be a positive integer");
  return static_cast<long long>(k);
}

inline int nc7_coefficient(long long i, long long last) {
  if (i == 0 || i == last) return 41;
  const int r = static_cast<int>(i % 6);
  return r == 0 ? 82 : kNC7Weights[r];
}

inline double pairwise_sum(const double* x, std::size_t n, std::size_t stride) {
  if (n == 0) return 0.0;
  if (n == 1) return x[0];
  const std::size_t h = n / 2;
  return pairwise_sum(x, h, stride) + pairwise_sum(x + h * stride, n - h, stride);
}

}  // namespace detail

inline void QuadratureScheme::validate() const {
  if (!(S > 0) || !(R > S)) throw std::domain_error("QuadratureScheme: need 0 < S < R");
  detail::panel_count(0, S, w_low, "QuadratureScheme low");
  detail::panel_count(S, R, w_high, "QuadratureScheme high");
}
inline long long QuadratureScheme::panels_low() const { return detail::panel_count(0, S, w_low, "panels_low"); }
inline long long QuadratureScheme::panels_high() const { return detail::panel_count(S, R, w_high, "panels_high"); }

/// Worker count: BESSELSIX_WORKERS if set, else the hardware concurrency.
inline int default_workers() {
  if (const char* env = std::getenv("BESSELSIX_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

enum class Summation { plain, compensated };

inline constexpr long long kBlockNodes = 6 * 2048;

/// Composite rule for `count` integrands sharing nodes. eval(x, out) writes
/// out[0..count). Nodes are grouped in fixed blocks whose partial sums are
/// combined pairwise in block order, so the result does not depend on workers.
template <class Eval>
std::vector<double> nc7_composite_multi(Eval&& eval, std::size_t count, double a, double b, double w, int workers = 1,
                                        Summation mode = Summation::plain) {
  const long long panels = detail::panel_count(a, b, w, "nc7_composite");
  const long long last = 6 * panels;
  const double h = (b - a) / static_cast<double>(last);
  const long long blocks = (last + kBlockNodes) / kBlockNodes;
  std::vector<double> partial(static_cast<std::size_t>(blocks) * count, 0.0);
  std::atomic<long long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto work = [&] {
    std::vector<double> vals(count), sum(count), comp(count);
    try {
      for (long long blk = next++; blk < blocks; blk = next++) {
        std::fill(sum.begin(), sum.end(), 0.0);
        std::fill(comp.begin(), comp.end(), 0.0);
        const long long lo = blk * kBlockNodes;
        const long long hi = std::min(last, lo + kBlockNodes - 1);
        for (long long i = lo; i <= hi; ++i) {
          const double x = i == last ? b : std::fma(static_cast<double>(i), h, a);
          eval(x, vals.data());
          const double c = detail::nc7_coefficient(i, last);
          for (std::size_t k = 0; k < count; ++k) {
            const double t = c * vals[k];
            if (mode == Summation::plain) {
              sum[k] += t;
            } else {
              const double s = sum[k] + t;
              comp[k] += std::abs(sum[k]) >= std::abs(t) ? (sum[k] - s) + t : (t - s) + sum[k];
              sum[k] = s;
            }
          }
        }
        for (std::size_t k = 0; k < count; ++k) partial[static_cast<std::size_t>(blk) * count + k] = sum[k] + comp[k];
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = blocks;
    }
  };

  workers = std::max(1, std::min<int>(workers, static_cast<int>(blocks)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k)
    out[k] = detail::pairwise_sum(partial.data() + k, static_cast<std::size_t>(blocks), count) * h / 140.0;
  return out;
}

inline double nc7_composite(const std::function<double(double)>& f, double a, double b, double w, int workers = 1,
                            Summation mode = Summation::plain) {
  return nc7_composite_multi([&](double x, double* out) { out[0] = f(x); }, 1, a, b, w, workers, mode)[0];
}

// ---- Error bounds for the composite rule ----

enum class Region { low, high };

inline double factorial8() { return 40320.0; }

/// Printed sup bound for |f^(8)| on the region, uniform over both integrand families.
inline double deriv8_bound(Region region, const QuadratureScheme& s) {
  if (region == Region::low) return factorial8() * std::exp(6.0) * (s.S + 1);
  const double base = 2.0 / (pi_v<double>() * (s.S - 1));
  return 3 * factorial8() * base * base * base * std::pow(std::cosh(1.0), 6) * (s.R + 1);
}

/// |int - composite| <= (b - a) w^8 (6^3 / 5) sup|f^(8)| / 8!.
inline double nc7_error_bound(double length, double w, double deriv8) {
  return length * std::pow(w, 8) * (216.0 / 5.0) * deriv8 / factorial8();
}

inline double quad_error(Region region, const QuadratureScheme& s) {
  s.validate();
  if (region == Region::low) return nc7_error_bound(s.S, s.w_low, deriv8_bound(Region::low, s));
  return nc7_error_bound(s.R - s.S, s.w_high, deriv8_bound(Region::high, s));
}

/// The high-region bound replaces the order factors (1 + k^2 / S) 1.01 of all six
/// Bessel functions by 3 in total; true iff that product is at most 3.
inline bool high_bound_applies(int m, int n, const QuadratureScheme& s) {
  auto f = [&](double k) { return (1 + k * k / s.S) * 1.01; };
  return f(n + m) * f(n) * f(m) * std::pow(f(1), 3) <= 3.0;
}

// ---- Integrands ----

inline double integrand_from(Variant v, int m, int n, const double* js, double r) {
  const double common = js[n + m] * js[n] * js[m] * r;
  return v == Variant::I0 ? common * js[0] * js[0] * js[0] : common * js[1] * js[1] * js[0];
}

inline std::function<double(double)> integrand(Variant v, int m, int n) {
  if (m < 0 || n < 0 || n + m > kMaxOrder) throw std::domain_error("integrand: orders must satisfy 0 <= m, n and n + m <= 40");
  return [v, m, n](double r) {
    std::array<double, kMaxOrder + 1> js{};
    bessel_j_sequence(std::max(n + m, 1), r, js);
    return integrand_from(v, m, n, js.data(), r);
  };
}

// ---- Tail over [R, inf) ----

enum class Parity { even, odd };

inline Parity parity_of(int n) { return n % 2 == 0 ? Parity::even : Parity::odd; }
inline const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// T(theta) = mean + sum_k c_k cos(2 k theta), theta = r - pi/4.
struct TailHarmonics {
  Rational mean;
  std::array<Rational, 3> cos_coeff;
};

/// cos^6 (I0 even), sin^2 cos^4 (I0 odd, I1 even), sin^4 cos^2 (I1 odd).
inline TailHarmonics tail_harmonics(Variant v, Parity p) {
  const Rational d = 32;
  if (v == Variant::I0 && p == Parity::even) return {Rational(10) / d, {Rational(15) / d, Rational(6) / d, Rational(1) / d}};
  if (v == Variant::I1 && p == Parity::odd) return {Rational(2) / d, {Rational(-1) / d, Rational(-2) / d, Rational(1) / d}};
  return {Rational(2) / d, {Rational(1) / d, Rational(-2) / d, Rational(-1) / d}};
}

/// int_R^inf (2 / (pi r))^3 T(r - pi/4) r dr; harmonics by two integrations by parts.
inline CertifiedValue<double> tail_main(Variant v, Parity p, double R) {
  if (!(R >= 1000) || !std::isfinite(R)) throw std::domain_error("tail_main: R must be at least 1000");
  const TailHarmonics t = tail_harmonics(v, p);
  const double pi = pi_v<double>();
  const double k8 = 8 / (pi * pi * pi);
  double mid = to_real<double>(t.mean) / R;
  double rad = 0;
  for (int k = 1; k <= 3; ++k) {
    const double c = to_real<double>(t.cos_coeff[k - 1]);
    const double lam = 2.0 * k;
    const double phi = harmonic_phase(2 * k, R);
    mid += c * (-std::sin(phi) / (lam * R * R) + 2 * std::cos(phi) / (lam * lam * R * R * R));
    rad += std::abs(c) * 2 / (lam * lam * R * R * R);
  }
  mid *= k8;
  rad = rad * k8 + 1e-15 * std::abs(mid);
  if (rad > 1e-10) throw std::domain_error("tail_main: R too small for the tail radius target");
  return {mid, rad};
}

/// Constants used by the printed table: 1.2798e-6 (I0, even n) and 0.2560e-6 otherwise.
inline double tail_table_constant(Variant v, Parity p) {
  return v == Variant::I0 && p == Parity::even ? 1.2798e-6 : 0.2560e-6;
}

/// The four groups of tail error terms.
struct TailErrorPieces {
  double second_main = 0;  // products of five main terms and the second fine term
  double fine_error = 0;   // products of five main terms and the fine error
  double fifteen = 0;      // two error factors
  double remaining = 0;    // three or more error factors
  double total() const { return second_main + fine_error + fifteen + remaining; }
};

inline TailErrorPieces tail_error_printed() { return {2.1e-11, 1.64e-9, 3.32e-9, 4.5e-10}; }

/// The printed formulas with order constants q(k) = max(k^2, 1) for the orders
/// n + m, n, m and 1 for each of the three low-order factors.
inline TailErrorPieces tail_error_formulas(int a, int b, int c, double R) {
  auto q = [](int k) { return std::max(1.0, static_cast<double>(k) * k); };
  const double qa = q(a), qb = q(b), qc = q(c);
  const double pi = pi_v<double>();
  const double k3 = 8 / (pi * pi * pi);
  const double i4 = k3 / (3 * R * R * R);
  const double i5 = k3 / (4 * R * R * R * R);
  TailErrorPieces out;
  out.second_main = 3 * pi * (qa + qb + qc + 3) * i4;
  out.fine_error = 0.25 * (qa * qa + qb * qb + qc * qc + 3) * i4;
  out.fifteen = (qa * qb + qa * qc + qb * qc + 12 * 36.0 * 36.0) * i4;
  out.remaining = 42 * qa * qb * qc * i5;
  return out;
}

inline constexpr double kDefaultR = 63000;

/// Printed pieces scaled by the ratio of the formulas at (n + m, n, m, R) to the
/// formulas at the table extremes (37, 19, 18) and R = 63000.
inline TailErrorPieces tail_error_budget(Variant /*v*/, int m, int n, double R = kDefaultR) {
  if (m < 0 || n < 0 || n + m > 37) throw std::domain_error("tail_error_budget: requires n + m <= 37");
  if (!(R >= kDefaultR)) throw std::domain_error("tail_error_budget: requires R >= 63000");
  const TailErrorPieces ref = tail_error_formulas(37, 19, 18, kDefaultR);
  const TailErrorPieces act = tail_error_formulas(n + m, n, m, R);
  const TailErrorPieces pr = tail_error_printed();
  return {pr.second_main * act.second_main / ref.second_main, pr.fine_error * act.fine_error / ref.fine_error,
          pr.fifteen * act.fifteen / ref.fifteen, pr.remaining * act.remaining / ref.remaining};
}

// ---- Certified integrals ----

struct ErrorBudget {
  double quad_low = 0;
  double quad_high = 0;
  double tail_main_eval = 0;
  double tail_error_terms = 0;
  double rounding = 0;
  double total = 0;
};

struct Cell {
  Variant variant = Variant::I0;
  int m = 0;
  int n = 0;
};

struct IntegralResult {
  Cell cell;
  double low_sum = 0;   // composite rule on [0, S]
  double high_sum = 0;  // composite rule on [S, R]
  CertifiedValue<double> tail;
  ErrorBudget budget;
  CertifiedValue<double> value;
};

namespace detail {

inline void check_cell(const Cell& c, const QuadratureScheme& s) {
  if (c.m < 0 || c.m % 2 != 0) throw std::domain_error("integral: m must be even and nonnegative");
  if (c.n < 0 || c.m > c.n) throw std::domain_error("integral: need 0 <= m <= n");
  if (!high_bound_applies(c.m, c.n, s)) throw std::domain_error("integral: orders too large for the high-region derivative bound");
}

}  // namespace detail

/// Certified I for several cells, sharing Bessel evaluations at every node.
inline std::vector<IntegralResult> integrate_cells(const std::vector<Cell>& cells, const QuadratureScheme& s = {},
                                                   int workers = 1, Summation mode = Summation::plain) {
  s.validate();
  int nmax = 1;
  for (const auto& c : cells) {
    detail::check_cell(c, s);
    nmax = std::max(nmax, c.n + c.m);
  }
  auto eval = [&](double r, double* out) {
    std::array<double, kMaxOrder + 1> js{};
    bessel_j_sequence(nmax, r, js);
    for (std::size_t k = 0; k < cells.size(); ++k) out[k] = integrand_from(cells[k].variant, cells[k].m, cells[k].n, js.data(), r);
  };
  const auto low = nc7_composite_multi(eval, cells.size(), 0.0, s.S, s.w_low, workers, mode);
  const auto high = nc7_composite_multi(eval, cells.size(), s.S, s.R, s.w_high, workers, mode);
  const double ql = quad_error(Region::low, s), qh = quad_error(Region::high, s);
  std::vector<IntegralResult> out;
  out.reserve(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    IntegralResult res;
    res.cell = cells[k];
    res.low_sum = low[k];
    res.high_sum = high[k];
    res.tail = tail_main(cells[k].variant, parity_of(cells[k].n), s.R);
    ErrorBudget& b = res.budget;
    b.quad_low = ql;
    b.quad_high = qh;
    b.tail_main_eval = res.tail.rad;
    b.tail_error_terms = tail_error_budget(cells[k].variant, cells[k].m, cells[k].n, s.R).total();
    b.rounding = kRoundingAllowance;
    b.total = b.quad_low + b.quad_high + b.tail_main_eval + b.tail_error_terms + b.rounding;
    res.value = {res.low_sum + res.high_sum + res.tail.mid, b.total};
    out.push_back(res);
  }
  return out;
}

inline IntegralResult integral(Variant v, int m, int n, const QuadratureScheme& s = {}, int workers = 1) {
  return integrate_cells({{v, m, n}}, s, workers).front();
}

// ---- Table ----

struct TableEntry {
  int n = 0;
  int m = 0;
  double top = 0;     // I0: (|main - tail const - F| + 0.9e-8) 100 n^4
  double bottom = 0;  // I1, likewise
  CertifiedValue<double> i0;
  CertifiedValue<double> i1;
};

inline double table_value(Variant v, int m, int n, double quad_sum) {
  const double main = theorem_main(m, n, v).to_real<double>();
  const double dev = std::abs(main - tail_table_constant(v, parity_of(n)) - quad_sum);
  return (dev + kTableRadius) * 100 * std::pow(static_cast<double>(n), 4);
}

/// Every even m <= n for n_lo <= n <= n_hi.
inline std::vector<TableEntry> build_table(int n_lo = 2, int n_hi = 19, int workers = 1) {
  if (n_lo < 2 || n_hi > 19 || n_lo > n_hi) throw std::domain_error("build_table: rows must lie in 2..19");
  std::vector<Cell> cells;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int m = 0; m <= n; m += 2) {
      cells.push_back({Variant::I0, m, n});
      cells.push_back({Variant::I1, m, n});
    }
  const auto res = integrate_cells(cells, {}, workers);
  std::vector<TableEntry> out;
  for (std::size_t k = 0; k < res.size(); k += 2) {
    TableEntry e;
    e.n = res[k].cell.n;
    e.m = res[k].cell.m;
    e.top = table_value(Variant::I0, e.m, e.n, res[k].low_sum + res[k].high_sum);
    e.bottom = table_value(Variant::I1, e.m, e.n, res[k + 1].low_sum + res[k + 1].high_sum);
    e.i0 = res[k].value;
    e.i1 = res[k + 1].value;
    out.push_back(e);
  }
  return out;
}

/// Upper bound rounded up to two decimals, printed without the leading zero as in the table.
inline std::string table_cell(double v) {
  const double up = std::ceil(v * 100 - 1e-9) / 100;
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << up;
  return os.str();
}

inline std::string table_csv(const std::vector<TableEntry>& rows) {
  std::ostringstream os;
  os << "n,m,top,bottom\n";
  for (const auto& e : rows) os << e.n << ',' << e.m << ',' << table_cell(e.top) << ',' << table_cell(e.bottom) << '\n';
  return os.str();
}

// ---- Figure ----

struct CurvePoint {
  double r = 0;
  double f = 0;
};

/// Samples of J15 J9 J6 J1^2 J0 r on [0, 100].
inline std::vector<CurvePoint> figure1(int samples = 2001) {
  if (samples < 2) throw std::domain_error("figure1: need at least two samples");
  auto f = integrand(Variant::I1, 6, 9);
  std::vector<CurvePoint> out(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double r = 100.0 * i / (samples - 1);
    out[static_cast<std::size_t>(i)] = {r, f(r)};
  }
  return out;
}

}  // namespace besselsix
