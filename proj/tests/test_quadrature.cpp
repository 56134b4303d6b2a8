#include <besselsix/closed_form.hpp>
#include <besselsix/quadrature.hpp>

#include "support/printed.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

using namespace besselsix;

namespace {

const double kPi = M_PI;

const auto& printed_table() { return printed::table(); }

const std::vector<TableEntry>& full_table() {
  static const std::vector<TableEntry> t = build_table(2, 19, 2);
  return t;
}

const TableEntry& entry(int n, int m) {
  for (const auto& e : full_table())
    if (e.n == n && e.m == m) return e;
  throw std::logic_error("missing table entry");
}

// J_n J_m r^-k with its limit at r = 0.
double two_bessel(int n, int m, int k, double r) {
  if (r == 0) return k == n + m ? 1.0 / (std::pow(2.0, n + m) * std::tgamma(n + 1.0) * std::tgamma(m + 1.0)) : 0.0;
  return bessel_j(n, r) * bessel_j(m, r) * std::pow(r, -k);
}

}  // namespace

TEST(NC7, WeightsSumToSix) {
  int sum = 0;
  for (int w : kNC7Weights) sum += w;
  EXPECT_EQ(sum, 6 * 140);
}

TEST(NC7, Examples) {
  EXPECT_NEAR(nc7_composite([](double x) { return std::pow(x, 7); }, 0, 6, 1), 209952.0, 209952.0 * 1e-12);
  double exact = std::pow(6.0, 9) / 9;
  double f = nc7_composite([](double x) { return std::pow(x, 8); }, 0, 6, 1);
  EXPECT_NEAR(std::abs(exact - f), std::pow(6.0, 4) / 5, 1e-9);
  EXPECT_DOUBLE_EQ(nc7_composite([](double) { return 1.0; }, 2, 14, 0.5), 12.0);
  EXPECT_THROW(nc7_composite([](double) { return 1.0; }, 0, 1, 0.1), std::domain_error);
  EXPECT_THROW(nc7_composite([](double) { return 1.0; }, 1, 0, 0.1), std::domain_error);
}

TEST(NC7, ExactOnDegreeSevenRandomIntervals) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> start(-3, 3), width(0.05, 0.7);
  std::uniform_int_distribution<int> panels(1, 40);
  for (int trial = 0; trial < 50; ++trial) {
    double a = start(rng), w = width(rng);
    double b = a + 6 * w * panels(rng);
    for (int d = 0; d <= 7; ++d) {
      double exact = (std::pow(b, d + 1) - std::pow(a, d + 1)) / (d + 1);
      double got = nc7_composite([d](double x) { return std::pow(x, d); }, a, b, w);
      double scale = std::max({std::abs(exact), std::pow(std::abs(a), d + 1), std::pow(std::abs(b), d + 1)});
      EXPECT_LE(std::abs(got - exact), 1e-12 * scale) << a << " " << b << " " << d;
    }
  }
}

TEST(NC7, EighthPowerErrorScalesAsW8) {
  auto err = [](double w) {
    double f = nc7_composite([](double x) { return std::pow(x, 8); }, 0, 6, w);
    return std::abs(std::pow(6.0, 9) / 9 - f);
  };
  for (double w : {1.0, 0.5, 0.25}) {
    double ratio = err(w) / err(w / 2);
    EXPECT_NEAR(ratio, 256.0, 2.56) << w;
  }
}

TEST(NC7, DeterministicAcrossWorkers) {
  auto eval = [](double x, double* out) {
    out[0] = std::sin(x) * std::exp(-x / 50);
    out[1] = std::cos(3 * x) / (1 + x);
  };
  auto one = nc7_composite_multi(eval, 2, 0, 360, 0.003, 1);
  for (int w : {2, 3, 8}) {
    auto many = nc7_composite_multi(eval, 2, 0, 360, 0.003, w);
    EXPECT_EQ(one, many) << w;
  }
}

TEST(NC7, CompensatedSummationWithinRoundingAllowance) {
  std::vector<Cell> cells = {{Variant::I0, 0, 2}, {Variant::I1, 18, 19}, {Variant::I0, 4, 14}};
  auto plain = integrate_cells(cells, {}, 1, Summation::plain);
  auto comp = integrate_cells(cells, {}, 1, Summation::compensated);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    double d = std::abs(plain[k].low_sum + plain[k].high_sum - comp[k].low_sum - comp[k].high_sum);
    EXPECT_LE(d, 1e-3 * kRoundingAllowance) << k;
  }
}

TEST(Scheme, DefaultsAndPanelCounts) {
  QuadratureScheme s;
  EXPECT_TRUE(s.is_default());
  EXPECT_EQ(s.panels_low(), 200000);
  EXPECT_EQ(s.panels_high(), 198000);
  EXPECT_NO_THROW(QuadratureScheme::refined().validate());
  QuadratureScheme bad{3600, 63000, 0.0031, 0.05};
  EXPECT_THROW(bad.validate(), std::domain_error);
}

TEST(ErrorBounds, DerivativeBoundsAndQuadratureErrors) {
  QuadratureScheme s;
  EXPECT_DOUBLE_EQ(deriv8_bound(Region::low, s), 40320.0 * std::exp(6.0) * 3601);
  double high = 3 * 40320.0 * std::pow(2 / (kPi * 3599), 3) * std::pow(std::cosh(1.0), 6) * 63001;
  EXPECT_NEAR(deriv8_bound(Region::high, s), high, 1e-12 * high);
  double ql = quad_error(Region::low, s), qh = quad_error(Region::high, s);
  EXPECT_LE(ql, 1.49e-9);
  EXPECT_LE(qh, 1.42e-9);
  EXPECT_NEAR(ql, 3600 * std::pow(0.003, 8) * 216 / 5 * std::exp(6.0) * 3601, 1e-20);
  EXPECT_NEAR(ql, 1.4823e-9, 1e-13);
  EXPECT_NEAR(qh, 1.4156e-9, 1e-13);
}

TEST(ErrorBounds, HighBoundOrderCondition) {
  QuadratureScheme s;
  for (int n = 2; n <= 24; ++n)
    for (int m = 0; m <= std::min(n, 37 - n); m += 2) EXPECT_TRUE(high_bound_applies(m, n, s)) << m << " " << n;
  EXPECT_FALSE(high_bound_applies(40, 40, s));
}

TEST(Integrand, Values) {
  EXPECT_EQ(integrand(Variant::I1, 6, 9)(0.0), 0.0);
  double r = 12.5;
  double expect = bessel_j(15, r) * bessel_j(9, r) * bessel_j(6, r) * std::pow(bessel_j(1, r), 2) * bessel_j(0, r) * r;
  EXPECT_NEAR(integrand(Variant::I1, 6, 9)(r), expect, 1e-16);
  expect = bessel_j(7, r) * bessel_j(5, r) * bessel_j(2, r) * std::pow(bessel_j(0, r), 3) * r;
  EXPECT_NEAR(integrand(Variant::I0, 2, 5)(r), expect, 1e-16);
}

TEST(Integrand, UniformProductBound) {
  const double c = 8 / std::pow(kPi, 3) * std::pow(9.0 / 8, 4) * std::pow(11.0 / 8, 2);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{6, 9}, {0, 2}, {4, 14}, {18, 19}})
    for (auto v : {Variant::I0, Variant::I1}) {
      auto f = integrand(v, m, n);
      for (double r = 1; r < 63000; r *= 1.013) EXPECT_LE(std::abs(f(r)), c / (r * r)) << m << " " << n << " " << r;
    }
}

TEST(Integrand, FigureShape) {
  auto pts = figure1(2001);
  ASSERT_EQ(pts.size(), 2001u);
  EXPECT_EQ(pts.front().r, 0.0);
  EXPECT_EQ(pts.back().r, 100.0);
  double head = 0, peak = 0, peak_r = 0, tail = 0;
  for (const auto& p : pts) {
    double a = std::abs(p.f);
    if (p.r <= 9) head = std::max(head, a);
    if (p.r >= 81) tail = std::max(tail, a);
    if (a > peak) {
      peak = a;
      peak_r = p.r;
    }
  }
  EXPECT_LT(head, 0.01 * peak);
  EXPECT_GT(peak_r, 9);
  EXPECT_LT(peak_r, 81);
  EXPECT_LT(tail, 0.05 * peak);
}

TEST(Tail, HarmonicsReproduceTrigProducts) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> th(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    double t = th(rng), c = std::cos(t), s = std::sin(t);
    auto eval = [&](Variant v, Parity p) {
      auto h = tail_harmonics(v, p);
      double out = to_real<double>(h.mean);
      for (int k = 1; k <= 3; ++k) out += to_real<double>(h.cos_coeff[k - 1]) * std::cos(2 * k * t);
      return out;
    };
    EXPECT_NEAR(eval(Variant::I0, Parity::even), std::pow(c, 6), 1e-15);
    EXPECT_NEAR(eval(Variant::I0, Parity::odd), s * s * std::pow(c, 4), 1e-15);
    EXPECT_NEAR(eval(Variant::I1, Parity::even), s * s * std::pow(c, 4), 1e-15);
    EXPECT_NEAR(eval(Variant::I1, Parity::odd), std::pow(s, 4) * c * c, 1e-15);
  }
  EXPECT_EQ(tail_harmonics(Variant::I0, Parity::even).mean, Rational(5) / Rational(16));
  EXPECT_EQ(tail_harmonics(Variant::I1, Parity::odd).mean, Rational(1) / Rational(16));
}

TEST(Tail, PrintedValues) {
  auto e = tail_main(Variant::I0, Parity::even, 63000);
  EXPECT_LE(std::abs(e.mid - 1.2798e-6), 1e-10);
  EXPECT_LE(e.rad, 1e-10);
  auto o = tail_main(Variant::I0, Parity::odd, 63000);
  EXPECT_LE(std::abs(o.mid - 0.2560e-6), 1e-10);
  for (auto p : {Parity::even, Parity::odd}) EXPECT_LE(std::abs(tail_main(Variant::I1, p, 63000).mid - 0.2560e-6), 1e-10);
  double mean_only = 8 / std::pow(kPi, 3) * (5.0 / 16) / 63000;
  EXPECT_NEAR(mean_only, 1.279823e-6, 1e-12);
  EXPECT_THROW(tail_main(Variant::I0, Parity::even, 500), std::domain_error);
}

TEST(Tail, ParityCollapseForI1) {
  for (double R : {63000.0, 126000.0}) {
    auto a = tail_main(Variant::I1, Parity::even, R), b = tail_main(Variant::I1, Parity::odd, R);
    EXPECT_LE(std::abs(a.mid - b.mid), 1e-10);
  }
}

TEST(Tail, AgreesWithDirectQuadrature) {
  // Gauss-Legendre over 400000 periods, then the closed-form mean beyond.
  const double R = 63000, k3 = 8 / std::pow(kPi, 3);
  auto f = [&](double r) { return k3 * std::pow(std::cos(r - kPi / 4), 6) / (r * r); };
  double sum = 0, a = R;
  for (int p = 0; p < 400000; ++p, a += 2 * kPi) sum += boost::math::quadrature::gauss<double, 30>::integrate(f, a, a + 2 * kPi);
  sum += k3 * (5.0 / 16) / a;
  auto t = tail_main(Variant::I0, Parity::even, R);
  EXPECT_NEAR(t.mid, sum, 3e-14);
}

TEST(TailBudget, PrintedPiecesDominateFormulas) {
  auto pr = tail_error_printed();
  EXPECT_LE(pr.total(), 5.5e-9);
  auto f = tail_error_formulas(37, 19, 18, 63000);
  EXPECT_LE(f.second_main, 2.1e-11);
  EXPECT_LE(f.fine_error, 1.64e-9);
  EXPECT_LE(f.fifteen, 3.32e-9);
  EXPECT_LE(f.remaining, 4.5e-10);
  // With 18^4 in the 19 x 18 product the fifteen-term piece would exceed its printed bound.
  const double i4 = 8 / std::pow(kPi, 3) / (3 * std::pow(63000.0, 3));
  double quartic = (37.0 * 37 * 19 * 19 + 37.0 * 37 * 18 * 18 + 19.0 * 19 * std::pow(18.0, 4) + 12 * 36.0 * 36) * i4;
  EXPECT_GT(quartic, 3.32e-9);
}

TEST(TailBudget, ScaledBudget) {
  auto ref = tail_error_budget(Variant::I0, 18, 19);
  EXPECT_NEAR(ref.total(), tail_error_printed().total(), 1e-20);
  for (int n = 2; n <= 19; ++n)
    for (int m = 0; m <= n; m += 2) {
      auto b = tail_error_budget(Variant::I1, m, n);
      EXPECT_LE(b.total(), 5.5e-9);
      auto f = tail_error_formulas(n + m, n, m, 63000);
      EXPECT_GE(b.fine_error, f.fine_error);
      EXPECT_GE(b.fifteen, f.fifteen);
    }
  EXPECT_LT(tail_error_budget(Variant::I0, 0, 20, 126000).total(), tail_error_budget(Variant::I0, 0, 20).total() / 7);
  EXPECT_THROW(tail_error_budget(Variant::I0, 20, 20), std::domain_error);
  EXPECT_THROW(tail_error_budget(Variant::I0, 0, 10, 1000), std::domain_error);
}

TEST(Integral, BudgetDominance) {
  auto r = integral(Variant::I0, 0, 7);
  EXPECT_LE(r.budget.quad_low, 1.49e-9);
  EXPECT_LE(r.budget.quad_high, 1.42e-9);
  EXPECT_LE(r.budget.tail_main_eval, 1e-10);
  EXPECT_LE(r.budget.tail_error_terms, 5.5e-9);
  EXPECT_LE(r.budget.rounding, 0.05e-8);
  EXPECT_LE(r.value.rad, 0.9e-8);
  EXPECT_DOUBLE_EQ(r.value.rad, r.budget.total);
  EXPECT_DOUBLE_EQ(r.value.mid, r.low_sum + r.high_sum + r.tail.mid);
}

TEST(Integral, TheoremAtSmallestAdmissibleN) {
  auto r = integral(Variant::I0, 0, 7);
  double main = 3 / (4 * kPi * kPi * 7) - 3 / (32 * kPi * kPi * 6 * 7 * 8);
  EXPECT_LE(std::abs(r.value.mid - main) + r.value.rad, 0.002 * std::pow(7.0, -4));
  EXPECT_TRUE(check_theorem(0, 7, Variant::I0, r.value).pass);
}

TEST(Integral, SmallestOrders) {
  auto r = integral(Variant::I0, 0, 2);
  double main = theorem_main(0, 2, Variant::I0).to_real<double>();
  EXPECT_LE(std::abs(r.value.mid - main) + r.value.rad, 0.0085 / 16);
  auto c = check_theorem(2, 2, Variant::I0, integral(Variant::I0, 2, 2).value);
  EXPECT_TRUE(c.pass);
  EXPECT_LE(c.deviation, 0.0014 / 16);
}

TEST(Integral, RejectsBadCells) {
  EXPECT_THROW(integral(Variant::I0, 3, 5), std::domain_error);
  EXPECT_THROW(integral(Variant::I0, 6, 4), std::domain_error);
}

TEST(Integral, KapteynCrossCheck) {
  // int_0^R J3^2 / r + (1 / pi) / R (leading tail) = 1/6.
  const double R = 12000;
  double low = nc7_composite([](double r) { return two_bessel(3, 3, 1, r); }, 0, R, 0.02);
  EXPECT_NEAR(low + 1 / (kPi * R), 1.0 / 6, 1e-6);
}

TEST(Integral, WeberSchafheitlinCrossCheck) {
  const std::vector<std::array<int, 3>> keys = {{0, 5, 3}, {1, 1, 1}, {2, 4, 3}, {3, 3, 2}, {1, 2, 2},
                                                {0, 4, 3}, {2, 5, 4}, {4, 4, 5}, {3, 6, 2}, {1, 4, 3}};
  const double R = 12000;
  int pi_valued = 0;
  for (auto [n, m, k] : keys) {
    ExactScalar ws = weber_schafheitlin(n, m, k);
    if (ws.sqrtpi_power() != 0) ++pi_valued;
    double low = nc7_composite([n = n, m = m, k = k](double r) { return two_bessel(n, m, k, r); }, 0, R, 0.02);
    double tail = std::cos((m - n) * kPi / 2) / (kPi * k * std::pow(R, k));
    EXPECT_NEAR(low + tail, ws.to_real<double>(), 1e-6) << n << " " << m << " " << k;
  }
  EXPECT_GE(pi_valued, 1);
}

TEST(Table, SampledCellsAgainstPrinted) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 0}, {2, 2}, {7, 6}, {14, 4}}) {
    auto [top, bottom] = printed_table().at({n, m});
    EXPECT_NEAR(entry(n, m).top, top, 0.02) << n << " " << m;
    EXPECT_NEAR(entry(n, m).bottom, bottom, 0.02) << n << " " << m;
  }
}

TEST(Table, ValuesNeverExceedPrintedUpperBounds) {
  ASSERT_EQ(full_table().size(), printed_table().size());
  for (const auto& e : full_table()) {
    auto [top, bottom] = printed_table().at({e.n, e.m});
    EXPECT_LE(e.top, top + 0.005) << e.n << " " << e.m;
    EXPECT_LE(e.bottom, bottom + 0.005) << e.n << " " << e.m;
    EXPECT_GE(e.top, 0.0);
    EXPECT_GE(e.bottom, 0.0);
  }
}

TEST(Table, LastRowSitsOnTheRadiusFloor) {
  // Deviation is far below the radius, so the entry is 0.9e-8 * 100 * 19^4 = 0.1173 plus a few 1e-4.
  const double floor = 0.9e-8 * 100 * std::pow(19.0, 4);
  EXPECT_GE(entry(19, 18).top, floor);
  EXPECT_LT(entry(19, 18).top, floor + 1e-3);
  EXPECT_LT(entry(19, 18).bottom, floor + 1e-3);
}

TEST(Table, EveryCellMeetsTheoremConstant) {
  for (const auto& e : full_table()) {
    if (theorem_constants(e.m, e.n, Variant::I0)) {
      EXPECT_TRUE(check_theorem(e.m, e.n, Variant::I0, e.i0).pass) << e.n << " " << e.m;
    }
    if (theorem_constants(e.m, e.n, Variant::I1)) {
      EXPECT_TRUE(check_theorem(e.m, e.n, Variant::I1, e.i1).pass) << e.n << " " << e.m;
    }
  }
}

TEST(Table, CsvIsDeterministicAcrossWorkers) {
  std::string one = table_csv(build_table(2, 4, 1));
  std::string many = table_csv(build_table(2, 4, 4));
  EXPECT_EQ(one, many);
  EXPECT_EQ(one.substr(0, 15), "n,m,top,bottom\n");
  EXPECT_NE(one.find("2,0,0.85,0.64\n"), std::string::npos);
}

TEST(Table, RejectsRowsOutsideRange) {
  EXPECT_THROW(build_table(1, 4), std::domain_error);
  EXPECT_THROW(build_table(2, 20), std::domain_error);
}

TEST(Bridge, RefinedEnclosuresMeetTheoremAndPrediction) {
  std::vector<Cell> cells;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{0, 20}, {2, 20}, {4, 20}, {6, 20}, {0, 24}})
    for (auto v : {Variant::I0, Variant::I1}) cells.push_back({v, m, n});
  auto res = integrate_cells(cells, QuadratureScheme::refined(), 2);
  for (const auto& r : res) {
    const auto& c = r.cell;
    EXPECT_TRUE(check_theorem(c.m, c.n, c.variant, r.value).pass) << c.m << " " << c.n;
    auto p = predict(c.m, c.n, c.variant);
    EXPECT_LE(std::abs(r.value.mid - p.main.to_real<double>()), p.radius + r.value.rad) << c.m << " " << c.n;
  }
}
