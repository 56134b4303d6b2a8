#include <besselsix/exactnum.hpp>

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include <cmath>

using namespace besselsix;

namespace {

HighReal gamma_oracle(int two_x) { return boost::math::tgamma(HighReal(two_x) / 2); }

}  // namespace

TEST(GammaHalf, SmallValues) {
  EXPECT_EQ(gamma_half(1), ExactScalar(Rational(1), 1));
  EXPECT_EQ(gamma_half(-7), ExactScalar(Rational(16, 105), 1));
  EXPECT_EQ(gamma_half(5), ExactScalar(Rational(3, 4), 1));
  EXPECT_EQ(gamma_half(2), ExactScalar(1));
  EXPECT_EQ(gamma_half(12), ExactScalar(120));
}

TEST(GammaHalf, RejectsPoles) {
  EXPECT_THROW(gamma_half(0), std::domain_error);
  EXPECT_THROW(gamma_half(-4), std::domain_error);
}

TEST(GammaHalf, FunctionalEquation) {
  for (int two_x = -41; two_x <= 61; ++two_x) {
    if (is_gamma_pole(two_x) || is_gamma_pole(two_x + 2)) continue;
    EXPECT_EQ(gamma_half(two_x + 2), ExactScalar(Rational(two_x, 2)) * gamma_half(two_x)) << two_x;
  }
}

TEST(GammaHalf, MatchesMultiprecisionGamma) {
  for (int two_x = -29; two_x <= 59; ++two_x) {
    if (is_gamma_pole(two_x)) continue;
    HighReal exact = gamma_half(two_x).to_real<HighReal>();
    HighReal ref = gamma_oracle(two_x);
    EXPECT_LT(abs(exact - ref) / abs(ref), HighReal(1e-40)) << two_x;
  }
}

TEST(GammaRatio, Examples) {
  EXPECT_EQ(gamma_ratio(6, 6), ExactScalar(1));
  EXPECT_EQ(gamma_ratio(2, -2), ExactScalar(0));
  EXPECT_EQ(gamma_ratio(7, 3), ExactScalar(Rational(15, 4)));
  EXPECT_THROW(gamma_ratio(-2, 4), std::domain_error);
  EXPECT_THROW(gamma_ratio(-2, -4), std::domain_error);
}

TEST(GammaRatio, AgreesWithQuotientOfGammas) {
  for (int a = -15; a <= 31; ++a) {
    for (int b = -15; b <= 31; ++b) {
      if (is_gamma_pole(a) || is_gamma_pole(b)) continue;
      EXPECT_EQ(gamma_ratio(a, b), gamma_half(a) / gamma_half(b)) << a << " " << b;
    }
  }
}

TEST(GammaRatio, MonotoneInShift) {
  // Gamma(x)/Gamma(y) <= Gamma(x+w)/Gamma(y+w) for x >= y > 0, w >= 0.
  for (int y = 1; y <= 20; ++y)
    for (int x = y; x <= 24; ++x)
      for (int w = 0; w <= 12; ++w) {
        double lhs = gamma_ratio(x, y).to_real();
        double rhs = gamma_ratio(x + w, y + w).to_real();
        if ((x - y) % 2 == 0) {
          EXPECT_LE(gamma_ratio(x, y).coeff(), gamma_ratio(x + w, y + w).coeff());
        } else {
          EXPECT_LE(lhs, rhs * (1 + 1e-15));
        }
      }
}

TEST(ExactScalar, Arithmetic) {
  ExactScalar a(Rational(1, 3), 1), b(Rational(2, 5), 1);
  EXPECT_EQ(a + b, ExactScalar(Rational(11, 15), 1));
  EXPECT_EQ(a * b, ExactScalar(Rational(2, 15), 2));
  EXPECT_EQ(a / b, ExactScalar(Rational(5, 6)));
  EXPECT_THROW(a + ExactScalar(1), std::logic_error);
  EXPECT_EQ(a + ExactScalar(0), a);
  EXPECT_EQ(-a, ExactScalar(Rational(-1, 3), 1));
}

TEST(ExactScalar, ToRealAccuracy) {
  for (int k = -6; k <= 6; ++k) {
    for (auto q : {Rational(1), Rational(-7, 3), Rational(22, 7), Rational(1, 1000003)}) {
      ExactScalar s(q, k);
      double got = s.to_real();
      HighReal ref = to_real<HighReal>(q) * pow(sqrt(boost::math::constants::pi<HighReal>()), k);
      double ulp = std::nextafter(std::abs(got), INFINITY) - std::abs(got);
      EXPECT_LE(static_cast<double>(abs(HighReal(got) - ref)), 2 * ulp);
    }
  }
}

TEST(ExactScalar, SerializationRoundTrip) {
  ExactScalar a(Rational(-16, 105), 1);
  EXPECT_EQ(a.str(), "-16/105*sqrtpi^1");
  EXPECT_EQ(ExactScalar::parse(a.str()), a);
  ExactScalar b(Rational(15, 256));
  EXPECT_EQ(b.str(), "15/256");
  EXPECT_EQ(ExactScalar::parse("15/256"), b);
  EXPECT_EQ(ExactScalar::parse("4/3*sqrtpi^-2"), ExactScalar(Rational(4, 3), -2));
  EXPECT_EQ(ExactScalar::parse("7"), ExactScalar(7));
  EXPECT_THROW(ExactScalar::parse("1/2*pi^3"), std::invalid_argument);
  EXPECT_THROW(ExactScalar::parse("abc"), std::invalid_argument);
}

TEST(Stirling, ContainsGammaOnGrid) {
  int checked = 0;
  for (int two_x = 1; two_x <= 50; ++two_x) {
    Interval iv = stirling_gamma_bounds(two_x / 2.0);
    HighReal exact = gamma_half(two_x).to_real<HighReal>();
    EXPECT_TRUE(iv.contains_exact(exact)) << two_x;
    ++checked;
  }
  EXPECT_EQ(checked, 50);
  EXPECT_TRUE(stirling_gamma_bounds(1.0).contains(1.0));
  EXPECT_TRUE(stirling_gamma_bounds(20.0).contains_exact(HighReal(121645100408832000.0)));
  EXPECT_THROW(stirling_gamma_bounds(0.0), std::domain_error);
}

TEST(Stirling, LogConvexityConsequence) {
  // sqrt(x - 1/2) <= Gamma(x + 1/2)/Gamma(x) <= sqrt(x) for x >= 1/2.
  for (double x = 0.5; x <= 60.0; x += 0.25) {
    Interval num = stirling_gamma_bounds(x + 0.5);
    Interval den = stirling_gamma_bounds(x);
    EXPECT_LE(std::sqrt(x - 0.5), num.hi / den.lo) << x;
    EXPECT_LE(num.lo / den.hi, std::sqrt(x)) << x;
  }
  for (int two_x = 1; two_x <= 120; ++two_x) {
    double ratio = gamma_ratio(two_x + 1, two_x).to_real();
    double x = two_x / 2.0;
    EXPECT_LE(std::sqrt(x - 0.5), ratio * (1 + 1e-15)) << two_x;
    EXPECT_LE(ratio, std::sqrt(x) * (1 + 1e-15)) << two_x;
  }
}

TEST(ACoeff, PrintedValues) {
  EXPECT_EQ(a_coeff(0, 7), ExactScalar(1));
  EXPECT_EQ(a_coeff(1, 0), ExactScalar(Rational(-1, 8)));
  EXPECT_EQ(a_coeff(3, 0), ExactScalar(Rational(-75, 1024)));
  EXPECT_EQ(a_coeff(3, 1), ExactScalar(Rational(105, 1024)));
  const Rational n0[] = {Rational(1), Rational(-1, 8), Rational(9, 128), Rational(-75, 1024),
                         Rational(3675, 32768), Rational(-59535, 262144), Rational(2401245, 4194304),
                         Rational(-57972915, 33554432)};
  const Rational n1[] = {Rational(1), Rational(3, 8), Rational(-15, 128), Rational(105, 1024),
                         Rational(-4725, 32768), Rational(72765, 262144), Rational(-2837835, 4194304),
                         Rational(66891825, 33554432)};
  for (int j = 0; j < 8; ++j) {
    EXPECT_EQ(a_coeff(j, 0).coeff(), n0[j]) << j;
    EXPECT_EQ(a_coeff(j, 1).coeff(), n1[j]) << j;
  }
}

TEST(ACoeff, RationalAndRecurrence) {
  for (int n = 0; n <= 40; ++n) {
    for (int j = 0; j <= n + 4; ++j) {
      ExactScalar a = a_coeff(j, n);
      EXPECT_EQ(a.sqrtpi_power(), 0);
      // a_{j+1}/a_j = (4n^2 - (2j+1)^2) / (8(j+1))
      Rational expect = a.coeff() * Rational(4 * n * n - (2 * j + 1) * (2 * j + 1), 8 * (j + 1));
      EXPECT_EQ(a_coeff(j + 1, n).coeff(), expect);
    }
  }
}

TEST(GaussianBinomial, Examples) {
  EXPECT_NEAR(gaussian_binomial_bound(1, 0), std::exp(1.0 / 24) * 4 / (2 * std::sqrt(M_PI)), 1e-15);
  EXPECT_NEAR(gaussian_binomial_bound(1, 0), 1.1766, 5e-4);
  EXPECT_GE(gaussian_binomial_bound(10, 3), 50388.0);
  double prev = INFINITY;
  for (double d = 0; d < 10; d += 0.5) {
    double v = gaussian_binomial_bound(10, d);
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_THROW(gaussian_binomial_bound(0.5, 0), std::domain_error);
  EXPECT_THROW(gaussian_binomial_bound(3, 3), std::domain_error);
}

TEST(GaussianBinomial, DominatesBinomialsOnGrid) {
  for (int two_x = 2; two_x <= 80; ++two_x) {
    for (int two_d = two_x % 2; two_d < two_x; two_d += 2) {
      // Gamma(2x) / (Gamma(x-d) Gamma(x+d)); 2x integer, x +- d integers here
      int a = (two_x - two_d) / 2, b = (two_x + two_d) / 2;
      if (a < 1) continue;
      Rational exact(factorial(static_cast<unsigned>(two_x - 1)),
                     factorial(static_cast<unsigned>(a - 1)) * factorial(static_cast<unsigned>(b - 1)));
      EXPECT_LE(to_real<double>(exact), gaussian_binomial_bound(two_x / 2.0, two_d / 2.0) * (1 + 1e-14));
    }
  }
}

TEST(AM4Bound, DominatesCoefficients) {
  EXPECT_NEAR(a_m4_bound(1), 105.0 / 16 * std::sqrt(2 / M_PI) * 2 * std::exp(-1.0), 1e-12);
  EXPECT_NEAR(a_m4_bound(1), 3.855, 5e-3);
  EXPECT_EQ(a_coeff(5, 1).coeff(), Rational(72765, 262144));
  for (int m = 1; m <= 40; ++m) {
    double exact = std::abs(a_coeff(m + 4, m).to_real());
    EXPECT_LE(exact, a_m4_bound(m)) << m;
  }
  EXPECT_THROW(a_m4_bound(0), std::domain_error);
}
