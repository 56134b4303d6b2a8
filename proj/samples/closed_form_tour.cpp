// Walks from exact two-Bessel integrals to a certified six-Bessel prediction.

#include <besselsix/certify.hpp>
#include <besselsix/closed_form.hpp>
#include <besselsix/quadrature.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <utility>

using namespace besselsix;

int main() {
  std::printf("Kapteyn: int J_n^2 / r dr\n");
  for (int n : {1, 2, 5, 10}) std::printf("  n = %-2d  %s\n", n, kapteyn(n, n).str().c_str());

  std::printf("\nWeber-Schafheitlin: int J_n J_m r^-k dr\n");
  for (auto [n, m, k] : {std::array{1, 1, 2}, {2, 4, 3}, {0, 5, 3}, {20, 20, 5}}) {
    ExactScalar v = weber_schafheitlin(n, m, k);
    std::printf("  (%d, %d, %d)  %s = %.17g\n", n, m, k, v.str().c_str(), v.to_real());
  }

  std::printf("\nCertified predictions, 4/pi^2 * main +- radius\n");
  for (auto [m, n] : {std::pair{0, 20}, {2, 25}, {4, 30}, {8, 40}})
    for (auto v : {Variant::I0, Variant::I1}) {
      Prediction p = predict(m, n, v);
      std::printf("  %s m = %-2d n = %-2d  %.12e +- %.3e  (theorem allows %.3e)\n", variant_name(v), m, n, p.main.to_real<double>(),
                  p.radius, *theorem_constants(m, n, v) / std::pow(n, 4.0));
    }

  std::printf("\nQuadrature at the crossover, refined scheme\n");
  IntegralResult r = integral(Variant::I0, 0, 20, QuadratureScheme::refined(), default_workers());
  std::printf("  I0 m = 0 n = 20  %.12e +- %.3e\n", r.value.mid, r.value.rad);
  return 0;
}
