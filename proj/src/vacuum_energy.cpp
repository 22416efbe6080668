#include "casimir/vacuum_energy.hpp"

#include <cmath>

namespace casimir {

namespace {

void check_positive(double d, double alpha) {
  if (!(d > 0.0)) throw std::invalid_argument("separation must be positive");
  if (!(alpha > 0.0)) throw std::invalid_argument("regulator alpha must be positive");
}

}  // namespace

double bracket(Statistics stat, double d, double alpha) {
  check_positive(d, alpha);
  const double y = alpha * M_PI / (2.0 * d);
  if (stat == Statistics::fermionic) return 1.0 / (2.0 * alpha * std::sinh(y));
  return std::cosh(y) / std::sinh(y) / (2.0 * alpha);
}

double regulated_energy(Statistics stat, double d, double alpha) {
  check_positive(d, alpha);
  const double c = M_PI / (2.0 * d);
  const double y = c * alpha;
  const double a1 = 1.0 / alpha, a2 = a1 * a1, a3 = a2 * a1;
  if (stat == Statistics::fermionic) {
    const double csch = 1.0 / std::sinh(y);
    const double coth = std::cosh(y) * csch;
    const double second =
        a3 * csch + c * a2 * csch * coth + 0.5 * c * c * a1 * csch * (coth * coth + csch * csch);
    return -second / M_PI;
  }
  const double csch = 1.0 / std::sinh(y);
  const double coth = std::cosh(y) * csch;
  const double second = a3 * coth + c * a2 * csch * csch + c * c * a1 * csch * csch * coth;
  return second / (2.0 * M_PI);
}

double casimir_energy(Statistics stat, double d) {
  if (!(d > 0.0)) throw std::invalid_argument("separation must be positive");
  const double d3 = d * d * d;
  if (stat == Statistics::fermionic) return -7.0 * M_PI * M_PI / (2880.0 * d3);
  return -M_PI * M_PI / (720.0 * d3);
}

double casimir_force(Statistics stat, double d) {
  if (!(d > 0.0)) throw std::invalid_argument("separation must be positive");
  const double d4 = d * d * d * d;
  if (stat == Statistics::fermionic) return -7.0 * M_PI * M_PI / (960.0 * d4);
  return -M_PI * M_PI / (240.0 * d4);
}

double casimir_force_for_spin(double spin, double d) {
  return casimir_force(statistics_for_spin(spin), d);
}

double supergravity_force(double d) {
  return casimir_force_for_spin(1.5, d) + casimir_force_for_spin(2.0, d);
}

LaurentFit extrapolated_energy(Statistics stat, double d, const std::vector<double>& alpha_grid) {
  std::vector<double> ys(alpha_grid.size());
  for (std::size_t i = 0; i < alpha_grid.size(); ++i)
    ys[i] = regulated_energy(stat, d, alpha_grid[i]);
  return laurent_fit(alpha_grid, ys, {-4, 0, 2, 4, 6});
}

LaurentFit bracket_fit(Statistics stat, double d, const std::vector<double>& alpha_grid) {
  std::vector<double> ys(alpha_grid.size());
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) ys[i] = bracket(stat, d, alpha_grid[i]);
  return laurent_fit(alpha_grid, ys, {-2, 0, 2, 4, 6});
}

std::vector<double> default_alpha_grid(double d) {
  if (!(d > 0.0)) throw std::invalid_argument("separation must be positive");
  return geometric_grid(1e-2 * d, 1e-1 * d, 12);
}

std::pair<double, double> transverse_reduction_sides(double k3, double cutoff) {
  if (!(k3 > 0.0)) throw std::invalid_argument("k3 must be positive");
  if (!(cutoff >= 0.0)) throw std::invalid_argument("cutoff must be nonnegative");
  // lhs: 2D polar quadrature of 2 sqrt(q^2 + k3^2) / (2 pi)^2 over the disc,
  // trapezoid in the angle times adaptive Simpson in the radius.
  const auto radial = [k3](double rho) { return std::sqrt(rho * rho + k3 * k3) * rho; };
  const int nphi = 64;
  double lhs = 0.0;
  for (int i = 0; i < nphi; ++i)
    lhs += (2.0 * M_PI / nphi) *
           adaptive_simpson(radial, 0.0, cutoff, 1e-12 * std::max(1.0, cutoff));
  lhs *= 2.0 / (4.0 * M_PI * M_PI);
  // rhs: (1/pi) int x^2 dx between the mapped limits
  const double hi = std::sqrt(cutoff * cutoff + k3 * k3);
  const auto square = [](double x) { return x * x; };
  const double rhs = adaptive_simpson(square, k3, hi, 1e-12 * std::max(1.0, hi)) / M_PI;
  return {lhs, rhs};
}

double transverse_reduction_check(double k3, double cutoff) {
  const auto [lhs, rhs] = transverse_reduction_sides(k3, cutoff);
  return std::abs(lhs - rhs);
}

}  // namespace casimir
