#include "casimir/numerics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace casimir {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa, double b,
                   double fb, double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_rec(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
         simpson_rec(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = simpson(a, fa, b, fb, fm);
  return simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double LaurentFit::coeff(int power) const {
  for (std::size_t i = 0; i < powers.size(); ++i)
    if (powers[i] == power) return coeffs[i];
  throw std::invalid_argument("power not present in fit");
}

double LaurentFit::evaluate(double x) const {
  double y = 0.0;
  for (std::size_t i = 0; i < powers.size(); ++i) y += coeffs[i] * std::pow(x, powers[i]);
  return y;
}

LaurentFit laurent_fit(const std::vector<double>& xs, const std::vector<double>& ys,
                       const std::vector<int>& powers) {
  const auto n = xs.size();
  const auto p = powers.size();
  if (ys.size() != n) throw std::invalid_argument("xs/ys size mismatch");
  if (n < p) throw fit_error("underdetermined fit: fewer samples than basis terms", 0.0);
  for (double x : xs)
    if (!(x > 0.0)) throw std::invalid_argument("fit abscissae must be positive");

  const int pmin = *std::min_element(powers.begin(), powers.end());
  Eigen::MatrixXd A(n, p);
  Eigen::VectorXd b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = std::pow(xs[i], -pmin);
    for (std::size_t j = 0; j < p; ++j) A(i, j) = w * std::pow(xs[i], powers[j]);
    b(i) = w * ys[i];
  }

  Eigen::VectorXd scale(p);
  for (std::size_t j = 0; j < p; ++j) {
    scale(j) = A.col(j).norm();
    if (scale(j) == 0.0) scale(j) = 1.0;
    A.col(j) /= scale(j);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(p - 1);
  const double condition = (smin > 0.0) ? smax / smin : std::numeric_limits<double>::infinity();
  if (!std::isfinite(condition) || condition > 1e12)
    throw fit_error("ill-conditioned fit, condition number " + std::to_string(condition),
                    condition);

  const Eigen::VectorXd xsol = svd.solve(b);
  LaurentFit fit;
  fit.powers = powers;
  fit.coeffs.resize(p);
  for (std::size_t j = 0; j < p; ++j) fit.coeffs[j] = xsol(j) / scale(j);
  fit.condition = condition;
  const double bnorm = std::max(b.norm(), 1e-300);
  fit.rms_residual = (A * xsol - b).norm() / bnorm;
  return fit;
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("need 0 < lo < hi");
  if (n < 2) throw std::invalid_argument("need at least two grid points");
  std::vector<double> g(n);
  const double r = std::pow(hi / lo, 1.0 / (n - 1));
  double x = lo;
  for (int i = 0; i < n; ++i) {
    g[i] = x;
    x *= r;
  }
  g.back() = hi;
  return g;
}

}  // namespace casimir
