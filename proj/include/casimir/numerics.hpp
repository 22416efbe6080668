#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace casimir {

//! Adaptive Simpson quadrature on [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 40);

// Result of a least-squares fit of samples (x_i, y_i) to a sum of fixed
// powers sum_j c_j x^{p_j}.
struct LaurentFit {
  std::vector<int> powers;
  std::vector<double> coeffs;
  double rms_residual = 0.0;  // weighted, relative to the data norm
  double condition = 0.0;     // of the column-scaled design matrix

  double coeff(int power) const;
  double evaluate(double x) const;
};

class fit_error : public std::runtime_error {
 public:
  fit_error(const std::string& what, double condition_number)
      : std::runtime_error(what), condition(condition_number) {}
  double condition;
};

//! Weighted least squares with weights x^{-min(powers)}, which equalises the
//! relative error of the most divergent term across the grid. Throws
//! fit_error when underdetermined or numerically ill conditioned.
LaurentFit laurent_fit(const std::vector<double>& xs, const std::vector<double>& ys,
                       const std::vector<int>& powers);

std::vector<double> geometric_grid(double lo, double hi, int n);

}  // namespace casimir
