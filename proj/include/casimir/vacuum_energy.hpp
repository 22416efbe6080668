#pragma once

#include "casimir/numerics.hpp"
#include "casimir/statistics.hpp"

namespace casimir {

//! Resummed regulator bracket before the second alpha-derivative:
//! fermionic 1/(2 alpha sinh(alpha pi / 2d)), bosonic coth(alpha pi / 2d)/(2 alpha)
//! (the n = 0 mode enters the primed sum with weight 1/2). The small-alpha
//! expansion of the fermionic bracket is d/(pi a^2) - pi/24d + 7 pi^3 a^2/5760 d^3 + ...
//! Note the leading divergent coefficient is d/pi; some references print pi d.
//! The discrepancy is confined to the discarded separation-linear divergence.
double bracket(Statistics stat, double d, double alpha);

//! Cutoff-regularised vacuum energy per unit plate area at regulator alpha:
//! -(1/pi) d2/da2 bracket (fermionic), +(1/2 pi) d2/da2 bracket (bosonic),
//! with the second derivative taken analytically. Diverges like +-6d/(pi^2 a^4).
double regulated_energy(Statistics stat, double d, double alpha);

//! Finite part of the regulated energy after dropping the separation-linear
//! divergence: -7 pi^2/2880 d^3 (fermionic), -pi^2/720 d^3 (bosonic).
double casimir_energy(Statistics stat, double d);

//! Casimir force per unit area, F = -dE/dd: -7 pi^2/960 d^4 or -pi^2/240 d^4.
double casimir_force(Statistics stat, double d);

//! Spin-labelled entry point; every spin of the same statistics gives the
//! identical value.
double casimir_force_for_spin(double spin, double d);

//! Conjectured supergravity pair: gravitino force plus graviton force,
//! -11 pi^2 / 960 d^4.
double supergravity_force(double d);

//! Numeric oracle for casimir_energy: weighted Laurent fit of
//! regulated_energy over an alpha grid to powers {-4, 0, 2, 4, 6};
//! coeff(0) is the finite energy, coeff(-4) the divergence (linear in d).
LaurentFit extrapolated_energy(Statistics stat, double d, const std::vector<double>& alpha_grid);

//! Laurent fit of the pre-derivative bracket to powers {-2, 0, 2, 4, 6};
//! recovers the expansion coefficients such as -pi/24d and 7 pi^3/5760 d^3.
LaurentFit bracket_fit(Statistics stat, double d, const std::vector<double>& alpha_grid);

//! Default fit grid: 12 geometric points in [0.01 d, 0.1 d].
std::vector<double> default_alpha_grid(double d);

//! Quadrature check of the transverse-momentum reduction
//! 2 int_{|q| < L} sqrt(q^2 + k3^2) d^2q / (2 pi)^2 = (1/pi) int_{k3}^{sqrt(L^2+k3^2)} x^2 dx;
//! returns |lhs - rhs| with both sides integrated numerically.
double transverse_reduction_check(double k3, double cutoff);

//! The two sides of the same reduction, for diagnostics.
std::pair<double, double> transverse_reduction_sides(double k3, double cutoff);

}  // namespace casimir
