#pragma once

#include <cstdint>

#include "casimir/helicity_modes.hpp"
#include "casimir/statistics.hpp"

namespace casimir {

// Requesting a fermionic mode with even n. Periodic boundary conditions
// cannot be applied to a fermionic field between two mirrors: the reflection
// condition picks up opposite signs at the two plates, so the admissible
// normal momenta are the odd half-multiples of pi/d only.
class parity_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SpectrumEntry {
  int n = 0;
  double k3 = 0.0;
  Statistics stat = Statistics::fermionic;
};

//! Reflection map at a plate: contract every index with +sqrt(2) sigma^3 at
//! x3 = 0 and -sqrt(2) sigma^3 at x3 = d (the sign of the outward normal),
//! producing the barred-lowered partner to compare against conj_lower.
SpinTensor bc_map(PlateSide side, const SpinTensor& t);

//! Max-norm of bc_map(mode(x)) minus the charge-conjugate partner mode at x.
//! x must lie on the selected plate.
double bc_residual(PlateSide side, const ModeSolution& mode, const Vec4& x_on_plate,
                   const PlateGeometry& g);

//! Same residual maximised over pseudo-random on-plate points (fixed seed).
double bc_residual_sampled(PlateSide side, const ModeSolution& mode, const PlateGeometry& g,
                           int n_points = 5, std::uint64_t seed = 0x5eedULL);

//! cos(k3 d) for odd rank, sin(k3 d) for even rank; roots are the admissible k3.
double quantization_value(int m, double d, double k3);

//! Admissible normal momentum: n pi / 2d (odd m, odd n) or n pi / d (even m, n >= 0).
SpectrumEntry allowed_k3(int m, double d, int n);

//! Local rank-m current j^mu = (1/sqrt2)^m sigma^mu sigma^0 ... sigma^0 psi psi-bar,
//! normalised so the rank-2 current equals the electromagnetic T^{mu 0}.
//! j^0 >= 0 always.
Vec4 spin_current(const SpinTensor& t);

//! |n_mu j^mu| at sampled on-plate points; vanishes whenever the mode
//! satisfies the reflection condition at that plate.
double normal_current_check(PlateSide side, const ModeSolution& mode, const PlateGeometry& g,
                            int n_points = 5, std::uint64_t seed = 0x5eedULL);

//! |d_mu j^mu| for a single plane-wave mode, evaluated algebraically from the
//! bilinear; the two derivative pieces cancel exactly.
double continuity_residual(const ModeSolution& mode);

}  // namespace casimir
