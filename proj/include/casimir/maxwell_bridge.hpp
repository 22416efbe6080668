#pragma once

#include "casimir/boundary.hpp"

namespace casimir {

struct EMField {
  Vec3 E = Vec3::Zero();
  Vec3 B = Vec3::Zero();
};

//! Rank-2 spin-tensor of the Riemann-Silberstein vector F = E + iB:
//! psi^00 = -F1 + iF2, psi^01 = F3, psi^11 = F1 + iF2.
SpinTensor spin_from_F(const CVec3& F);

//! Exact inverse of spin_from_F.
CVec3 F_from_spin(const SpinTensor& t);

//! ||omega F0 - i k x F0|| for the plane wave F(x) = F0 e^{i(k.x - omega t)};
//! zero iff the mode solves i dF/dt = curl F.
double maxwell_residual(const CVec3& F0, const NullMomentum& k);

//! Energy-current column T^{mu 0} = ((E^2 + B^2)/2, E x B).
Vec4 em_stress(const Vec3& E, const Vec3& B);

//! || spin_current(spin_from_F(F)) - em_stress(Re F, Im F) ||; vanishes for
//! every field configuration.
double stress_equivalence(const CVec3& F);

//! Perfect-conductor condition: |n.B| + ||n x E||.
double em_bc_residual(const Vec3& E, const Vec3& B, const Vec3& normal);

//! Real electromagnetic field carried by a rank-2 mode: the positive-helicity
//! content comes from the mode itself, the negative-helicity content from its
//! charge-conjugate partner, combined into F = E + iB of a real solution.
EMField em_field_of_mode(const ModeSolution& mode, const Vec4& x);

}  // namespace casimir
