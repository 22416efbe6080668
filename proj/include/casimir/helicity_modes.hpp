#pragma once

#include <vector>

#include "casimir/spinor_algebra.hpp"

namespace casimir {

using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Vec4 = Eigen::Vector4d;  // spacetime point (t, x, y, z)

// Momentum of a massless mode: omega = |k|, with the plate-adapted split
// into k_perp = (k1, k2, 0) and k3.
struct NullMomentum {
  Vec3 k = Vec3::Zero();
  double omega = 0.0;

  NullMomentum() = default;
  explicit NullMomentum(const Vec3& kk) : k(kk), omega(kk.norm()) {}

  Vec3 k_perp() const { return {k.x(), k.y(), 0.0}; }
  double k3() const { return k.z(); }
  FourVector four_momentum() const { return {cplx(omega), cplx(k.x()), cplx(k.y()), cplx(k.z())}; }
};

enum class PlateSide { origin, distant };  // x3 = 0 and x3 = d

// Two parallel perfect mirrors orthogonal to the x3 axis.
struct PlateGeometry {
  double separation = 1.0;

  explicit PlateGeometry(double d) : separation(d) {
    if (!(d > 0.0)) throw std::invalid_argument("plate separation must be positive");
  }

  double plate_coordinate(PlateSide s) const { return s == PlateSide::origin ? 0.0 : separation; }

  //! Outward unit normal n^mu: (0,0,0,-1) at the origin plate, (0,0,0,+1) at the distant one.
  FourVector outward_normal(PlateSide s) const {
    const double n3 = (s == PlateSide::origin) ? -1.0 : 1.0;
    return {cplx(0.0), cplx(0.0), cplx(0.0), cplx(n3)};
  }
};

// One plane-wave term of a mode: coefficient tensor times e^{i(k.x - omega t)}.
struct ModeTerm {
  SpinTensor coeff;
  Vec3 k = Vec3::Zero();
};

// Finite superposition of plane waves sharing one frequency. standing_mode
// produces the two-term incident + reflected solution between the plates.
struct ModeSolution {
  int rank = 1;
  double omega = 0.0;
  std::vector<ModeTerm> terms;

  SpinTensor evaluate(const Vec4& x) const;
};

inline constexpr int max_rank = 8;  // covers spin 4

//! Right-helicity momentum wavefunction u(k): the kernel of sigma^mu k_mu,
//! unit norm, largest-modulus component taken real positive.
Spinor2 helicity_spinor(const NullMomentum& k);

ModeSolution free_plane_wave(int m, const NullMomentum& k);
SpinTensor free_plane_wave(int m, const NullMomentum& k, const Vec4& x);

//! Standing solution between the plates: the incident wave plus the mirror
//! image carrying the sigma^3-dressed charge-conjugate wavefunction at
//! momentum (k_perp, -k3). Satisfies the reflection boundary condition at
//! x3 = 0 identically for every k.
ModeSolution standing_mode(int m, const NullMomentum& k, const PlateGeometry& g);
SpinTensor standing_mode(int m, const NullMomentum& k, const PlateGeometry& g, const Vec4& x);

//! Positive-frequency part of the charge-conjugate field: every coefficient
//! tensor conjugate-lowered, plane-wave factors unchanged.
ModeSolution conjugate_partner(const ModeSolution& mode);

//! Max over terms of the norm of sigma^mu k_mu contracted into the first
//! index of the coefficient tensor; zero iff the equation of motion holds.
double eom_residual(const ModeSolution& mode);

}  // namespace casimir
