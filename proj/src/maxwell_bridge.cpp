#include "casimir/maxwell_bridge.hpp"

#include <cmath>

namespace casimir {

namespace {

constexpr cplx I{0.0, 1.0};

CVec3 extract_F(const Eigen::VectorXcd& c) {
  CVec3 F;
  F[0] = 0.5 * (c[2] - c[0]);
  F[1] = -0.5 * I * (c[0] + c[2]);
  F[2] = c[1];
  return F;
}

// Plain bilinear cross product; Eigen's cross() conjugates complex operands.
CVec3 cross_bilinear(const CVec3& a, const CVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

SpinTensor spin_from_F(const CVec3& F) {
  SpinTensor t(2, Variance::upper_unbarred);
  t.c[0] = -F[0] + I * F[1];
  t.c[1] = F[2];
  t.c[2] = F[0] + I * F[1];
  return t;
}

CVec3 F_from_spin(const SpinTensor& t) {
  if (t.rank != 2 || t.var != Variance::upper_unbarred)
    throw std::invalid_argument("F_from_spin expects a rank-2 upper unbarred tensor");
  return extract_F(t.c);
}

double maxwell_residual(const CVec3& F0, const NullMomentum& km) {
  const CVec3 kxF = cross_bilinear(km.k.cast<cplx>(), F0);
  return (km.omega * F0 - I * kxF).norm();
}

Vec4 em_stress(const Vec3& E, const Vec3& B) {
  Vec4 j;
  j[0] = 0.5 * (E.squaredNorm() + B.squaredNorm());
  const Vec3 s = E.cross(B);
  j[1] = s[0];
  j[2] = s[1];
  j[3] = s[2];
  return j;
}

double stress_equivalence(const CVec3& F) {
  const Vec4 lhs = spin_current(spin_from_F(F));
  const Vec4 rhs = em_stress(F.real(), F.imag());
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

double em_bc_residual(const Vec3& E, const Vec3& B, const Vec3& normal) {
  return std::abs(normal.dot(B)) + normal.cross(E).norm();
}

EMField em_field_of_mode(const ModeSolution& mode, const Vec4& x) {
  if (mode.rank != 2) throw std::invalid_argument("em_field_of_mode expects rank 2");
  // Positive-helicity content.
  const CVec3 Fplus = F_from_spin(mode.evaluate(x));
  // Negative-helicity content lives in the charge-conjugate partner; raise its
  // indices, conjugate into the unbarred pattern, and read off G = E - iB.
  const SpinTensor w = conjugate_partner(mode).evaluate(x);
  const SpinTensor raised = apply_per_index(w, symplectic(), Variance::upper_barred);
  const CVec3 G = extract_F(raised.c.conjugate()).conjugate();
  const CVec3 Ffull = Fplus + G.conjugate();
  return {Ffull.real(), Ffull.imag()};
}

}  // namespace casimir
