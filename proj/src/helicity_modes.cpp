#include "casimir/helicity_modes.hpp"

#include <cmath>

namespace casimir {

namespace {

constexpr cplx I{0.0, 1.0};

void check_rank(int m) {
  if (m < 1 || m > max_rank) throw std::invalid_argument("rank must be in 1..8");
}

}  // namespace

SpinTensor ModeSolution::evaluate(const Vec4& x) const {
  if (terms.empty()) throw std::invalid_argument("mode has no terms");
  SpinTensor out(rank, terms.front().coeff.var);
  const Vec3 xs{x[1], x[2], x[3]};
  for (const auto& t : terms) {
    const cplx phase = std::exp(I * (t.k.dot(xs) - omega * x[0]));
    out.c += phase * t.coeff.c;
  }
  return out;
}

Spinor2 helicity_spinor(const NullMomentum& km) {
  if (!(km.omega > 0.0)) throw std::invalid_argument("helicity_spinor needs omega > 0");
  const Vec3& k = km.k;
  Eigen::Vector2cd u;
  // Kernel of (omega I - k.s); the two branches avoid the degenerate pole.
  if (k.z() >= 0.0)
    u << cplx(km.omega + k.z()), cplx(k.x(), k.y());
  else
    u << cplx(k.x(), -k.y()), cplx(km.omega - k.z());
  u.normalize();
  const int imax = (std::abs(u[0]) >= std::abs(u[1])) ? 0 : 1;
  u /= u[imax] / std::abs(u[imax]);
  return {u, Variance::upper_unbarred};
}

ModeSolution free_plane_wave(int m, const NullMomentum& k) {
  check_rank(m);
  ModeSolution mode;
  mode.rank = m;
  mode.omega = k.omega;
  mode.terms.push_back({sym_power(helicity_spinor(k), m), k.k});
  return mode;
}

SpinTensor free_plane_wave(int m, const NullMomentum& k, const Vec4& x) {
  return free_plane_wave(m, k).evaluate(x);
}

ModeSolution standing_mode(int m, const NullMomentum& km, const PlateGeometry&) {
  check_rank(m);
  const Spinor2 u = helicity_spinor(km);
  // Reflected-wave spinor: positive helicity for the mirrored momentum, with
  // the phase locked so the origin plate maps the wave onto its charge
  // conjugate: u~ = s3 omega^T conj(u).
  Spinor2 ur;
  ur.c << -std::conj(u.c[1]), -std::conj(u.c[0]);
  ur.var = Variance::upper_unbarred;

  ModeSolution mode;
  mode.rank = m;
  mode.omega = km.omega;
  mode.terms.push_back({sym_power(u, m), km.k});
  mode.terms.push_back({sym_power(ur, m), Vec3{km.k.x(), km.k.y(), -km.k.z()}});
  return mode;
}

SpinTensor standing_mode(int m, const NullMomentum& k, const PlateGeometry& g, const Vec4& x) {
  return standing_mode(m, k, g).evaluate(x);
}

ModeSolution conjugate_partner(const ModeSolution& mode) {
  ModeSolution out;
  out.rank = mode.rank;
  out.omega = mode.omega;
  out.terms.reserve(mode.terms.size());
  for (const auto& t : mode.terms) out.terms.push_back({conj_lower(t.coeff), t.k});
  return out;
}

double eom_residual(const ModeSolution& mode) {
  double worst = 0.0;
  for (const auto& t : mode.terms) {
    // [k] = sigma^mu k_mu with k^0 = omega, contracted into the first index.
    const Mat2 kslash =
        pauli(0) * mode.omega - pauli(1) * t.k.x() - pauli(2) * t.k.y() - pauli(3) * t.k.z();
    const int m = mode.rank;
    for (int b = 0; b < 2; ++b)
      for (int j = 0; j < m; ++j)
        worst = std::max(worst, std::abs(kslash(b, 0) * t.coeff.c[j] + kslash(b, 1) * t.coeff.c[j + 1]));
  }
  return worst;
}

}  // namespace casimir
