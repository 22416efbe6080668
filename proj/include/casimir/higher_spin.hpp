#pragma once

#include <array>
#include <vector>

#include "casimir/helicity_modes.hpp"

namespace casimir {

using Mat4 = Eigen::Matrix4cd;
using BiSpinor = Eigen::Vector4cd;
using Mat3c = Eigen::Matrix3cd;

//! Dirac matrices in the Dirac basis; {gamma^mu, gamma^nu} = 2 g^{mu nu}.
const Mat4& gamma(int mu);

//! gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3.
const Mat4& gamma5();

//! Totally antisymmetric symbol with eps^{0123} = 1.
double levi_civita(int mu, int nu, int rho, int sig);

//! Max-norm of eps^{mu nu rho sig} gamma5 gamma_rho
//! - i (g^{mu nu} gamma^sig - g^{mu sig} gamma^nu - g^{nu sig} gamma^mu
//!      + gamma^mu gamma^sig gamma^nu), summed over rho.
double epsilon_identity_residual(int mu, int nu, int sig);

// Helicity +-3/2 massless mode: four bispinors u_mu (lower spacetime index)
// obeying gamma.u = 0, k.u = 0, u_0 = 0 in the generalised Coulomb gauge,
// normalised so ubar^mu gamma^nu u_mu = -2 k^nu.
struct RaritaMode {
  std::array<BiSpinor, 4> u{};  // u_mu
  Vec3 k = Vec3::Zero();
  double omega = 0.0;
  int helicity_x2 = 3;  // +-3
};

RaritaMode rarita_mode(const NullMomentum& k, int helicity_x2);

//! Antiparticle partner v_mu = i gamma^2 conj(u_mu).
std::array<BiSpinor, 4> rarita_v(const RaritaMode& m);

//! Max over the three constraint residuals (gamma-trace, divergence, time component).
double rarita_constraint_residual(const RaritaMode& m);

//! ubar^mu gamma^nu u_mu for two modes (used for the orthonormality checks).
cplx rarita_bilinear(const std::array<BiSpinor, 4>& a, const std::array<BiSpinor, 4>& b, int nu);

// Transverse traceless polarisation tensor e_ij(k, lambda), lambda = +-2,
// built as sqrt(2) eps x eps on a frame attached to the canonical
// representative of the axis {k, -k}, so e(-k) = e(k) exactly.
struct PolarizationTensor {
  Mat3c e = Mat3c::Zero();
  Vec3 khat = Vec3::UnitZ();
  int helicity = 2;
};

PolarizationTensor polarization_tensor(const Vec3& k_hat, int lambda);

// Scalar-vector-tensor split of a symmetric 3x3 tensor at fixed direction:
// f = (1/3) tr(f) delta + (kk - delta/3) s + k v + v k + tt.
struct SvtParts {
  Mat3c trace_part = Mat3c::Zero();
  Mat3c scalar_part = Mat3c::Zero();
  Mat3c vector_part = Mat3c::Zero();
  Mat3c tt_part = Mat3c::Zero();

  Mat3c sum() const { return trace_part + scalar_part + vector_part + tt_part; }
};

SvtParts svt_decompose(const Mat3c& f, const Vec3& k_hat);

//! Helicity-sum kernel (1/2) sum_lambda ebar_kl (e_ij f_ij); equals the
//! transverse traceless part of f and is idempotent.
Mat3c tt_project(const Mat3c& f, const Vec3& k_hat);

// Classical graviton field on a periodic box: a set of discrete momenta with
// helicity amplitudes. h_ij is real, symmetric, transverse and traceless by
// construction; raw tensors are validated against those constraints.
class GravitonModeSet {
 public:
  explicit GravitonModeSet(double box_volume);

  void add(const Vec3& k, int lambda, cplx amplitude);
  void add_raw(const Vec3& k, const Mat3c& tensor, cplx amplitude, double tol = 1e-10);

  double volume() const { return volume_; }
  std::size_t size() const { return entries_.size(); }

  Eigen::Matrix3d h(const Vec3& x, double t) const;
  Eigen::Matrix3d gamma0(const Vec3& x, double t) const;  // -1/2 dh/dt

  //! Sum over modes of omega |a|^2 per helicity (with cross terms included
  //! and cancelling exactly on the box).
  double energy(double t = 0.0) const;

 private:
  struct Entry {
    Vec3 k;
    double omega;
    Mat3c e;
    cplx amp;
  };
  double volume_;
  std::vector<Entry> entries_;

  friend double spin2_mode_energy(const GravitonModeSet&, double);
};

//! Total field energy: integral of (Gamma^0_ij)^2 + (1/4)(d_k h_ij)^2 over
//! the box, evaluated through the discrete Parseval identity.
double spin2_mode_energy(const GravitonModeSet& modes, double t = 0.0);

// Rank-4 spacetime tensor, totally symmetric.
struct Rank4Tensor {
  std::array<double, 256> v{};
  double& operator()(int a, int b, int c, int d) { return v[((a * 4 + b) * 4 + c) * 4 + d]; }
  double operator()(int a, int b, int c, int d) const { return v[((a * 4 + b) * 4 + c) * 4 + d]; }
};

//! Gravitational energy-momentum analogue built from the rank-4 spin-tensor:
//! T^{mu nu rho sig} = (1/2)^4 s^mu s^nu s^rho s^sig psi psi-bar.
//! T^{mu 0 0 0} equals spin_current of the same tensor.
Rank4Tensor bel_robinson(const SpinTensor& t);

}  // namespace casimir
