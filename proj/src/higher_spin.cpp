#include "casimir/higher_spin.hpp"

#include <bit>
#include <cmath>

namespace casimir {

namespace {

constexpr cplx I{0.0, 1.0};

std::array<Mat4, 4> make_gamma() {
  std::array<Mat4, 4> g;
  for (auto& m : g) m = Mat4::Zero();
  g[0].block<2, 2>(0, 0) = Mat2::Identity();
  g[0].block<2, 2>(2, 2) = -Mat2::Identity();
  for (int i = 1; i < 4; ++i) {
    g[i].block<2, 2>(0, 2) = pauli_unit(i);
    g[i].block<2, 2>(2, 0) = -pauli_unit(i);
  }
  return g;
}

void check_unit(const Vec3& k_hat) {
  if (std::abs(k_hat.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("direction must be a unit vector");
}

//! Deterministic right-handed orthonormal triad (e1, e2, k_hat).
std::pair<Vec3, Vec3> frame(const Vec3& k_hat) {
  const Vec3 ref = (std::abs(k_hat.z()) < 0.9) ? Vec3::UnitZ() : Vec3::UnitX();
  const Vec3 e1 = (ref - ref.dot(k_hat) * k_hat).normalized();
  const Vec3 e2 = k_hat.cross(e1);
  return {e1, e2};
}

Vec3 canonical_axis(const Vec3& k_hat) {
  if (k_hat.z() != 0.0) return k_hat.z() > 0 ? k_hat : Vec3(-k_hat);
  if (k_hat.y() != 0.0) return k_hat.y() > 0 ? k_hat : Vec3(-k_hat);
  return k_hat.x() > 0 ? k_hat : Vec3(-k_hat);
}

CVec3 circular(const Vec3& e1, const Vec3& e2, int sign) {
  return (e1.cast<cplx>() + cplx(0, sign) * e2.cast<cplx>()) / std::sqrt(2.0);
}

//! Massless Dirac helicity spinor in the Dirac basis, ubar gamma^nu u = 2 k^nu.
BiSpinor dirac_spinor(const NullMomentum& km, int sign) {
  Eigen::Vector2cd chi = helicity_spinor(km).c;
  if (sign < 0) {
    // Charge conjugation flips the helicity of the two-component kernel.
    Eigen::Vector2cd flipped;
    flipped << -std::conj(chi[1]), std::conj(chi[0]);
    chi = flipped;
  }
  BiSpinor u;
  const double root = std::sqrt(km.omega);
  u.head<2>() = root * chi;
  u.tail<2>() = double(sign) * root * chi;
  return u;
}

cplx tensor_dot(const Mat3c& a, const Mat3c& b) { return (a.array() * b.array()).sum(); }

}  // namespace

const Mat4& gamma(int mu) {
  static const std::array<Mat4, 4> g = make_gamma();
  if (mu < 0 || mu > 3) throw std::invalid_argument("spacetime index out of range 0..3");
  return g[mu];
}

const Mat4& gamma5() {
  static const Mat4 g5 = (I * gamma(0) * gamma(1) * gamma(2) * gamma(3)).eval();
  return g5;
}

double levi_civita(int mu, int nu, int rho, int sig) {
  const int p[4] = {mu, nu, rho, sig};
  double sign = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0.0;
      if (p[i] > p[j]) sign = -sign;
    }
  return sign;
}

double epsilon_identity_residual(int mu, int nu, int sig) {
  Mat4 lhs = Mat4::Zero();
  for (int rho = 0; rho < 4; ++rho)
    lhs += levi_civita(mu, nu, rho, sig) * gamma5() * (metric(rho, rho) * gamma(rho));
  const Mat4 rhs = I * (metric(mu, nu) * gamma(sig) - metric(mu, sig) * gamma(nu) -
                        metric(nu, sig) * gamma(mu) + gamma(mu) * gamma(sig) * gamma(nu));
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

RaritaMode rarita_mode(const NullMomentum& km, int helicity_x2) {
  if (helicity_x2 != 3 && helicity_x2 != -3)
    throw std::invalid_argument("helicity must be +-3/2 (helicity_x2 = +-3)");
  if (!(km.omega > 0.0)) throw std::invalid_argument("rarita_mode needs omega > 0");
  const int sign = helicity_x2 > 0 ? 1 : -1;
  const Vec3 khat = km.k / km.omega;
  const auto [e1, e2] = frame(khat);
  const CVec3 eps = circular(e1, e2, sign);
  const BiSpinor ud = dirac_spinor(km, sign);

  RaritaMode m;
  m.k = km.k;
  m.omega = km.omega;
  m.helicity_x2 = helicity_x2;
  m.u[0] = BiSpinor::Zero();
  for (int i = 0; i < 3; ++i) m.u[i + 1] = -eps[i] * ud;  // lower index: eps_i = -eps^i
  return m;
}

std::array<BiSpinor, 4> rarita_v(const RaritaMode& m) {
  std::array<BiSpinor, 4> v;
  for (int mu = 0; mu < 4; ++mu) v[mu] = I * gamma(2) * m.u[mu].conjugate();
  return v;
}

double rarita_constraint_residual(const RaritaMode& m) {
  const FourVector kup{cplx(m.omega), cplx(m.k.x()), cplx(m.k.y()), cplx(m.k.z())};
  BiSpinor gtrace = BiSpinor::Zero();
  BiSpinor kdot = BiSpinor::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    gtrace += gamma(mu) * m.u[mu];  // gamma^mu u_mu
    kdot += kup[mu] * m.u[mu];      // k^mu u_mu
  }
  const double r = std::max(gtrace.cwiseAbs().maxCoeff(), kdot.cwiseAbs().maxCoeff());
  return std::max(r, m.u[0].cwiseAbs().maxCoeff());
}

cplx rarita_bilinear(const std::array<BiSpinor, 4>& a, const std::array<BiSpinor, 4>& b, int nu) {
  cplx acc = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    acc += metric(mu, mu) * (a[mu].adjoint() * gamma(0) * gamma(nu) * b[mu])(0, 0);
  return acc;
}

PolarizationTensor polarization_tensor(const Vec3& k_hat, int lambda) {
  if (lambda != 2 && lambda != -2) throw std::invalid_argument("helicity must be +-2");
  check_unit(k_hat);
  const Vec3 axis = canonical_axis(k_hat);
  const auto [e1, e2] = frame(axis);
  const CVec3 eps = circular(e1, e2, lambda / 2);
  PolarizationTensor p;
  p.khat = k_hat;
  p.helicity = lambda;
  p.e = std::sqrt(2.0) * (eps * eps.transpose());
  return p;
}

SvtParts svt_decompose(const Mat3c& f, const Vec3& k_hat) {
  check_unit(k_hat);
  if ((f - f.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, f.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("svt_decompose expects a symmetric tensor");
  const CVec3 kh = k_hat.cast<cplx>();
  const cplx tr = f.trace();
  const cplx kfk = (kh.transpose() * f * kh)(0, 0);

  SvtParts parts;
  parts.trace_part = (tr / 3.0) * Mat3c::Identity();
  const Mat3c longit = kh * kh.transpose() - Mat3c::Identity() / 3.0;
  parts.scalar_part = 1.5 * (kfk - tr / 3.0) * longit;
  const CVec3 w = f * kh;
  const CVec3 vt = w - kh * (kh.transpose() * w)(0, 0);  // transverse vector piece
  parts.vector_part = kh * vt.transpose() + vt * kh.transpose();
  parts.tt_part = f - parts.trace_part - parts.scalar_part - parts.vector_part;
  return parts;
}

Mat3c tt_project(const Mat3c& f, const Vec3& k_hat) {
  check_unit(k_hat);
  Mat3c out = Mat3c::Zero();
  for (int lambda : {2, -2}) {
    const Mat3c e = polarization_tensor(k_hat, lambda).e;
    out += 0.5 * e.conjugate() * tensor_dot(e, f);
  }
  return out;
}

GravitonModeSet::GravitonModeSet(double box_volume) : volume_(box_volume) {
  if (!(box_volume > 0.0)) throw std::invalid_argument("box volume must be positive");
}

void GravitonModeSet::add(const Vec3& k, int lambda, cplx amplitude) {
  const double w = k.norm();
  if (!(w > 0.0)) throw std::invalid_argument("mode momentum must be nonzero");
  add_raw(k, polarization_tensor(k / w, lambda).e, amplitude);
}

void GravitonModeSet::add_raw(const Vec3& k, const Mat3c& tensor, cplx amplitude, double tol) {
  const double w = k.norm();
  if (!(w > 0.0)) throw std::invalid_argument("mode momentum must be nonzero");
  const Vec3 khat = k / w;
  const double scale = std::max(1.0, tensor.cwiseAbs().maxCoeff());
  if ((tensor - tensor.transpose()).cwiseAbs().maxCoeff() > tol * scale ||
      std::abs(tensor.trace()) > tol * scale ||
      (khat.cast<cplx>().transpose() * tensor).cwiseAbs().maxCoeff() > tol * scale)
    throw std::invalid_argument("mode tensor is not transverse traceless");
  entries_.push_back({k, w, tensor, amplitude});
}

Eigen::Matrix3d GravitonModeSet::h(const Vec3& x, double t) const {
  Mat3c acc = Mat3c::Zero();
  for (const auto& en : entries_) {
    const cplx phase = std::exp(I * (en.k.dot(x) - en.omega * t));
    acc += (en.amp * phase / std::sqrt(2.0 * en.omega * volume_)) * en.e;
  }
  return 2.0 * acc.real();
}

Eigen::Matrix3d GravitonModeSet::gamma0(const Vec3& x, double t) const {
  Mat3c acc = Mat3c::Zero();
  for (const auto& en : entries_) {
    const cplx phase = std::exp(I * (en.k.dot(x) - en.omega * t));
    acc += (-I * en.omega) * (en.amp * phase / std::sqrt(2.0 * en.omega * volume_)) * en.e;
  }
  return -0.5 * 2.0 * acc.real();
}

double GravitonModeSet::energy(double t) const { return spin2_mode_energy(*this, t); }

double spin2_mode_energy(const GravitonModeSet& ms, double t) {
  // H = integral over the box of (1/4) (dh/dt)^2 + (1/4) (grad h)^2 with
  // h = sum_m [q_m e_m e^{i k_m.x} + conj], q_m = a_m e^{-i w t} / sqrt(2 w V).
  // The box integral pairs k with k and with -k; the opposite-momentum cross
  // terms carry the factor (k.k - w^2) and cancel exactly on the light cone.
  const double V = ms.volume_;
  const auto& es = ms.entries_;
  double total = 0.0;
  for (const auto& A : es) {
    for (const auto& B : es) {
      const cplx qa = A.amp * std::exp(-I * A.omega * t) / std::sqrt(2.0 * A.omega * V);
      const cplx qb = B.amp * std::exp(-I * B.omega * t) / std::sqrt(2.0 * B.omega * V);
      if (A.k == B.k) {
        const double coupling = 2.0 * A.k.dot(B.k);  // w_a w_b + k_a.k_b
        const cplx pair = qa * std::conj(qb) * tensor_dot(A.e, B.e.conjugate());
        total += 0.25 * V * 2.0 * (coupling * pair).real();
      }
      if (A.k == Vec3(-B.k)) {
        const double coupling = -A.k.squaredNorm() - A.k.dot(B.k);  // -w_a w_b - k_a.k_b
        const cplx pair = qa * qb * tensor_dot(A.e, B.e);
        total += 0.25 * V * 2.0 * (coupling * pair).real();
      }
    }
  }
  return total;
}

Rank4Tensor bel_robinson(const SpinTensor& t) {
  if (t.rank != 4 || t.var != Variance::upper_unbarred)
    throw std::invalid_argument("bel_robinson expects a rank-4 upper unbarred tensor");
  std::array<cplx, 16> psi;
  for (int a = 0; a < 16; ++a) psi[a] = t.c[std::popcount(unsigned(a))];

  Rank4Tensor out;
  const double norm = 1.0 / 16.0;  // (1/2)^4
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int sig = 0; sig < 4; ++sig) {
          const Mat2& s0 = pauli_unit(mu);
          const Mat2& s1 = pauli_unit(nu);
          const Mat2& s2 = pauli_unit(rho);
          const Mat2& s3 = pauli_unit(sig);
          cplx acc = 0.0;
          for (int a = 0; a < 16; ++a)
            for (int ab = 0; ab < 16; ++ab) {
              const cplx w = s0(ab & 1, a & 1) * s1((ab >> 1) & 1, (a >> 1) & 1) *
                             s2((ab >> 2) & 1, (a >> 2) & 1) * s3((ab >> 3) & 1, (a >> 3) & 1);
              if (w == cplx(0.0)) continue;
              acc += w * psi[a] * std::conj(psi[ab]);
            }
          out(mu, nu, rho, sig) = norm * acc.real();
        }
  return out;
}

}  // namespace casimir
