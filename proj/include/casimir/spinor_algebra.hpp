#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace casimir {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using FourVector = Eigen::Vector4cd;

inline constexpr double default_tol = 1e-10;

//! Minkowski metric entry, signature (+,-,-,-); g_{mu nu} = g^{mu nu}.
double metric(int mu, int nu);

//! v_mu = g_{mu nu} v^nu (and back: the map is an involution).
FourVector lower_index(const FourVector& v);

//! Bilinear (not sesquilinear) inner product g(v, w) = v^mu w_mu.
cplx minkowski_dot(const FourVector& v, const FourVector& w);

//! Normalised Pauli matrices sigma^mu, carrying the 1/sqrt(2) factor.
const Mat2& pauli(int mu);

//! Dual set: sigma~^0 = sigma^0, sigma~^i = -sigma^i.
const Mat2& pauli_tilde(int mu);

//! Unnormalised basis: s(0) = I, s(1..3) the standard Pauli matrices.
const Mat2& pauli_unit(int mu);

//! Symplectic form omega = [[0,1],[-1,0]] shared by all index placements.
const Mat2& symplectic();

//! tr(sigma_mu sigma~_nu); equals g_{mu nu}.
double minkowski_trace(int mu, int nu);

enum class MatrixForm { lower, upper };  // v_{bar-a a} vs v^{a bar-a}

//! v_{bar-a a} = sigma^mu_{bar-a a} v_mu  or  v^{a bar-a} = sigma~^{mu a bar-a} v_mu.
Mat2 vector_to_spin(const FourVector& v, MatrixForm form);

//! Inverse of vector_to_spin: v^mu recovered by tracing against the dual symbols.
FourVector spin_to_vector(const Mat2& m, MatrixForm form);

bool is_hermitian(const Mat2& m, double tol = default_tol);

// Index variance of a spinor or spin-tensor. Barred indices live in the
// conjugate space; only matching variances may be contracted.
enum class Variance { upper_unbarred, lower_unbarred, upper_barred, lower_barred };

Variance conjugate_toggle(Variance v);
bool is_upper(Variance v);
bool is_barred(Variance v);

struct Spinor2 {
  Eigen::Vector2cd c = Eigen::Vector2cd::Zero();
  Variance var = Variance::upper_unbarred;
};

//! omega^{ab} psi_b = psi^a (repeated index in the second slot).
Spinor2 raise(const Spinor2& s);

//! omega_{ab} psi^a = psi_b (repeated index in the first slot).
Spinor2 lower(const Spinor2& s);

//! psi_a phi^a. Requires a lower/upper pair of equal barredness.
cplx contract(const Spinor2& lo, const Spinor2& up);

// Totally symmetric rank-m spin-tensor, stored as its m+1 independent
// components indexed by the number of indices equal to 1. Contractions expand
// the binomial multiplicities explicitly.
struct SpinTensor {
  int rank = 1;
  Variance var = Variance::upper_unbarred;
  Eigen::VectorXcd c;

  SpinTensor() : c(Eigen::VectorXcd::Zero(2)) {}
  SpinTensor(int m, Variance v);
  SpinTensor(int m, Variance v, Eigen::VectorXcd comps);

  double max_abs() const;
};

SpinTensor operator+(const SpinTensor& a, const SpinTensor& b);
SpinTensor operator-(const SpinTensor& a, const SpinTensor& b);
SpinTensor operator*(const cplx& z, const SpinTensor& t);

//! m-fold symmetric tensor power of a rank-1 spinor; component j is s0^(m-j) s1^j.
SpinTensor sym_power(const Spinor2& s, int m);

//! Charge conjugation: conjugate every component, then lower each index with
//! the barred symplectic form (first-slot convention). Component j of the
//! result is (-1)^(m-j) conj(c_{m-j}); applying it twice gives (-1)^rank.
SpinTensor conj_lower(const SpinTensor& t);

//! Apply the same 2x2 matrix to every index of a symmetric tensor,
//! (A t)^{b1..bm} = A^{b1}_{a1} ... A^{bm}_{am} t^{a1..am}.
SpinTensor apply_per_index(const SpinTensor& t, const Mat2& a, Variance out_var);

double binomial(int n, int k);

}  // namespace casimir
