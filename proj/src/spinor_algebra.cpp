#include "casimir/spinor_algebra.hpp"

#include <array>
#include <cmath>

namespace casimir {

namespace {

constexpr cplx I{0.0, 1.0};

std::array<Mat2, 4> make_pauli_unit() {
  std::array<Mat2, 4> s;
  s[0] << 1, 0, 0, 1;
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -I, I, 0;
  s[3] << 1, 0, 0, -1;
  return s;
}

const std::array<Mat2, 4>& pauli_unit_set() {
  static const std::array<Mat2, 4> s = make_pauli_unit();
  return s;
}

int check_index(int mu) {
  if (mu < 0 || mu > 3) throw std::invalid_argument("spacetime index out of range 0..3");
  return mu;
}

// z^n with 0^0 = 1, small integer n.
cplx ipow(const cplx& z, int n) {
  cplx r = 1.0;
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

}  // namespace

double metric(int mu, int nu) {
  check_index(mu);
  check_index(nu);
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

FourVector lower_index(const FourVector& v) {
  FourVector w = v;
  w[1] = -w[1];
  w[2] = -w[2];
  w[3] = -w[3];
  return w;
}

cplx minkowski_dot(const FourVector& v, const FourVector& w) {
  return v[0] * w[0] - v[1] * w[1] - v[2] * w[2] - v[3] * w[3];
}

const Mat2& pauli(int mu) {
  static const std::array<Mat2, 4> p = [] {
    std::array<Mat2, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = pauli_unit_set()[i] / std::sqrt(2.0);
    return r;
  }();
  return p[check_index(mu)];
}

const Mat2& pauli_tilde(int mu) {
  static const std::array<Mat2, 4> p = [] {
    std::array<Mat2, 4> r;
    r[0] = pauli(0);
    for (int i = 1; i < 4; ++i) r[i] = -pauli(i);
    return r;
  }();
  return p[check_index(mu)];
}

const Mat2& pauli_unit(int mu) { return pauli_unit_set()[check_index(mu)]; }

const Mat2& symplectic() {
  static const Mat2 w = (Mat2() << 0, 1, -1, 0).finished();
  return w;
}

double minkowski_trace(int mu, int nu) {
  const Mat2 lo_mu = metric(mu, mu) * pauli(mu);        // sigma_mu
  const Mat2 lo_nu = metric(nu, nu) * pauli_tilde(nu);  // sigma~_nu
  return (lo_mu * lo_nu).trace().real();
}

Mat2 vector_to_spin(const FourVector& v, MatrixForm form) {
  const FourVector vlo = lower_index(v);
  Mat2 m = Mat2::Zero();
  for (int mu = 0; mu < 4; ++mu)
    m += (form == MatrixForm::lower ? pauli(mu) : pauli_tilde(mu)) * vlo[mu];
  return m;
}

FourVector spin_to_vector(const Mat2& m, MatrixForm form) {
  FourVector v;
  for (int mu = 0; mu < 4; ++mu) {
    // lower form: v^mu = sigma~^{mu a bar-a} v_{bar-a a} = tr(sigma~^mu m);
    // upper form: v^mu = sigma^{mu}_{bar-a a} v^{a bar-a} = tr(sigma^mu m).
    const Mat2& sym = (form == MatrixForm::lower) ? pauli_tilde(mu) : pauli(mu);
    v[mu] = (sym * m).trace();
  }
  return v;
}

bool is_hermitian(const Mat2& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Variance conjugate_toggle(Variance v) {
  switch (v) {
    case Variance::upper_unbarred: return Variance::lower_barred;
    case Variance::lower_barred: return Variance::upper_unbarred;
    case Variance::upper_barred: return Variance::lower_unbarred;
    case Variance::lower_unbarred: return Variance::upper_barred;
  }
  throw std::logic_error("unreachable");
}

bool is_upper(Variance v) {
  return v == Variance::upper_unbarred || v == Variance::upper_barred;
}

bool is_barred(Variance v) {
  return v == Variance::upper_barred || v == Variance::lower_barred;
}

Spinor2 raise(const Spinor2& s) {
  if (is_upper(s.var)) throw std::invalid_argument("raise expects a lower-index spinor");
  Spinor2 r;
  r.c << s.c[1], -s.c[0];
  r.var = s.var == Variance::lower_unbarred ? Variance::upper_unbarred : Variance::upper_barred;
  return r;
}

Spinor2 lower(const Spinor2& s) {
  if (!is_upper(s.var)) throw std::invalid_argument("lower expects an upper-index spinor");
  Spinor2 r;
  r.c << -s.c[1], s.c[0];
  r.var = s.var == Variance::upper_unbarred ? Variance::lower_unbarred : Variance::lower_barred;
  return r;
}

cplx contract(const Spinor2& lo, const Spinor2& up) {
  if (is_upper(lo.var) || !is_upper(up.var) || is_barred(lo.var) != is_barred(up.var))
    throw std::invalid_argument("contract expects a lower/upper pair of equal barredness");
  return lo.c[0] * up.c[0] + lo.c[1] * up.c[1];
}

SpinTensor::SpinTensor(int m, Variance v) : rank(m), var(v) {
  if (m < 1) throw std::invalid_argument("spin-tensor rank must be >= 1");
  c = Eigen::VectorXcd::Zero(m + 1);
}

SpinTensor::SpinTensor(int m, Variance v, Eigen::VectorXcd comps) : rank(m), var(v), c(std::move(comps)) {
  if (m < 1) throw std::invalid_argument("spin-tensor rank must be >= 1");
  if (c.size() != m + 1) throw std::invalid_argument("component count must equal rank + 1");
}

double SpinTensor::max_abs() const { return c.cwiseAbs().maxCoeff(); }

static void check_same_shape(const SpinTensor& a, const SpinTensor& b) {
  if (a.rank != b.rank || a.var != b.var)
    throw std::invalid_argument("spin-tensor rank/variance mismatch");
}

SpinTensor operator+(const SpinTensor& a, const SpinTensor& b) {
  check_same_shape(a, b);
  return {a.rank, a.var, a.c + b.c};
}

SpinTensor operator-(const SpinTensor& a, const SpinTensor& b) {
  check_same_shape(a, b);
  return {a.rank, a.var, a.c - b.c};
}

SpinTensor operator*(const cplx& z, const SpinTensor& t) { return {t.rank, t.var, z * t.c}; }

SpinTensor sym_power(const Spinor2& s, int m) {
  if (m < 1) throw std::invalid_argument("sym_power needs rank >= 1");
  SpinTensor t(m, s.var);
  for (int j = 0; j <= m; ++j) {
    cplx v = 1.0;
    for (int i = 0; i < m - j; ++i) v *= s.c[0];
    for (int i = 0; i < j; ++i) v *= s.c[1];
    t.c[j] = v;
  }
  return t;
}

SpinTensor conj_lower(const SpinTensor& t) {
  const int m = t.rank;
  SpinTensor out(m, conjugate_toggle(t.var));
  for (int j = 0; j <= m; ++j)
    out.c[j] = (((m - j) % 2) ? -1.0 : 1.0) * std::conj(t.c[m - j]);
  return out;
}

SpinTensor apply_per_index(const SpinTensor& t, const Mat2& a, Variance out_var) {
  const int m = t.rank;
  SpinTensor out(m, out_var);
  for (int jp = 0; jp <= m; ++jp) {
    cplx acc = 0.0;
    for (int p = 0; p <= m - jp; ++p) {
      for (int q = 0; q <= jp; ++q) {
        const cplx w = binomial(m - jp, p) * binomial(jp, q) * ipow(a(0, 0), m - jp - p) *
                       ipow(a(0, 1), p) * ipow(a(1, 0), jp - q) * ipow(a(1, 1), q);
        acc += w * t.c[p + q];
      }
    }
    out.c[jp] = acc;
  }
  return out;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return std::round(r);
}

}  // namespace casimir
