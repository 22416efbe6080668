#include <doctest.h>

#include <random>

#include "casimir/spinor_algebra.hpp"
#include "test_helpers.hpp"

using namespace casimir;

namespace {

FourVector random_real_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  FourVector v;
  for (int i = 0; i < 4; ++i) v[i] = cplx(gauss(rng));
  return v;
}

}  // namespace

TEST_CASE("normalised Pauli matrices") {
  const double r = 1.0 / std::sqrt(2.0);
  CHECK((pauli(0) - r * Mat2::Identity()).cwiseAbs().maxCoeff() == 0.0);
  Mat2 diag3;
  diag3 << r, 0, 0, -r;
  CHECK((pauli(3) - diag3).cwiseAbs().maxCoeff() == 0.0);
  CHECK((pauli(1) - pauli(1).transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((pauli_tilde(0) - pauli(0)).cwiseAbs().maxCoeff() == 0.0);
  for (int i = 1; i < 4; ++i)
    CHECK((pauli_tilde(i) + pauli(i)).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(pauli(4), std::invalid_argument);
  CHECK_THROWS_AS(pauli(-1), std::invalid_argument);
}

TEST_CASE("trace identity reproduces the metric") {
  CHECK(minkowski_trace(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(minkowski_trace(1, 1) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(minkowski_trace(0, 1) == doctest::Approx(0.0).epsilon(1e-15));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      CHECK(std::abs(minkowski_trace(mu, nu) - metric(mu, nu)) <= 1e-15);
}

TEST_CASE("symplectic form") {
  Mat2 w;
  w << 0, 1, -1, 0;
  CHECK((symplectic() - w).cwiseAbs().maxCoeff() == 0.0);
  CHECK((symplectic() * symplectic() + Mat2::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("vector-spinor dictionary") {
  std::mt19937_64 rng(11);

  SUBCASE("timelike unit vector maps to the identity") {
    const FourVector e0{1.0, 0.0, 0.0, 0.0};
    const Mat2 m = vector_to_spin(e0, MatrixForm::lower);
    CHECK((m - Mat2::Identity() / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(is_hermitian(m));
  }

  SUBCASE("round trip on random vectors") {
    for (int trial = 0; trial < 50; ++trial) {
      const FourVector v = random_real_vector(rng);
      for (auto form : {MatrixForm::lower, MatrixForm::upper}) {
        const FourVector back = spin_to_vector(vector_to_spin(v, form), form);
        CHECK((back - v).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(is_hermitian(vector_to_spin(v, form)));
      }
    }
  }

  SUBCASE("null vectors give singular matrices") {
    const FourVector k{1.0, 0.0, 0.0, 1.0};
    // oracle: direct determinant of the 2x2
    const Mat2 m = vector_to_spin(k, MatrixForm::lower);
    const cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    CHECK(std::abs(det) < 1e-14);
  }

  SUBCASE("inner product through the matrices") {
    for (int trial = 0; trial < 100; ++trial) {
      const FourVector v = random_real_vector(rng);
      const FourVector w = random_real_vector(rng);
      const cplx lhs = (vector_to_spin(v, MatrixForm::lower) * vector_to_spin(w, MatrixForm::upper))
                           .trace();
      CHECK(std::abs(lhs - minkowski_dot(v, w)) < 1e-12);
    }
  }

  SUBCASE("double symplectic pairing equals the metric kernel") {
    // g_{a-bar a b-bar b} = omega_{ab} omega_{a-bar b-bar}: contract two random
    // vectors through both sides and against g(v, w).
    for (int trial = 0; trial < 100; ++trial) {
      const FourVector v = random_real_vector(rng);
      const FourVector w = random_real_vector(rng);
      const Mat2 vu = vector_to_spin(v, MatrixForm::upper);  // v^{a a-bar}
      const Mat2 wu = vector_to_spin(w, MatrixForm::upper);  // w^{b b-bar}
      cplx lhs = 0.0, rhs = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int ab = 0; ab < 2; ++ab)
          for (int b = 0; b < 2; ++b)
            for (int bb = 0; bb < 2; ++bb) {
              cplx kernel = 0.0;
              for (int mu = 0; mu < 4; ++mu)
                kernel += pauli_tilde(mu).transpose()(ab, a) * metric(mu, mu) *
                          pauli_tilde(mu).transpose()(bb, b);
              lhs += kernel * vu(a, ab) * wu(b, bb);
              rhs += symplectic()(a, b) * symplectic()(ab, bb) * vu(a, ab) * wu(b, bb);
            }
      CHECK(std::abs(lhs - rhs) < 1e-12);
      CHECK(std::abs(lhs - minkowski_dot(v, w)) < 1e-12);
    }
  }
}

TEST_CASE("raising and lowering") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> gauss;

  SUBCASE("explicit matrix oracle") {
    Spinor2 s;
    s.c << 1.0, 0.0;
    s.var = Variance::lower_unbarred;
    const Spinor2 up = raise(s);
    CHECK(up.c[0] == cplx(0.0));
    CHECK(up.c[1] == cplx(-1.0));
    // oracle: omega^{ab} psi_b as a matrix product, second slot contracted
    const Eigen::Vector2cd expect = symplectic() * s.c;
    CHECK((up.c - expect).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("inverse pair and self-contraction") {
    for (int trial = 0; trial < 50; ++trial) {
      Spinor2 s;
      s.c << cplx(gauss(rng), gauss(rng)), cplx(gauss(rng), gauss(rng));
      s.var = Variance::lower_unbarred;
      const Spinor2 back = lower(raise(s));
      CHECK((back.c - s.c).cwiseAbs().maxCoeff() < 1e-15);
      s.var = Variance::upper_unbarred;
      CHECK(std::abs(contract(lower(s), s)) < 1e-15);
    }
  }

  SUBCASE("variance is enforced") {
    Spinor2 s;
    s.var = Variance::upper_unbarred;
    CHECK_THROWS_AS(raise(s), std::invalid_argument);
    s.var = Variance::lower_barred;
    CHECK_THROWS_AS(lower(s), std::invalid_argument);
  }
}

TEST_CASE("symmetric tensor powers") {
  Spinor2 s;
  s.c << 1.0, 2.0;

  SUBCASE("rank one is the spinor itself") {
    const SpinTensor t = sym_power(s, 1);
    CHECK(t.c[0] == cplx(1.0));
    CHECK(t.c[1] == cplx(2.0));
  }

  SUBCASE("rank two components") {
    const SpinTensor t = sym_power(s, 2);
    CHECK(t.c[0] == cplx(1.0));
    CHECK(t.c[1] == cplx(2.0));
    CHECK(t.c[2] == cplx(4.0));
    CHECK(t.c.size() == 3);
  }

  SUBCASE("component count and rank validation") {
    for (int m = 1; m <= 8; ++m) CHECK(sym_power(s, m).c.size() == m + 1);
    CHECK_THROWS_AS(sym_power(s, 0), std::invalid_argument);
  }

  SUBCASE("scaling multiplicativity") {
    std::mt19937_64 rng(13);
    std::normal_distribution<double> gauss;
    for (int m = 1; m <= 6; ++m) {
      Spinor2 r;
      r.c << cplx(gauss(rng), gauss(rng)), cplx(gauss(rng), gauss(rng));
      const cplx scale{gauss(rng), gauss(rng)};
      Spinor2 scaled;
      scaled.c = scale * r.c;
      cplx factor = 1.0;
      for (int i = 0; i < m; ++i) factor *= scale;
      const SpinTensor lhs = sym_power(scaled, m);
      const SpinTensor rhs = factor * sym_power(r, m);
      CHECK((lhs.c - rhs.c).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, rhs.max_abs()));
    }
  }
}

TEST_CASE("charge conjugation of tensors") {
  std::mt19937_64 rng(14);

  SUBCASE("rank-1 component oracle") {
    Spinor2 s;
    s.c << 1.0, 0.0;
    const SpinTensor t = conj_lower(sym_power(s, 1));
    // explicit 2x2 algebra: conjugate then lower with the symplectic form
    CHECK(t.c[0] == cplx(0.0));
    CHECK(t.c[1] == cplx(1.0));
    CHECK(t.var == Variance::lower_barred);
  }

  SUBCASE("double application gives (-1)^rank") {
    for (int m = 1; m <= 6; ++m)
      for (int trial = 0; trial < 20; ++trial) {
        const SpinTensor t = oracle::random_tensor(rng, m);
        const SpinTensor twice = conj_lower(conj_lower(t));
        const double sign = (m % 2) ? -1.0 : 1.0;
        CHECK((twice.c - sign * t.c).cwiseAbs().maxCoeff() < 1e-14 * t.max_abs());
      }
  }

  SUBCASE("zero maps to zero") {
    const SpinTensor z(3, Variance::upper_unbarred);
    CHECK(conj_lower(z).max_abs() == 0.0);
  }

  SUBCASE("dense oracle: conjugate then apply the lowering matrix per index") {
    const Mat2 lower_matrix = symplectic().transpose();
    for (int m = 1; m <= 6; ++m)
      for (int trial = 0; trial < 10; ++trial) {
        const SpinTensor t = oracle::random_tensor(rng, m);
        auto v = oracle::dense(t);
        for (auto& z : v) z = std::conj(z);
        const auto expect = oracle::dense_apply(v, m, lower_matrix);
        CHECK(oracle::dense_distance(expect, conj_lower(t)) < 1e-13);
      }
  }
}

TEST_CASE("per-index matrix application matches the dense oracle") {
  std::mt19937_64 rng(15);
  std::normal_distribution<double> gauss;
  for (int m = 1; m <= 7; ++m)
    for (int trial = 0; trial < 10; ++trial) {
      const SpinTensor t = oracle::random_tensor(rng, m);
      Mat2 a;
      a << cplx(gauss(rng), gauss(rng)), cplx(gauss(rng), gauss(rng)),
          cplx(gauss(rng), gauss(rng)), cplx(gauss(rng), gauss(rng));
      const SpinTensor lhs = apply_per_index(t, a, t.var);
      const auto expect = oracle::dense_apply(oracle::dense(t), m, a);
      double scale = 0.0;
      for (const auto& z : expect) scale = std::max(scale, std::abs(z));
      CHECK(oracle::dense_distance(expect, lhs) < 1e-12 * std::max(1.0, scale));
    }
}
