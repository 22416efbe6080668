#include <doctest.h>

#include <random>

#include "casimir/maxwell_bridge.hpp"
#include "test_helpers.hpp"

using namespace casimir;

namespace {

CVec3 random_F(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  CVec3 F;
  for (int i = 0; i < 3; ++i) F[i] = cplx(gauss(rng), gauss(rng));
  return F;
}

}  // namespace

TEST_CASE("field-tensor dictionary") {
  SUBCASE("axis examples") {
    const SpinTensor a = spin_from_F(CVec3{0.0, 0.0, 1.0});
    CHECK(a.c[0] == cplx(0.0));
    CHECK(a.c[1] == cplx(1.0));
    CHECK(a.c[2] == cplx(0.0));
    const SpinTensor b = spin_from_F(CVec3{1.0, 0.0, 0.0});
    CHECK(b.c[0] == cplx(-1.0));
    CHECK(b.c[1] == cplx(0.0));
    CHECK(b.c[2] == cplx(1.0));
  }

  SUBCASE("exact round trip") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
      const CVec3 F = random_F(rng);
      CHECK((F_from_spin(spin_from_F(F)) - F).cwiseAbs().maxCoeff() < 1e-15);
    }
  }
}

TEST_CASE("wave-equation residual for the complex field vector") {
  const NullMomentum k(Vec3{0, 0, 1});
  const double r = 1.0 / std::sqrt(2.0);

  SUBCASE("positive-helicity amplitude solves") {
    // oracle: cross-product arithmetic
    CHECK(maxwell_residual(CVec3{r, r * cplx(0, 1), 0.0}, k) < 1e-15);
  }

  SUBCASE("conjugate amplitude solves the conjugated equation instead") {
    const CVec3 F0{r, -r * cplx(0, 1), 0.0};
    CHECK(maxwell_residual(F0, k) == doctest::Approx(2.0 * k.omega * F0.norm()).epsilon(1e-12));
  }

  SUBCASE("zero field") { CHECK(maxwell_residual(CVec3::Zero(), k) == 0.0); }
}

TEST_CASE("energy-current column") {
  CHECK((em_stress(Vec3{1, 0, 0}, Vec3::Zero()) - Vec4{0.5, 0, 0, 0}).cwiseAbs().maxCoeff() <
        1e-15);
  // componentwise arithmetic oracle: E = x, B = y gives Poynting flux along z
  CHECK((em_stress(Vec3{1, 0, 0}, Vec3{0, 1, 0}) - Vec4{1.0, 0, 0, 1.0}).cwiseAbs().maxCoeff() <
        1e-15);
  // parallel fields carry no flux
  CHECK((em_stress(Vec3{1, 0, 0}, Vec3{1, 0, 0}) - Vec4{1.0, 0, 0, 0}).cwiseAbs().maxCoeff() <
        1e-15);
}

TEST_CASE("the rank-2 current is the electromagnetic energy flux") {
  std::mt19937_64 rng(42);
  SUBCASE("a thousand random fields") {
    for (int trial = 0; trial < 1000; ++trial)
      CHECK(stress_equivalence(random_F(rng)) < 1e-12);
  }
  SUBCASE("zero and axis fields") {
    CHECK(stress_equivalence(CVec3::Zero()) == 0.0);
    const CVec3 F{0.0, 0.0, 1.0};
    CHECK(stress_equivalence(F) < 1e-15);
    CHECK(spin_current(spin_from_F(F))[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(em_stress(F.real(), F.imag())[0] == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("perfect-conductor residual") {
  SUBCASE("satisfied and violated configurations") {
    CHECK(em_bc_residual(Vec3{0, 0, 2.0}, Vec3{0.3, -0.4, 0}, Vec3{0, 0, 1}) < 1e-15);
    CHECK(em_bc_residual(Vec3::Zero(), Vec3{0, 0, 1}, Vec3{0, 0, 1}) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }

  SUBCASE("equivalent to the spin-tensor plate conditions pointwise") {
    // the two rank-2 conditions at a z-plate read c0 = conj(c2) and Im c1 = 0
    std::mt19937_64 rng(43);
    std::normal_distribution<double> gauss;
    const Vec3 n{0, 0, 1};
    for (int trial = 0; trial < 200; ++trial) {
      SpinTensor t(2, Variance::upper_unbarred);
      if (trial % 2) {
        // impose the spin-tensor conditions
        t.c[0] = cplx(gauss(rng), gauss(rng));
        t.c[2] = std::conj(t.c[0]);
        t.c[1] = cplx(gauss(rng), 0.0);
      } else {
        t = oracle::random_tensor(rng, 2);
      }
      const CVec3 F = F_from_spin(t);
      const double em = em_bc_residual(F.real(), F.imag(), n);
      const double spin = std::abs(t.c[0] - std::conj(t.c[2])) + std::abs(std::imag(t.c[1]));
      if (spin < 1e-14)
        CHECK(em < 1e-12);
      else
        CHECK(em > 0.1 * spin);
    }
  }
}

TEST_CASE("standing modes satisfy the conductor condition exactly at admissible momenta") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const PlateGeometry g(1.0);

  for (int n = 1; n <= 3; ++n) {
    const double k3 = n * M_PI;
    const ModeSolution good = standing_mode(2, NullMomentum({coord(rng), coord(rng), k3}), g);
    const ModeSolution bad =
        standing_mode(2, NullMomentum({coord(rng), coord(rng), k3 + M_PI / 2.0}), g);
    for (auto side : {PlateSide::origin, PlateSide::distant}) {
      const Vec3 normal{0, 0, side == PlateSide::origin ? -1.0 : 1.0};
      double bad_worst = 0.0;
      for (int s = 0; s < 5; ++s) {
        const Vec4 x{unit(rng) * 6.0, coord(rng), coord(rng),
                     side == PlateSide::origin ? 0.0 : g.separation};
        const EMField em = em_field_of_mode(good, x);
        CHECK(em_bc_residual(em.E, em.B, normal) < 1e-12);
        CHECK(bc_residual(side, good, x, g) < 1e-12);
        const EMField emb = em_field_of_mode(bad, x);
        bad_worst = std::max(bad_worst, em_bc_residual(emb.E, emb.B, normal));
      }
      if (side == PlateSide::distant) {
        CHECK(bad_worst > 1e-2);
        CHECK(bc_residual_sampled(side, bad, g) > 1e-2);
      }
    }
  }
}

TEST_CASE("the two wave-equation forms vanish together") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const NullMomentum k = oracle::random_null(rng);
    const ModeSolution mode = free_plane_wave(2, k);
    const CVec3 F0 = F_from_spin(mode.terms.front().coeff);
    CHECK(maxwell_residual(F0, k) < 1e-12);
    CHECK(eom_residual(mode) < 1e-12);

    ModeSolution wrong = mode;
    wrong.terms.front().coeff = spin_from_F(F0.conjugate());
    CHECK(maxwell_residual(F0.conjugate(), k) > 0.1 * k.omega * F0.norm());
    CHECK(eom_residual(wrong) > 0.01 * k.omega * F0.norm());
  }
}
