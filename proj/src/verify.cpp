#include "casimir/verify.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "casimir/boundary.hpp"
#include "casimir/higher_spin.hpp"
#include "casimir/maxwell_bridge.hpp"
#include "casimir/vacuum_energy.hpp"

namespace casimir {

namespace {

Vec3 random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vec3 v;
  do {
    v << gauss(rng), gauss(rng), gauss(rng);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

NullMomentum random_null_momentum(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  return NullMomentum(mag(rng) * scale * random_direction(rng));
}

//! Standing mode with an admissible normal momentum for rank m.
ModeSolution admissible_mode(int m, const PlateGeometry& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_int_distribution<int> pick(0, 3);
  const int n = (m % 2) ? 2 * pick(rng) + 1 : pick(rng) + 1;
  const double k3 = allowed_k3(m, g.separation, n).k3;
  return standing_mode(m, NullMomentum({coord(rng), coord(rng), k3}), g);
}

Check worst_check(const std::string& name, double worst, double threshold) {
  return {name, worst <= threshold, worst};
}

}  // namespace

std::vector<Check> verify_bc() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  const double seps[] = {0.5, 1.0, 2.0};
  double worst_plate0 = 0.0, worst_plated = 0.0, worst_mid = 1e300;
  bool parity_rejected = true;
  for (double d : seps) {
    const PlateGeometry g(d);
    for (int m = 1; m <= 4; ++m) {
      for (int trial = 0; trial < 8; ++trial) {
        const ModeSolution mode = admissible_mode(m, g, rng);
        worst_plate0 = std::max(worst_plate0, bc_residual_sampled(PlateSide::origin, mode, g));
        worst_plated = std::max(worst_plated, bc_residual_sampled(PlateSide::distant, mode, g));
        // midpoint between consecutive admissible values (spacing pi/d)
        const double base = (m % 2) ? M_PI / (2.0 * d) : M_PI / d;
        const double k3mid = base + 0.5 * M_PI / d;
        const ModeSolution bad =
            standing_mode(m, NullMomentum({coord(rng), coord(rng), k3mid}), g);
        worst_mid = std::min(worst_mid, bc_residual_sampled(PlateSide::distant, bad, g));
      }
    }
  }
  try {
    allowed_k3(1, 1.0, 2);
    parity_rejected = false;
  } catch (const parity_error&) {
  }
  try {
    allowed_k3(3, 1.0, 4);
    parity_rejected = false;
  } catch (const parity_error&) {
  }
  return {
      worst_check("standing modes satisfy the reflection condition at x3=0", worst_plate0, 1e-12),
      worst_check("admissible modes satisfy the reflection condition at x3=d", worst_plated, 1e-12),
      {"midpoint momenta violate the condition at x3=d", worst_mid > 0.1, worst_mid},
      {"fermionic even-n spectrum requests are rejected", parity_rejected,
       parity_rejected ? 0.0 : 1.0},
  };
}

std::vector<Check> verify_current() {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<int> rank(1, 4);
  const PlateGeometry g(1.0);
  double worst_normal = 0.0;
  double worst_positivity = 0.0;  // most negative j0 seen
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = rank(rng);
    const ModeSolution mode = admissible_mode(m, g, rng);
    for (auto side : {PlateSide::origin, PlateSide::distant})
      worst_normal =
          std::max(worst_normal, normal_current_check(side, mode, g, 3, 7000 + trial));
    const Vec4 x{0.3 * trial, 0.1, -0.2, 0.5};
    const Vec4 j = spin_current(mode.evaluate(x));
    worst_positivity = std::min(worst_positivity, j[0]);
  }
  // a single travelling wave violates the BC and carries normal current
  const ModeSolution lone = free_plane_wave(2, NullMomentum({0.3, -0.1, 1.2}));
  const double lone_current = normal_current_check(PlateSide::origin, lone, g);
  return {
      worst_check("BC-satisfying modes carry no normal current at either plate", worst_normal,
                  1e-12),
      {"the rank-m density j0 is nonnegative", worst_positivity >= -1e-15, -worst_positivity},
      {"a BC-violating travelling wave carries normal current", lone_current > 1e-3,
       lone_current},
  };
}

std::vector<Check> verify_maxwell() {
  std::mt19937_64 rng(303);
  std::normal_distribution<double> gauss;
  double worst_stress = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    CVec3 F;
    for (int i = 0; i < 3; ++i) F[i] = cplx(gauss(rng), gauss(rng));
    worst_stress = std::max(worst_stress, stress_equivalence(F));
  }

  // co-vanishing of the two wave-equation residuals on 100 random momenta
  double worst_covanish = 0.0;
  bool separated = true;
  for (int trial = 0; trial < 100; ++trial) {
    const NullMomentum k = random_null_momentum(rng);
    const ModeSolution mode = free_plane_wave(2, k);
    const CVec3 F0 = F_from_spin(mode.terms.front().coeff);
    worst_covanish = std::max(worst_covanish, maxwell_residual(F0, k));
    worst_covanish = std::max(worst_covanish, eom_residual(mode));
    // the conjugate amplitude solves the other-helicity equation instead
    const CVec3 Fbar = F0.conjugate();
    ModeSolution wrong = mode;
    wrong.terms.front().coeff = spin_from_F(Fbar);
    if (maxwell_residual(Fbar, k) < 0.1 * k.omega * F0.norm() ||
        eom_residual(wrong) < 0.1 * k.omega * F0.norm() / 4.0)
      separated = false;
  }

  // conductor condition matches the rank-2 reflection condition on standing modes
  const PlateGeometry g(1.0);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  double worst_em = 0.0, min_bad_em = 1e300;
  for (int trial = 0; trial < 40; ++trial) {
    const ModeSolution good = admissible_mode(2, g, rng);
    const ModeSolution bad =
        standing_mode(2, NullMomentum({coord(rng), coord(rng), 1.5 * M_PI}), g);
    std::mt19937_64 srng(4000 + trial);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double bad_em = 0.0;  // worst violation over the sampled points
    for (auto side : {PlateSide::origin, PlateSide::distant}) {
      const Vec3 n{0.0, 0.0, side == PlateSide::origin ? -1.0 : 1.0};
      for (int s = 0; s < 5; ++s) {
        const Vec4 x{unit(srng) * 2.0 * M_PI / good.omega, coord(srng), coord(srng),
                     side == PlateSide::origin ? 0.0 : g.separation};
        const EMField em = em_field_of_mode(good, x);
        worst_em = std::max(worst_em, em_bc_residual(em.E, em.B, n));
        if (side == PlateSide::distant) {
          const Vec4 xb{unit(srng) * 2.0 * M_PI / bad.omega, x[1], x[2], x[3]};
          const EMField emb = em_field_of_mode(bad, xb);
          bad_em = std::max(bad_em, em_bc_residual(emb.E, emb.B, n));
        }
      }
    }
    min_bad_em = std::min(min_bad_em, bad_em);
  }

  return {
      worst_check("rank-2 current equals the electromagnetic energy flux", worst_stress, 1e-12),
      worst_check("helicity modes solve both wave-equation forms", worst_covanish, 1e-12),
      {"conjugate amplitudes fail both wave-equation forms", separated, separated ? 0.0 : 1.0},
      worst_check("admissible standing modes meet the conductor condition", worst_em, 1e-10),
      {"inadmissible standing modes violate the conductor condition", min_bad_em > 1e-2,
       min_bad_em},
  };
}

std::vector<Check> verify_gamma() {
  double worst_clifford = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Mat4 anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      const Mat4 expect = 2.0 * metric(mu, nu) * Mat4::Identity();
      worst_clifford = std::max(worst_clifford, (anti - expect).cwiseAbs().maxCoeff());
    }
  double worst_eps = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int sig = 0; sig < 4; ++sig)
        worst_eps = std::max(worst_eps, epsilon_identity_residual(mu, nu, sig));
  return {
      worst_check("all 16 Dirac anticommutators equal 2 g I", worst_clifford, 0.0),
      worst_check("epsilon-gamma5 identity holds on all 64 triples", worst_eps, 1e-13),
  };
}

std::vector<Check> verify_rarita() {
  std::mt19937_64 rng(505);
  double worst_con = 0.0, worst_norm = 0.0, worst_cross = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const NullMomentum k = random_null_momentum(rng);
    const FourVector kup = k.four_momentum();
    for (int lam : {3, -3}) {
      const RaritaMode m = rarita_mode(k, lam);
      worst_con = std::max(worst_con, rarita_constraint_residual(m));
      for (int lamp : {3, -3}) {
        const RaritaMode mp = rarita_mode(k, lamp);
        for (int nu = 0; nu < 4; ++nu) {
          const cplx uu = rarita_bilinear(m.u, mp.u, nu);
          const cplx vv = rarita_bilinear(rarita_v(m), rarita_v(mp), nu);
          const cplx expect = (lam == lamp) ? cplx(-2.0 * kup[nu]) : cplx(0.0);
          worst_norm = std::max({worst_norm, std::abs(uu - expect), std::abs(vv - expect)});
        }
        const NullMomentum kneg(Vec3(-k.k));
        const cplx ortho = rarita_bilinear(m.u, rarita_v(rarita_mode(kneg, lamp)), 0);
        worst_cross = std::max(worst_cross, std::abs(ortho));
      }
    }
  }
  return {
      worst_check("gauge constraints hold for helicity +-3/2 modes", worst_con, 1e-10),
      worst_check("mode bilinears equal -2 k delta", worst_norm, 1e-10),
      worst_check("particle and antiparticle sectors are orthogonal", worst_cross, 1e-10),
  };
}

std::vector<Check> verify_tt() {
  std::mt19937_64 rng(606);
  std::normal_distribution<double> gauss;
  double worst_agree = 0.0, worst_idem = 0.0, worst_trans = 0.0, worst_trace = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    Mat3c f;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        f(i, j) = cplx(gauss(rng), gauss(rng));
        f(j, i) = f(i, j);
      }
    const Vec3 khat = random_direction(rng);
    const Mat3c tt = tt_project(f, khat);
    worst_agree = std::max(worst_agree, (tt - svt_decompose(f, khat).tt_part).cwiseAbs().maxCoeff());
    worst_idem = std::max(worst_idem, (tt_project(tt, khat) - tt).cwiseAbs().maxCoeff());
    worst_trans =
        std::max(worst_trans, (khat.cast<cplx>().transpose() * tt).cwiseAbs().maxCoeff());
    worst_trace = std::max(worst_trace, std::abs(tt.trace()));
  }

  double worst_norm = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 khat = random_direction(rng);
    for (int la : {2, -2})
      for (int lb : {2, -2}) {
        const Mat3c ea = polarization_tensor(khat, la).e;
        const Mat3c eb = polarization_tensor(khat, lb).e;
        const cplx dot = (ea.array() * eb.conjugate().array()).sum();
        const cplx expect = (la == lb) ? 2.0 : 0.0;
        worst_norm = std::max(worst_norm, std::abs(dot - expect));
        const Mat3c em = polarization_tensor(-khat, la).e;
        worst_norm = std::max(worst_norm, (em - ea).cwiseAbs().maxCoeff() * (la == lb ? 1.0 : 0.0));
      }
  }

  std::uniform_int_distribution<int> pick(-3, 3);
  double worst_energy = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    GravitonModeSet set(8.0);
    double expect = 0.0;
    int added = 0;
    std::vector<std::pair<Vec3, int>> used;
    while (added < 5) {
      Vec3 k{double(pick(rng)), double(pick(rng)), double(pick(rng))};
      k *= M_PI;
      if (k.norm() < 1e-9) continue;
      const int lam = (pick(rng) >= 0) ? 2 : -2;
      bool seen = false;
      for (const auto& [ku, lu] : used) seen = seen || (ku == k && lu == lam);
      if (seen) continue;
      used.emplace_back(k, lam);
      const cplx amp{gauss(rng), gauss(rng)};
      set.add(k, lam, amp);
      expect += k.norm() * std::norm(amp);
      ++added;
    }
    std::uniform_real_distribution<double> tdist(0.0, 1.0);
    const double err = std::abs(spin2_mode_energy(set, tdist(rng)) - expect);
    worst_energy = std::max(worst_energy, err / std::max(1.0, std::abs(expect)));
  }

  return {
      worst_check("helicity-sum kernel equals the scalar-vector-tensor tt part", worst_agree,
                  1e-12),
      worst_check("the kernel is idempotent", worst_idem, 1e-12),
      worst_check("projected tensors are transverse", worst_trans, 1e-12),
      worst_check("projected tensors are traceless", worst_trace, 1e-12),
      worst_check("polarisation tensors are orthonormal and parity even", worst_norm, 1e-12),
      worst_check("box energy equals the sum of omega |a|^2", worst_energy, 1e-10),
  };
}

std::vector<Check> verify_vacuum() {
  const double f_half = casimir_force(Statistics::fermionic, 1.0);
  const double f_one = casimir_force(Statistics::bosonic, 1.0);
  const double worst_const = std::max(std::abs(f_half + 7.0 * M_PI * M_PI / 960.0),
                                      std::abs(f_one + M_PI * M_PI / 240.0));
  const bool bitwise =
      std::bit_cast<std::uint64_t>(casimir_force_for_spin(1.5, 1.0)) ==
          std::bit_cast<std::uint64_t>(casimir_force_for_spin(0.5, 1.0)) &&
      std::bit_cast<std::uint64_t>(casimir_force_for_spin(2.0, 1.0)) ==
          std::bit_cast<std::uint64_t>(casimir_force_for_spin(1.0, 1.0));

  double worst_fit = 0.0;
  for (double d : {0.5, 1.0, 2.0})
    for (auto stat : {Statistics::fermionic, Statistics::bosonic}) {
      const LaurentFit fit = extrapolated_energy(stat, d, default_alpha_grid(d));
      worst_fit = std::max(worst_fit,
                           std::abs(fit.coeff(0) - casimir_energy(stat, d)) /
                               std::abs(casimir_energy(stat, d)));
    }

  const LaurentFit bf = bracket_fit(Statistics::fermionic, 1.0, default_alpha_grid(1.0));
  const double worst_bracket =
      std::max(std::abs(bf.coeff(0) + M_PI / 24.0) / (M_PI / 24.0),
               std::abs(bf.coeff(2) - 7.0 * std::pow(M_PI, 3) / 5760.0) /
                   (7.0 * std::pow(M_PI, 3) / 5760.0));

  double worst_force = 0.0;
  for (double d : {0.5, 1.0, 2.0})
    for (auto stat : {Statistics::fermionic, Statistics::bosonic}) {
      const double h = 1e-5 * d;
      const double num = -(casimir_energy(stat, d + h) - casimir_energy(stat, d - h)) / (2.0 * h);
      worst_force =
          std::max(worst_force, std::abs(num - casimir_force(stat, d)) / std::abs(casimir_force(stat, d)));
    }

  const double reduction = std::max(transverse_reduction_check(M_PI / 2.0, 10.0),
                                    transverse_reduction_check(M_PI, 20.0));

  return {
      worst_check("closed-form force constants are exact", worst_const, 1e-15),
      {"statistics partners give bitwise-identical forces", bitwise, bitwise ? 0.0 : 1.0},
      worst_check("fitted finite energy matches the closed form", worst_fit, 1e-6),
      worst_check("bracket expansion coefficients recovered by the fit", worst_bracket, 1e-5),
      worst_check("force equals the numerical energy derivative", worst_force, 1e-8),
      worst_check("transverse reduction verified by quadrature", reduction, 1e-6),
  };
}

std::vector<std::string> verify_suite_names() {
  return {"bc", "current", "maxwell", "gamma", "rarita", "tt", "vacuum"};
}

std::vector<Check> run_verify_suite(const std::string& name) {
  if (name == "bc") return verify_bc();
  if (name == "current") return verify_current();
  if (name == "maxwell") return verify_maxwell();
  if (name == "gamma") return verify_gamma();
  if (name == "rarita") return verify_rarita();
  if (name == "tt") return verify_tt();
  if (name == "vacuum") return verify_vacuum();
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace casimir
