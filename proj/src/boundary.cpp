#include "casimir/boundary.hpp"

#include <cmath>
#include <random>

namespace casimir {

namespace {

constexpr cplx I{0.0, 1.0};

std::vector<Vec4> on_plate_samples(PlateSide side, const PlateGeometry& g, double omega,
                                   int n_points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double period = omega > 0.0 ? 2.0 * M_PI / omega : 1.0;
  std::vector<Vec4> xs;
  xs.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    Vec4 x;
    x << unit(rng) * period, coord(rng) * g.separation, coord(rng) * g.separation,
        g.plate_coordinate(side);
    xs.push_back(x);
  }
  return xs;
}

}  // namespace

SpinTensor bc_map(PlateSide side, const SpinTensor& t) {
  if (t.var != Variance::upper_unbarred)
    throw std::invalid_argument("bc_map expects an upper unbarred tensor");
  const double sign = (side == PlateSide::origin) ? 1.0 : -1.0;
  const Mat2 refl = sign * pauli_unit(3);
  return apply_per_index(t, refl, Variance::lower_barred);
}

double bc_residual(PlateSide side, const ModeSolution& mode, const Vec4& x, const PlateGeometry& g) {
  const double z = g.plate_coordinate(side);
  if (std::abs(x[3] - z) > 1e-12 * std::max(1.0, g.separation))
    throw std::invalid_argument("point does not lie on the selected plate");
  const SpinTensor lhs = bc_map(side, mode.evaluate(x));
  const SpinTensor rhs = conjugate_partner(mode).evaluate(x);
  return (lhs - rhs).max_abs();
}

double bc_residual_sampled(PlateSide side, const ModeSolution& mode, const PlateGeometry& g,
                           int n_points, std::uint64_t seed) {
  double worst = 0.0;
  for (const auto& x : on_plate_samples(side, g, mode.omega, n_points, seed))
    worst = std::max(worst, bc_residual(side, mode, x, g));
  return worst;
}

double quantization_value(int m, double d, double k3) {
  if (m < 1) throw std::invalid_argument("rank must be >= 1");
  if (!(d > 0.0)) throw std::invalid_argument("separation must be positive");
  return (m % 2) ? std::cos(k3 * d) : std::sin(k3 * d);
}

SpectrumEntry allowed_k3(int m, double d, int n) {
  if (!(d > 0.0)) throw std::invalid_argument("separation must be positive");
  const Statistics stat = statistics_for_rank(m);
  if (stat == Statistics::fermionic) {
    if (n < 1 || n % 2 == 0)
      throw parity_error(
          "fermionic spectra admit odd n only; periodic boundary conditions "
          "cannot be applied to a fermionic field between the plates");
    return {n, n * M_PI / (2.0 * d), stat};
  }
  if (n < 0) throw std::invalid_argument("bosonic spectra need n >= 0");
  return {n, n * M_PI / d, stat};
}

Vec4 spin_current(const SpinTensor& t) {
  if (t.var != Variance::upper_unbarred)
    throw std::invalid_argument("spin_current expects an upper unbarred tensor");
  const int m = t.rank;
  const double norm = std::pow(0.5, m);
  Vec4 j = Vec4::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    const Mat2& s = pauli_unit(mu);
    cplx acc = 0.0;
    for (int abar = 0; abar < 2; ++abar)
      for (int a = 0; a < 2; ++a) {
        if (s(abar, a) == cplx(0.0)) continue;
        cplx inner = 0.0;
        for (int r = 0; r <= m - 1; ++r)
          inner += binomial(m - 1, r) * t.c[a + r] * std::conj(t.c[abar + r]);
        acc += s(abar, a) * inner;
      }
    j[mu] = norm * acc.real();
  }
  return j;
}

double normal_current_check(PlateSide side, const ModeSolution& mode, const PlateGeometry& g,
                            int n_points, std::uint64_t seed) {
  const FourVector n_up = g.outward_normal(side);
  const FourVector n_lo = lower_index(n_up);
  double worst = 0.0;
  for (const auto& x : on_plate_samples(side, g, mode.omega, n_points, seed)) {
    const Vec4 j = spin_current(mode.evaluate(x));
    cplx ndotj = 0.0;
    for (int mu = 0; mu < 4; ++mu) ndotj += n_lo[mu] * j[mu];
    worst = std::max(worst, std::abs(ndotj));
  }
  return worst;
}

double continuity_residual(const ModeSolution& mode) {
  if (mode.terms.size() != 1)
    throw std::invalid_argument("continuity_residual expects a single plane-wave mode");
  const SpinTensor& t = mode.terms.front().coeff;
  const Vec3& k = mode.terms.front().k;
  const FourVector kup{cplx(mode.omega), cplx(k.x()), cplx(k.y()), cplx(k.z())};
  const FourVector klo = lower_index(kup);
  const int m = t.rank;
  const double norm = std::pow(0.5, m);

  // d_mu j^mu = (-i k_mu) B^mu(T, T-bar) + (+i k_mu) conj(B^mu(T, T-bar));
  // evaluate the complex bilinear without assuming its reality.
  cplx div = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const Mat2& s = pauli_unit(mu);
    cplx bmu = 0.0;
    for (int abar = 0; abar < 2; ++abar)
      for (int a = 0; a < 2; ++a) {
        if (s(abar, a) == cplx(0.0)) continue;
        cplx inner = 0.0;
        for (int r = 0; r <= m - 1; ++r)
          inner += binomial(m - 1, r) * t.c[a + r] * std::conj(t.c[abar + r]);
        bmu += s(abar, a) * inner;
      }
    bmu *= norm;
    div += -I * klo[mu] * bmu + I * klo[mu] * std::conj(bmu);
  }
  return std::abs(div);
}

}  // namespace casimir
