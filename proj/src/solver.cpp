// Copyright 2026 The helium-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "helad/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace helad {

namespace {

// Eigenvalues of a small dense symmetric matrix by cyclic Jacobi sweeps.
template <int N>
std::array<double, N> jacobi_eigenvalues(std::array<std::array<double, N>, N> a) {
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < N; ++p) {
      for (int q = p + 1; q < N; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-30) break;
    for (int p = 0; p < N; ++p) {
      for (int q = p + 1; q < N; ++q) {
        if (a[p][q] == 0.0) continue;
        const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cos = 1.0 / std::sqrt(1.0 + t * t);
        const double sin = t * cos;
        for (int k = 0; k < N; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = cos * akp - sin * akq;
          a[k][q] = sin * akp + cos * akq;
        }
        for (int k = 0; k < N; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = cos * apk - sin * aqk;
          a[q][k] = sin * apk + cos * aqk;
        }
      }
    }
  }
  std::array<double, N> values{};
  for (int i = 0; i < N; ++i) values[i] = a[i][i];
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

double energy_quadratic(const ModelCoefficients& c, double eta) {
  const double constant = 2.0 * c.eps1 + 2.0 * c.V1;
  const double linear = -2.0 * c.eps1 + 2.0 * c.eps2 - 4.0 * c.V1 + 4.0 * c.U;
  const double quadratic = 2.0 * (c.V1 + c.V2 - 2.0 * c.U);
  return constant + linear * eta + quadratic * eta * eta;
}

StationaryPoint stationary_eta(const ModelCoefficients& c) {
  StationaryPoint p;
  const double linear = -2.0 * c.eps1 + 2.0 * c.eps2 - 4.0 * c.V1 + 4.0 * c.U;
  const double quadratic = 2.0 * (c.V1 + c.V2 - 2.0 * c.U);

  if (std::abs(quadratic) < 1e-12) {
    p.linear_model = true;
    p.curvature_sign = 0;
    p.unclamped_eta = std::numeric_limits<double>::quiet_NaN();
    p.eta = (linear < 0.0) ? 1.0 : 0.0;  // pick the lower-energy endpoint
    return p;
  }

  p.curvature_sign = quadratic > 0.0 ? 1 : -1;
  p.unclamped_eta = (2.0 * c.eps1 - 2.0 * c.eps2 + 4.0 * c.V1 - 4.0 * c.U) /
                    (4.0 * (c.V1 + c.V2 - 2.0 * c.U));
  p.eta = std::clamp(p.unclamped_eta, 0.0, 1.0);
  p.boundary_clamped = (p.eta != p.unclamped_eta);
  return p;
}

StateVector ground_state_vector(const ModelCoefficients& c, double eta) {
  const LadderData d = ladder_data(c, eta);
  const OperatorMatrix psi = build_psi_tilde();
  const OperatorMatrix generator = psi.transpose() - psi;
  const OperatorMatrix rotation = operator_exponential(-d.theta * generator);
  return apply(rotation, StateVector::basis_state(FockState{kPairLower}));
}

GroundEnergy ground_energy(const ModelCoefficients& c, double eta) {
  const LadderData d = ladder_data(c, eta);
  GroundEnergy e;
  e.quadratic = energy_quadratic(c, eta);
  e.full = e.quadratic - c.Ubar * (d.Lambda_plus + d.Lambda_minus);
  return e;
}

double residual_norm(const ModelCoefficients& c, double eta) {
  const LadderData d = ladder_data(c, eta);
  const StateVector g = ground_state_vector(c, eta);
  const OperatorMatrix shifted =
      build_psi_tilde() + d.Lambda_minus * OperatorMatrix::identity();
  return apply(shifted, g).norm();
}

std::array<double, 4> exact_sector_spectrum(const ModelCoefficients& c) {
  const OperatorMatrix h = build_hamiltonian(c);
  const std::array<int, 4> sector = {static_cast<int>(kPairLower),
                                     static_cast<int>(kBrokenUp),
                                     static_cast<int>(kBrokenDown),
                                     static_cast<int>(kPairUpper)};
  std::array<std::array<double, 4>, 4> block{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) block[i][j] = h(sector[i], sector[j]);
  }
  return jacobi_eigenvalues<4>(block);
}

RadialDensityProfile density_profile(const ModelCoefficients& c, double eta,
                                     const std::vector<double>& radii) {
  if (radii.size() < 2) {
    throw std::invalid_argument("density_profile: need at least 2 grid points");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 0.0 || (i > 0 && radii[i] <= radii[i - 1])) {
      throw std::invalid_argument(
          "density_profile: grid must be nonnegative and strictly increasing");
    }
  }

  const LadderData d = ladder_data(c, eta);
  const double cos2 = std::cos(d.theta) * std::cos(d.theta);
  const double sin2 = std::sin(d.theta) * std::sin(d.theta);

  RadialDensityProfile profile;
  profile.radius = radii;
  profile.density.resize(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double u1 = orbital_amplitude(OrbitalKind::one_s, radii[i]);
    const double u2 = orbital_amplitude(OrbitalKind::two_s, radii[i]);
    profile.density[i] = 2.0 * cos2 * u1 * u1 + 2.0 * sin2 * u2 * u2;
  }

  // Trapezoidal normalization check: int 4 pi r^2 rho(r) dr.
  double integral = 0.0;
  for (std::size_t i = 1; i < radii.size(); ++i) {
    const double fa = 4.0 * std::numbers::pi * radii[i - 1] * radii[i - 1] *
                      profile.density[i - 1];
    const double fb =
        4.0 * std::numbers::pi * radii[i] * radii[i] * profile.density[i];
    integral += 0.5 * (radii[i] - radii[i - 1]) * (fa + fb);
  }
  profile.integral = integral;
  return profile;
}

std::vector<double> uniform_grid(double r_max, int points) {
  if (points < 2 || r_max <= 0.0) {
    throw std::invalid_argument("uniform_grid: need r_max > 0 and points >= 2");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = r_max * i / (points - 1);
  }
  return grid;
}

GroundStateReport solve(const ModelCoefficients& c,
                        std::optional<double> eta_override) {
  GroundStateReport r;
  r.coefficients = c;
  r.stationary = stationary_eta(c);
  r.eta_overridden = eta_override.has_value();
  r.eta = eta_override.value_or(r.stationary.eta);

  r.ladder = ladder_data(c, r.eta);
  const GroundEnergy e = ground_energy(c, r.eta);
  r.energy_quadratic_e2a = e.quadratic;
  r.lambda_term_e2a = e.full - e.quadratic;
  r.energy_e2a = e.full;
  r.energy_hartree = convert_energy(e.full, EnergyUnit::e2a, EnergyUnit::hartree);
  r.energy_ev = convert_energy(e.full, EnergyUnit::e2a, EnergyUnit::ev);

  r.state = ground_state_vector(c, r.eta);
  r.residual = residual_norm(c, r.eta);

  const OperatorMatrix h = build_hamiltonian(c);
  const StateVector hg = apply(h, r.state);
  double expectation = 0.0;
  for (int i = 0; i < kFockDimension; ++i) {
    expectation += r.state.amplitude[i] * hg.amplitude[i];
  }
  r.exact_expectation_e2a = expectation;
  r.sector_spectrum_e2a = exact_sector_spectrum(c);

  auto delta = [&r](const ReferenceEnergy& ref) {
    ReferenceDelta d;
    d.reference_hartree = ref.hartree;
    d.relative_error =
        std::abs(r.energy_hartree - ref.hartree) / std::abs(ref.hartree);
    return d;
  };
  r.vs_variational = delta(kVariationalReference);
  r.vs_experiment = delta(kExperimentReference);
  r.vs_hartree_fock = delta(kHartreeFockReference);
  return r;
}

}  // namespace helad
