// Copyright 2026 The helium-ladder Authors
// SPDX-License-Identifier: Apache-2.0
//
// Mean-field ground-state solver: the quadratic energy functional in the
// pair-transfer filling eta, its stationary point, the rotated ground-state
// vector, diagnostics, and the exact spectrum of the paired two-particle
// sector for comparison.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "helad/coulomb.hpp"
#include "helad/fock.hpp"
#include "helad/model.hpp"

namespace helad {

// Mean-field energy without the ladder correction, in e^2/a:
//   E(eta) = 2 eps1 + 2 V1 + (-2 eps1 + 2 eps2 - 4 V1 + 4 U) eta
//            + 2 (V1 + V2 - 2 U) eta^2.
double energy_quadratic(const ModelCoefficients& c, double eta);

struct StationaryPoint {
  double eta = 0.0;           // stationary filling, clamped to [0, 1]
  double unclamped_eta = 0.0; // the raw root (NaN when linear_model)
  bool boundary_clamped = false;
  bool linear_model = false;  // quadratic coefficient ~ 0: endpoint minimum
  int curvature_sign = 0;     // sign of d^2E/deta^2 (0 when linear_model)
};

// Stationary point of the quadratic functional.  When the quadratic
// coefficient vanishes (|V1 + V2 - 2U| < 1e-12) the energy is linear in eta
// and the favourable endpoint is returned with linear_model set; a root
// outside [0, 1] is clamped with boundary_clamped set.
StationaryPoint stationary_eta(const ModelCoefficients& c);

// Ground-state vector exp(-theta (psi+ - psi)) |1s pair>, evaluated through
// the dense operator exponential.  Only the two pair amplitudes are nonzero.
StateVector ground_state_vector(const ModelCoefficients& c, double eta);

struct GroundEnergy {
  double full = 0.0;       // with the ladder (pair-exchange) correction
  double quadratic = 0.0;  // mean-field functional alone
};

// full = quadratic - Ubar (Lambda_plus + Lambda_minus); the correction term
// vanishes at an interior stationary point.
GroundEnergy ground_energy(const ModelCoefficients& c, double eta);

// Norm of (psi + Lambda_minus) applied to the ground-state vector; measures
// how far the state is from an exact eigenvector of the lowering ladder.
double residual_norm(const ModelCoefficients& c, double eta);

// Eigenvalues (ascending, e^2/a) of the Hamiltonian restricted to the
// two-particle sector spanned by the pair and broken-pair states
// {|1s pair>, |1up 2down>, |1down 2up>, |2s pair>}.
std::array<double, 4> exact_sector_spectrum(const ModelCoefficients& c);

// Published ground-state energies used as yardsticks, in hartree.
struct ReferenceEnergy {
  double hartree;
  const char* label;
};

inline constexpr ReferenceEnergy kVariationalReference{-2.90372,
                                                       "variational benchmark"};
inline constexpr ReferenceEnergy kExperimentReference{-2.9034, "experiment"};
inline constexpr ReferenceEnergy kHartreeFockReference{-2.8617,
                                                       "Hartree-Fock limit"};

struct ReferenceDelta {
  double reference_hartree = 0.0;
  double relative_error = 0.0;  // |E - ref| / |ref|
};

// Radial one-particle density of the rotated pair state on a grid:
//   rho(r) = 2 cos^2(theta) u1s(r)^2 + 2 sin^2(theta) u2s(r)^2,
// plus its trapezoidal normalization integral int 4 pi r^2 rho dr (= 2 for
// an adequate grid).  The grid must be nonnegative and strictly increasing.
struct RadialDensityProfile {
  std::vector<double> radius;
  std::vector<double> density;
  double integral = 0.0;
};

RadialDensityProfile density_profile(const ModelCoefficients& c, double eta,
                                     const std::vector<double>& radii);

// Uniform grid over [0, r_max] with the given number of points (>= 2).
std::vector<double> uniform_grid(double r_max, int points);

// Everything the solve command reports.
struct GroundStateReport {
  ModelCoefficients coefficients;
  StationaryPoint stationary;
  double eta = 0.0;  // filling actually used
  bool eta_overridden = false;
  LadderData ladder;
  double energy_e2a = 0.0;  // full ground energy
  double energy_hartree = 0.0;
  double energy_ev = 0.0;
  double energy_quadratic_e2a = 0.0;
  double lambda_term_e2a = 0.0;  // -Ubar (Lambda_plus + Lambda_minus)
  StateVector state;
  double residual = 0.0;
  double exact_expectation_e2a = 0.0;  // <g|H|g> with the dense Hamiltonian
  std::array<double, 4> sector_spectrum_e2a{};
  ReferenceDelta vs_variational, vs_experiment, vs_hartree_fock;
};

// Full solve at the stationary filling (or an explicit override).  Throws
// DegenerateModel if the ladder denominators vanish at the chosen eta with
// Ubar != 0.
GroundStateReport solve(const ModelCoefficients& c,
                        std::optional<double> eta_override = std::nullopt);

}  // namespace helad
