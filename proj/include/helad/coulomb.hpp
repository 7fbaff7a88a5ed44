// Copyright 2026 The helium-ladder Authors
// SPDX-License-Identifier: Apache-2.0
//
// Hydrogenic orbitals, model coefficients, energy units, and the Coulomb
// matrix elements evaluated by quadrature.
//
// Lengths are measured in a = a0/Z with Z = 2 (so 1 e^2/a = 2 hartree
// exactly) and energies in e^2/a unless stated otherwise.

#pragma once

#include <stdexcept>
#include <string>

#include "helad/quadrature.hpp"

namespace helad {

enum class OrbitalKind { one_s, two_s };

// Radial amplitude u(r) of the normalized orbital, r in units of a.
// Normalization: int_0^inf 4 pi r^2 u(r)^2 dr = 1.  Throws
// std::invalid_argument for r < 0.
double orbital_amplitude(OrbitalKind kind, double r);

// One-particle level energy in e^2/a: -1 for 1s, -1/4 for 2s.
double orbital_level_energy(OrbitalKind kind);

// Couplings of the two-level model, all in e^2/a.
struct ModelCoefficients {
  double eps1 = 0.0;  // 1s level energy
  double eps2 = 0.0;  // 2s level energy
  double V1 = 0.0;    // 1s-1s interaction
  double V2 = 0.0;    // 2s-2s interaction
  double U = 0.0;     // 1s-2s direct interaction
  double Ubar = 0.0;  // 1s-2s exchange (pair-transfer) interaction
};

// Built-in coefficient set used throughout for the helium ground state.
constexpr ModelCoefficients builtin_coefficients() {
  return ModelCoefficients{-1.0, -0.25, -2.0, -0.5, 17.0 / 162.0, 8.0 / 729.0};
}

// Same set with every pair interaction counted in both orders.
constexpr ModelCoefficients doubled_interactions(ModelCoefficients c) {
  c.V1 *= 2.0;
  c.V2 *= 2.0;
  c.U *= 2.0;
  c.Ubar *= 2.0;
  return c;
}

// ---------------------------------------------------------------------------
// Energy units

enum class EnergyUnit { e2a, hartree, ev };

inline constexpr double kHartreePerE2a = 2.0;   // e^2/a = Z^2 e^2/a0, Z = 2
inline constexpr double kEvPerHartree = 27.211;

double convert_energy(double value, EnergyUnit from, EnergyUnit to);
const char* unit_name(EnergyUnit unit);
bool parse_unit(const std::string& text, EnergyUnit* out);

// ---------------------------------------------------------------------------
// Quadrature-based matrix elements

struct QuadratureSpec {
  int points = 400;      // outer/inner Gauss-Legendre points
  double r_max = 60.0;   // radial cutoff in units of a
  double rel_tol = 1e-6; // accepted relative error estimate
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |I(n) - I(n/2)|
};

// Raised when the half-resolution comparison exceeds spec.rel_tol.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error(achieved) {}
  double achieved_error;
};

// <aa|1/r12|bb>: repulsion of the |a|^2 and |b|^2 charge clouds.
QuadratureResult coulomb_direct(OrbitalKind a, OrbitalKind b,
                                const QuadratureSpec& spec = {});

// <ab|1/r12|ba>: repulsion of the overlap density a*b against itself.
QuadratureResult coulomb_exchange(OrbitalKind a, OrbitalKind b,
                                  const QuadratureSpec& spec = {});

// Coefficient set built from the literal orbital integrals: level energies
// -1 and -1/4, V1 = <11|11>, V2 = <22|22>, U = <12|12>, Ubar = <12|21>.
// Differs from builtin_coefficients() on purpose; see the integrals report.
struct LiteralCoefficientSet {
  ModelCoefficients values;
  QuadratureResult V1, V2, U, Ubar;
};

LiteralCoefficientSet quadrature_coefficients(const QuadratureSpec& spec = {});

}  // namespace helad
