// Copyright 2026 The helium-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "helad/coulomb.hpp"

#include <cmath>
#include <numbers>

namespace helad {

namespace {

constexpr double kPi = std::numbers::pi;

// Full radial density of one orbital: 4 pi r^2 u(r)^2.
double radial_density(OrbitalKind kind, double r) {
  const double u = orbital_amplitude(kind, r);
  return 4.0 * kPi * r * r * u * u;
}

// Full radial overlap density: 4 pi r^2 u_a(r) u_b(r).
double radial_overlap(OrbitalKind a, OrbitalKind b, double r) {
  return 4.0 * kPi * r * r * orbital_amplitude(a, r) * orbital_amplitude(b, r);
}

}  // namespace

double orbital_amplitude(OrbitalKind kind, double r) {
  if (r < 0.0) {
    throw std::invalid_argument("orbital_amplitude: negative radius");
  }
  switch (kind) {
    case OrbitalKind::one_s:
      return std::exp(-r) / std::sqrt(kPi);
    case OrbitalKind::two_s:
      return (1.0 - 0.5 * r) * std::exp(-0.5 * r) / (2.0 * std::sqrt(2.0 * kPi));
  }
  throw std::invalid_argument("orbital_amplitude: unknown orbital kind");
}

double orbital_level_energy(OrbitalKind kind) {
  return kind == OrbitalKind::one_s ? -1.0 : -0.25;
}

double convert_energy(double value, EnergyUnit from, EnergyUnit to) {
  double hartree = value;
  switch (from) {
    case EnergyUnit::e2a: hartree = value * kHartreePerE2a; break;
    case EnergyUnit::hartree: break;
    case EnergyUnit::ev: hartree = value / kEvPerHartree; break;
  }
  switch (to) {
    case EnergyUnit::e2a: return hartree / kHartreePerE2a;
    case EnergyUnit::hartree: return hartree;
    case EnergyUnit::ev: return hartree * kEvPerHartree;
  }
  return hartree;
}

const char* unit_name(EnergyUnit unit) {
  switch (unit) {
    case EnergyUnit::e2a: return "e2a";
    case EnergyUnit::hartree: return "hartree";
    case EnergyUnit::ev: return "ev";
  }
  return "e2a";
}

bool parse_unit(const std::string& text, EnergyUnit* out) {
  if (text == "e2a") { *out = EnergyUnit::e2a; return true; }
  if (text == "hartree") { *out = EnergyUnit::hartree; return true; }
  if (text == "ev") { *out = EnergyUnit::ev; return true; }
  return false;
}

namespace {

// Evaluates the repulsion integral at full and half resolution; the
// difference is the error estimate.
template <class F, class G>
QuadratureResult estimated_repulsion(const QuadratureSpec& spec,
                                     const std::string& label, F&& f, G&& g) {
  const int n = std::max(8, spec.points);
  const int half = std::max(8, n / 2);
  const GaussLegendreRule fine(n);
  const GaussLegendreRule coarse(half);

  QuadratureResult result;
  result.value = repulsion_integral(fine, spec.r_max, f, g);
  const double check = repulsion_integral(coarse, spec.r_max, f, g);
  result.error_estimate = std::abs(result.value - check);

  const double scale = std::max(std::abs(result.value), 1e-30);
  if (result.error_estimate > spec.rel_tol * scale) {
    throw QuadratureError(
        "quadrature for " + label + " did not converge: error estimate " +
            std::to_string(result.error_estimate) + " exceeds tolerance",
        result.error_estimate);
  }
  return result;
}

}  // namespace

QuadratureResult coulomb_direct(OrbitalKind a, OrbitalKind b,
                                const QuadratureSpec& spec) {
  return estimated_repulsion(
      spec, "direct matrix element",
      [a](double r) { return radial_density(a, r); },
      [b](double r) { return radial_density(b, r); });
}

QuadratureResult coulomb_exchange(OrbitalKind a, OrbitalKind b,
                                  const QuadratureSpec& spec) {
  return estimated_repulsion(
      spec, "exchange matrix element",
      [a, b](double r) { return radial_overlap(a, b, r); },
      [a, b](double r) { return radial_overlap(a, b, r); });
}

LiteralCoefficientSet quadrature_coefficients(const QuadratureSpec& spec) {
  LiteralCoefficientSet set;
  set.V1 = coulomb_direct(OrbitalKind::one_s, OrbitalKind::one_s, spec);
  set.V2 = coulomb_direct(OrbitalKind::two_s, OrbitalKind::two_s, spec);
  set.U = coulomb_direct(OrbitalKind::one_s, OrbitalKind::two_s, spec);
  set.Ubar = coulomb_exchange(OrbitalKind::one_s, OrbitalKind::two_s, spec);
  set.values = ModelCoefficients{orbital_level_energy(OrbitalKind::one_s),
                                 orbital_level_energy(OrbitalKind::two_s),
                                 set.V1.value, set.V2.value, set.U.value,
                                 set.Ubar.value};
  return set;
}

}  // namespace helad
