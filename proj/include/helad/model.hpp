// Copyright 2026 The helium-ladder Authors
// SPDX-License-Identifier: Apache-2.0
//
// The two-level pairing model: composite pair operators, the Hamiltonian,
// the exact operator-identity suite, and the mean-field ladder scalars.

#pragma once

#include <string>
#include <vector>

#include "helad/coulomb.hpp"
#include "helad/fock.hpp"

namespace helad {

// Distinguished basis states.
inline constexpr std::uint32_t kPairLower = 0b0011;   // both electrons in 1s
inline constexpr std::uint32_t kPairUpper = 0b1100;   // both electrons in 2s
inline constexpr std::uint32_t kBrokenUp = 0b1001;    // 1up, 2down
inline constexpr std::uint32_t kBrokenDown = 0b0110;  // 1down, 2up

// Pair-transfer operator psi = c1up+ c1down+ c2down c2up: moves the doubly
// occupied 2s pair into the 1s level, psi |upper pair> = |lower pair>; its
// adjoint raises the 1s pair into 2s.  Each has a single +1 entry.
OperatorMatrix build_psi_tilde();

// Spin-flip pair partner between the broken-pair states:
// phi_tilde = c1up+ c2down+ c2up c1down maps |1down 2up> to |1up 2down>.
OperatorMatrix build_phi_tilde();

// Two-level Hamiltonian with each pair interaction counted once:
//   H = eps1 N1 + eps2 N2 + V1 n1u n1d + V2 n2u n2d
//       + U (n1u n2d + n1d n2u) + Ubar (psi+ + psi - phi+ - phi).
// To count every pair interaction in both orders instead, pass
// doubled_interactions(c).
OperatorMatrix build_hamiltonian(const ModelCoefficients& c);

// Diagonal occupation polynomial appearing as the exchange inhomogeneity in
// the Hamiltonian commutators:
//   W = n1u n1d (1 - n2u - n2d) - n2u n2d (1 - n1u - n1d).
OperatorMatrix exchange_inhomogeneity();

// Diagonal brackets multiplying psi+ / psi in the exact commutators
//   [H, psi+] = raising_commutator_factor(c) psi+ + Ubar W
//   [H, psi]  = lowering_commutator_factor(c) psi  - Ubar W
// for the single-counted Hamiltonian of build_hamiltonian(c).
OperatorMatrix raising_commutator_factor(const ModelCoefficients& c);
OperatorMatrix lowering_commutator_factor(const ModelCoefficients& c);

// ---------------------------------------------------------------------------
// Identity suite

struct IdentityCheck {
  std::string name;
  double deviation;  // max absolute elementwise deviation; exact zero expected
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  double max_deviation() const;
  bool all_exact() const;  // every deviation == 0.0
};

// Verifies the canonical anticommutation relations and the full catalogue of
// composite-operator identities by dense matrix algebra.  Every deviation is
// exactly 0.0 in floating point: all operator entries are integers and the
// coefficient combinations cancel termwise.  Passing SignString::none builds
// the ladder matrices without the fermionic parity string, which must break
// the suite (negative control).
IdentityReport verify_identity_suite(const ModelCoefficients& c = builtin_coefficients(),
                                     SignString signs = SignString::fermionic);

// ---------------------------------------------------------------------------
// Mean-field ladder scalars
//
// Replacing the number operators in the commutator brackets by their
// expectation values in the pair-occupation state with filling eta of the
// upper level turns the operator ladder into scalar recursions with the
// quantities below.

struct LadderData {
  double eta = 0.0;
  double K = 0.0;             // (1 - 2 eta)(1 - 2 eta + 2 eta^2)
  double D_plus = 0.0;        // raising denominator
  double D_minus = 0.0;       // lowering denominator
  double Lambda_plus = 0.0;   //  -K Ubar / D_plus
  double Lambda_minus = 0.0;  //   K Ubar / D_minus
  double theta = 0.0;         // pair-rotation angle Ubar / D_minus
};

// Thrown when a ladder denominator vanishes while Ubar != 0.
class DegenerateModel : public std::runtime_error {
 public:
  DegenerateModel(const std::string& quantity_in, double eta_in)
      : std::runtime_error("degenerate ladder denominator " + quantity_in +
                           " at eta = " + std::to_string(eta_in)),
        quantity(quantity_in),
        eta(eta_in) {}
  std::string quantity;
  double eta;
};

// Computes the ladder scalars at filling eta.  If Ubar == 0 the ladder
// decouples (theta = Lambda = 0) and degenerate denominators are harmless;
// otherwise |D_minus| or |D_plus| below 1e-10 throws DegenerateModel.
LadderData ladder_data(const ModelCoefficients& c, double eta);

// Scalar mean-field commutators: [H, psi+] ~ raising_multiplier psi+ + ...,
// with the inhomogeneity 2 Ubar K.  Defined for every eta.
struct MeanFieldCommutators {
  double raising_multiplier = 0.0;   // 2 D_plus
  double lowering_multiplier = 0.0;  // 2 D_minus
  double inhomogeneity = 0.0;        // 2 Ubar K
};

MeanFieldCommutators mean_field_commutators(const ModelCoefficients& c, double eta);

// Energy cost of moving one pair up / down at filling eta.
struct StepEnergies {
  double raising = 0.0;
  double lowering = 0.0;
};

StepEnergies step_energies(const ModelCoefficients& c, double eta);

// Scalar coefficient of the mean-field commutator [H, phi]; the full
// operator commutator is not proportional to phi, this is its mean-field
// projection only.
double phi_commutator_coefficient(const ModelCoefficients& c, double eta);

}  // namespace helad
