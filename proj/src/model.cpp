// Copyright 2026 The helium-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "helad/model.hpp"

#include <algorithm>
#include <cmath>

namespace helad {

namespace {

// Ladder matrices for all four modes under one sign convention.  The
// composite operators and the Hamiltonian are assembled from these so a
// corrupted convention propagates everywhere (negative control).
struct OperatorSet {
  std::array<OperatorMatrix, kModeCount> cr;  // creation
  std::array<OperatorMatrix, kModeCount> an;  // annihilation
  std::array<OperatorMatrix, kModeCount> nn;  // occupation

  explicit OperatorSet(SignString signs) {
    for (int k = 0; k < kModeCount; ++k) {
      cr[k] = creation_matrix(orbital_from_mode(k), signs);
      an[k] = cr[k].transpose();
      nn[k] = cr[k] * an[k];
    }
  }

  // psi = c1up+ c1down+ c2down c2up (rightmost factor acts first).
  OperatorMatrix psi() const { return cr[0] * cr[1] * an[3] * an[2]; }

  // phi = c1up+ c2down+ c2up c1down.
  OperatorMatrix phi() const { return cr[0] * cr[3] * an[2] * an[1]; }

  OperatorMatrix hamiltonian(const ModelCoefficients& c) const {
    const OperatorMatrix p = psi();
    const OperatorMatrix f = phi();
    return c.eps1 * (nn[0] + nn[1]) + c.eps2 * (nn[2] + nn[3]) +
           c.V1 * (nn[0] * nn[1]) + c.V2 * (nn[2] * nn[3]) +
           c.U * (nn[0] * nn[3] + nn[1] * nn[2]) +
           c.Ubar * (p.transpose() + p - f.transpose() - f);
  }
};

// Per-basis-state occupations of the two levels.
int level1_count(int s) { return (s & 1) + ((s >> 1) & 1); }
int level2_count(int s) { return ((s >> 2) & 1) + ((s >> 3) & 1); }

}  // namespace

OperatorMatrix build_psi_tilde() { return OperatorSet(SignString::fermionic).psi(); }

OperatorMatrix build_phi_tilde() { return OperatorSet(SignString::fermionic).phi(); }

OperatorMatrix build_hamiltonian(const ModelCoefficients& c) {
  return OperatorSet(SignString::fermionic).hamiltonian(c);
}

OperatorMatrix exchange_inhomogeneity() {
  OperatorMatrix m;
  for (int s = 0; s < kFockDimension; ++s) {
    const int pair1 = (s & 0b0011) == 0b0011;
    const int pair2 = (s & 0b1100) == 0b1100;
    m(s, s) = pair1 * (1 - level2_count(s)) - pair2 * (1 - level1_count(s));
  }
  return m;
}

OperatorMatrix raising_commutator_factor(const ModelCoefficients& c) {
  OperatorMatrix m;
  for (int s = 0; s < kFockDimension; ++s) {
    const int n1 = level1_count(s);
    const int n2 = level2_count(s);
    m(s, s) = 2.0 * (-c.eps1 + c.eps2) - c.V1 * (n1 + 1) + c.V2 * (n2 - 1) +
              c.U * (n1 - n2 + 2);
  }
  return m;
}

OperatorMatrix lowering_commutator_factor(const ModelCoefficients& c) {
  OperatorMatrix m;
  for (int s = 0; s < kFockDimension; ++s) {
    const int n1 = level1_count(s);
    const int n2 = level2_count(s);
    m(s, s) = 2.0 * (c.eps1 - c.eps2) + c.V1 * (n1 - 1) - c.V2 * (n2 + 1) -
              c.U * (n1 - n2 - 2);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Identity suite

double IdentityReport::max_deviation() const {
  double m = 0.0;
  for (const auto& check : checks) m = std::max(m, check.deviation);
  return m;
}

bool IdentityReport::all_exact() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.deviation == 0.0; });
}

IdentityReport verify_identity_suite(const ModelCoefficients& c, SignString signs) {
  const OperatorSet ops(signs);
  const OperatorMatrix I = OperatorMatrix::identity();
  const OperatorMatrix psi = ops.psi();
  const OperatorMatrix psid = psi.transpose();
  const OperatorMatrix phi = ops.phi();
  const OperatorMatrix phid = phi.transpose();
  const auto& nn = ops.nn;

  IdentityReport report;
  auto add = [&report](std::string name, double dev) {
    report.checks.push_back(IdentityCheck{std::move(name), dev});
  };

  // Canonical anticommutation relations.
  double dev_same = 0.0;
  double dev_mixed = 0.0;
  double dev_nilpotent = 0.0;
  for (int k = 0; k < kModeCount; ++k) {
    for (int l = 0; l < kModeCount; ++l) {
      dev_same = std::max(dev_same, anticommutator(ops.an[k], ops.an[l]).max_abs());
      dev_same = std::max(dev_same, anticommutator(ops.cr[k], ops.cr[l]).max_abs());
      const OperatorMatrix target = (k == l) ? I : OperatorMatrix::zero();
      dev_mixed = std::max(
          dev_mixed, max_abs_diff(anticommutator(ops.an[k], ops.cr[l]), target));
    }
    dev_nilpotent = std::max(dev_nilpotent, (ops.cr[k] * ops.cr[k]).max_abs());
  }
  add("{c_k, c_l} = 0 and adjoints, all mode pairs", dev_same);
  add("{c_k, c_l+} = delta_kl, all mode pairs", dev_mixed);
  add("c_k+ c_k+ = 0 (no double occupation)", dev_nilpotent);

  // Pair-operator commutators close on occupation polynomials.
  const OperatorMatrix w_psi = nn[0] * nn[1] * (I - nn[2] - nn[3]) -
                               nn[2] * nn[3] * (I - nn[0] - nn[1]);
  add("[psi, psi+] = occupation polynomial",
      max_abs_diff(commutator(psi, psid), w_psi));

  const OperatorMatrix w_phi = nn[0] * nn[3] * (I - nn[1] - nn[2]) -
                               nn[1] * nn[2] * (I - nn[0] - nn[3]);
  add("[phi, phi+] = occupation polynomial",
      max_abs_diff(commutator(phi, phid), w_phi));

  // Single-mode shifts of psi+.
  double dev_shift = 0.0;
  for (int k = 0; k < kModeCount; ++k) {
    const double sign = (k < 2) ? -1.0 : 1.0;
    dev_shift = std::max(dev_shift,
                         max_abs_diff(commutator(nn[k], psid), sign * psid));
  }
  add("[n_k, psi+] = -/+ psi+ by level", dev_shift);

  // Occupation-pair commutators, checked in both factor orderings.
  {
    const OperatorMatrix lhs = commutator(nn[0] * nn[1], psid);
    const double dev =
        std::max(max_abs_diff(lhs, -1.0 * (psid * (nn[0] + nn[1] - I))),
                 max_abs_diff(lhs, -1.0 * ((nn[0] + nn[1] + I) * psid)));
    add("[n1u n1d, psi+], both factor orderings", dev);
  }
  {
    const OperatorMatrix lhs = commutator(nn[2] * nn[3], psid);
    const double dev = std::max(max_abs_diff(lhs, psid * (nn[2] + nn[3] + I)),
                                max_abs_diff(lhs, (nn[2] + nn[3] - I) * psid));
    add("[n2u n2d, psi+], both factor orderings", dev);
  }
  const struct { int a, b; const char* name; } cross[] = {
      {0, 2, "[n1u n2u, psi+], both factor orderings"},
      {1, 3, "[n1d n2d, psi+], both factor orderings"},
      {0, 3, "[n1u n2d, psi+], both factor orderings"},
      {1, 2, "[n1d n2u, psi+], both factor orderings"},
  };
  for (const auto& row : cross) {
    const OperatorMatrix lhs = commutator(nn[row.a] * nn[row.b], psid);
    const double dev =
        std::max(max_abs_diff(lhs, psid * (nn[row.a] - nn[row.b] - I)),
                 max_abs_diff(lhs, (nn[row.a] - nn[row.b] + I) * psid));
    add(row.name, dev);
  }

  // The two pair operators commute in every combination.
  double dev_cross = std::max(
      {commutator(phi, psi).max_abs(), commutator(phi, psid).max_abs(),
       commutator(phid, psi).max_abs(), commutator(phid, psid).max_abs()});
  add("[phi(+), psi(+)] = 0, all combinations", dev_cross);

  // Single-mode shifts of phi.
  double dev_phi_shift = 0.0;
  for (int k = 0; k < kModeCount; ++k) {
    const double sign = (k == 0 || k == 3) ? 1.0 : -1.0;
    dev_phi_shift = std::max(dev_phi_shift,
                             max_abs_diff(commutator(nn[k], phi), sign * phi));
  }
  add("[n_k, phi] = +/- phi by mode", dev_phi_shift);

  // Hamiltonian commutators: exact occupation form for the single-counted
  // Hamiltonian, and the doubled form when every pair interaction is
  // counted in both orders.
  const OperatorMatrix w = exchange_inhomogeneity();
  {
    const OperatorMatrix h = ops.hamiltonian(c);
    add("[H, psi+] occupation form, pairs counted once",
        max_abs_diff(commutator(h, psid),
                     raising_commutator_factor(c) * psid + c.Ubar * w));
    add("[H, psi] occupation form, pairs counted once",
        max_abs_diff(commutator(h, psi),
                     lowering_commutator_factor(c) * psi - c.Ubar * w));
    const double dev_conserved = std::max(
        commutator(h, total_number_operator()).max_abs(),
        commutator(h, total_sz_twice_operator()).max_abs());
    add("[H, N] = 0 and [H, 2Sz] = 0", dev_conserved);
  }
  {
    const ModelCoefficients c2 = doubled_interactions(c);
    const OperatorMatrix h2 = ops.hamiltonian(c2);
    add("[H, psi+] occupation form, pairs counted twice",
        max_abs_diff(commutator(h2, psid),
                     raising_commutator_factor(c2) * psid + c2.Ubar * w));
    add("[H, psi] occupation form, pairs counted twice",
        max_abs_diff(commutator(h2, psi),
                     lowering_commutator_factor(c2) * psi - c2.Ubar * w));
  }

  return report;
}

// ---------------------------------------------------------------------------
// Mean-field ladder scalars

LadderData ladder_data(const ModelCoefficients& c, double eta) {
  LadderData d;
  d.eta = eta;
  d.K = (1.0 - 2.0 * eta) * (1.0 - 2.0 * eta + 2.0 * eta * eta);
  d.D_minus = c.eps1 - c.eps2 + c.V1 * (1.0 - 2.0 * eta) -
              c.V2 * (1.0 + 2.0 * eta) + 4.0 * c.U * eta;
  d.D_plus = -c.eps1 + c.eps2 - c.V1 * (3.0 - 2.0 * eta) -
             c.V2 * (1.0 - 2.0 * eta) + 4.0 * c.U * (1.0 - eta);
  if (c.Ubar == 0.0) {
    // Ladder decouples; the denominators never divide anything.
    return d;
  }
  if (std::abs(d.D_minus) < 1e-10) throw DegenerateModel("D_minus", eta);
  if (std::abs(d.D_plus) < 1e-10) throw DegenerateModel("D_plus", eta);
  d.Lambda_minus = c.Ubar * d.K / d.D_minus;
  d.Lambda_plus = -c.Ubar * d.K / d.D_plus;
  d.theta = c.Ubar / d.D_minus;
  return d;
}

MeanFieldCommutators mean_field_commutators(const ModelCoefficients& c, double eta) {
  MeanFieldCommutators m;
  const double k = (1.0 - 2.0 * eta) * (1.0 - 2.0 * eta + 2.0 * eta * eta);
  m.raising_multiplier = 2.0 * (-c.eps1 + c.eps2 - c.V1 * (3.0 - 2.0 * eta) -
                                c.V2 * (1.0 - 2.0 * eta) + 4.0 * c.U * (1.0 - eta));
  m.lowering_multiplier = 2.0 * (c.eps1 - c.eps2 + c.V1 * (1.0 - 2.0 * eta) -
                                 c.V2 * (1.0 + 2.0 * eta) + 4.0 * c.U * eta);
  m.inhomogeneity = 2.0 * c.Ubar * k;
  return m;
}

StepEnergies step_energies(const ModelCoefficients& c, double eta) {
  StepEnergies s;
  s.raising = 2.0 * (-c.eps1 + c.eps2 - c.V1 * (3.0 - 2.0 * eta) -
                     c.V2 * (1.0 - 2.0 * eta) + 4.0 * c.U * (1.0 - eta));
  s.lowering = 2.0 * (c.eps1 - c.eps2 + c.V1 * (1.0 - 2.0 * eta) -
                      c.V2 * (1.0 + 2.0 * eta) - 4.0 * c.U * eta);
  return s;
}

double phi_commutator_coefficient(const ModelCoefficients& c, double eta) {
  return c.V1 - c.V2 + 2.0 * c.U * (1.0 - eta);
}

}  // namespace helad
