// Copyright 2026 The helium-ladder Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense operator algebra on the 16-dimensional fermionic Fock space spanned
// by four spin-orbitals (two radial levels x two spin projections).  All
// operators are real 16x16 matrices in the occupation-number basis; the
// basis index is the occupation bitmask itself.

#pragma once

#include <array>
#include <cstdint>

namespace helad {

inline constexpr int kModeCount = 4;
inline constexpr int kFockDimension = 1 << kModeCount;

enum class Spin : std::uint8_t { up, down };

// One single-particle state: radial level 1 or 2, spin up or down.
struct SpinOrbital {
  int level;
  Spin spin;
};

// Fixed mode ordering: 1up -> 0, 1down -> 1, 2up -> 2, 2down -> 3.
// Throws std::invalid_argument unless level is 1 or 2.
int mode_index(SpinOrbital orbital);

// Inverse of mode_index.  Throws std::invalid_argument unless 0 <= mode < 4.
SpinOrbital orbital_from_mode(int mode);

// Occupation-number basis state: bit k set means mode k is occupied.  The
// canonical ket is the ordered product of creation operators with ascending
// mode index applied to the vacuum, which fixes every relative sign below.
struct FockState {
  std::uint32_t bits = 0;

  bool occupied(int mode) const { return (bits >> mode) & 1u; }
  int particle_number() const;
  int sz_twice() const;  // twice the total spin projection
};

// Real amplitudes over the 16 basis states, indexed by occupation bitmask.
struct StateVector {
  std::array<double, kFockDimension> amplitude{};

  static StateVector basis_state(FockState s);
  double norm() const;
  double max_abs() const;
};

double max_abs_diff(const StateVector& a, const StateVector& b);

// Dense real 16x16 matrix, row-major; entry(r, c) is the amplitude with
// which basis state c is sent to basis state r.
struct OperatorMatrix {
  std::array<double, kFockDimension * kFockDimension> entry{};

  double& operator()(int row, int col) {
    return entry[static_cast<std::size_t>(row) * kFockDimension + col];
  }
  double operator()(int row, int col) const {
    return entry[static_cast<std::size_t>(row) * kFockDimension + col];
  }

  static OperatorMatrix zero();
  static OperatorMatrix identity();

  OperatorMatrix transpose() const;
  double max_abs() const;
  bool is_finite() const;
};

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(double scale, const OperatorMatrix& a);

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);

// Parity handling for the ladder-operator matrices.  `none` drops the
// fermionic sign string and exists purely as a negative control: with it the
// canonical anticommutation relations must fail, which is how the identity
// checker demonstrates it can detect a broken convention.
enum class SignString { fermionic, none };

// Creation operator: maps a basis state with the mode empty to the state
// with it filled, carrying sign (-1)^(number of occupied lower modes).
OperatorMatrix creation_matrix(SpinOrbital orbital,
                               SignString signs = SignString::fermionic);

// Adjoint (transpose: everything is real) of the matching creation matrix.
OperatorMatrix annihilation_matrix(SpinOrbital orbital,
                                   SignString signs = SignString::fermionic);

// Diagonal occupation-number matrix n_k for one mode.
OperatorMatrix number_operator(SpinOrbital orbital);

OperatorMatrix total_number_operator();
OperatorMatrix total_sz_twice_operator();

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b);

// exp(A) by scaling-and-squaring over a truncated power series.  Elementwise
// absolute error is below 1e-12 for max-row-sum norms up to ~10.  Throws
// std::invalid_argument if A has non-finite entries.
OperatorMatrix operator_exponential(const OperatorMatrix& a);

StateVector apply(const OperatorMatrix& a, const StateVector& v);

}  // namespace helad
