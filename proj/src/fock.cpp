// Copyright 2026 The helium-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "helad/fock.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace helad {

int mode_index(SpinOrbital orbital) {
  if (orbital.level != 1 && orbital.level != 2) {
    throw std::invalid_argument("mode_index: level must be 1 or 2");
  }
  return 2 * (orbital.level - 1) + (orbital.spin == Spin::down ? 1 : 0);
}

SpinOrbital orbital_from_mode(int mode) {
  if (mode < 0 || mode >= kModeCount) {
    throw std::invalid_argument("orbital_from_mode: mode out of range");
  }
  return SpinOrbital{1 + mode / 2, (mode % 2) ? Spin::down : Spin::up};
}

int FockState::particle_number() const { return std::popcount(bits & 0xfu); }

int FockState::sz_twice() const {
  const int up = occupied(0) + occupied(2);
  const int down = occupied(1) + occupied(3);
  return up - down;
}

StateVector StateVector::basis_state(FockState s) {
  StateVector v;
  v.amplitude[s.bits & 0xfu] = 1.0;
  return v;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (double x : amplitude) sum += x * x;
  return std::sqrt(sum);
}

double StateVector::max_abs() const {
  double m = 0.0;
  for (double x : amplitude) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  double m = 0.0;
  for (int i = 0; i < kFockDimension; ++i) {
    m = std::max(m, std::abs(a.amplitude[i] - b.amplitude[i]));
  }
  return m;
}

OperatorMatrix OperatorMatrix::zero() { return OperatorMatrix{}; }

OperatorMatrix OperatorMatrix::identity() {
  OperatorMatrix m;
  for (int i = 0; i < kFockDimension; ++i) m(i, i) = 1.0;
  return m;
}

OperatorMatrix OperatorMatrix::transpose() const {
  OperatorMatrix t;
  for (int r = 0; r < kFockDimension; ++r) {
    for (int c = 0; c < kFockDimension; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

double OperatorMatrix::max_abs() const {
  double m = 0.0;
  for (double x : entry) m = std::max(m, std::abs(x));
  return m;
}

bool OperatorMatrix::is_finite() const {
  for (double x : entry) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix r;
  for (std::size_t i = 0; i < a.entry.size(); ++i) r.entry[i] = a.entry[i] + b.entry[i];
  return r;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix r;
  for (std::size_t i = 0; i < a.entry.size(); ++i) r.entry[i] = a.entry[i] - b.entry[i];
  return r;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix r;
  for (int i = 0; i < kFockDimension; ++i) {
    for (int k = 0; k < kFockDimension; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < kFockDimension; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

OperatorMatrix operator*(double scale, const OperatorMatrix& a) {
  OperatorMatrix r;
  for (std::size_t i = 0; i < a.entry.size(); ++i) r.entry[i] = scale * a.entry[i];
  return r;
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.entry.size(); ++i) {
    m = std::max(m, std::abs(a.entry[i] - b.entry[i]));
  }
  return m;
}

OperatorMatrix creation_matrix(SpinOrbital orbital, SignString signs) {
  const int k = mode_index(orbital);
  const std::uint32_t mask = 1u << k;
  const std::uint32_t lower = mask - 1u;
  OperatorMatrix m;
  for (std::uint32_t s = 0; s < kFockDimension; ++s) {
    if (s & mask) continue;  // mode already occupied
    const double sign =
        (signs == SignString::fermionic && (std::popcount(s & lower) & 1)) ? -1.0 : 1.0;
    m(static_cast<int>(s | mask), static_cast<int>(s)) = sign;
  }
  return m;
}

OperatorMatrix annihilation_matrix(SpinOrbital orbital, SignString signs) {
  return creation_matrix(orbital, signs).transpose();
}

OperatorMatrix number_operator(SpinOrbital orbital) {
  const int k = mode_index(orbital);
  OperatorMatrix m;
  for (int s = 0; s < kFockDimension; ++s) {
    if ((s >> k) & 1) m(s, s) = 1.0;
  }
  return m;
}

OperatorMatrix total_number_operator() {
  OperatorMatrix m;
  for (int s = 0; s < kFockDimension; ++s) {
    m(s, s) = FockState{static_cast<std::uint32_t>(s)}.particle_number();
  }
  return m;
}

OperatorMatrix total_sz_twice_operator() {
  OperatorMatrix m;
  for (int s = 0; s < kFockDimension; ++s) {
    m(s, s) = FockState{static_cast<std::uint32_t>(s)}.sz_twice();
  }
  return m;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b - b * a;
}

OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b + b * a;
}

OperatorMatrix operator_exponential(const OperatorMatrix& a) {
  if (!a.is_finite()) {
    throw std::invalid_argument("operator_exponential: non-finite input entry");
  }

  // Max-row-sum norm controls the power-series remainder.
  double norm = 0.0;
  for (int r = 0; r < kFockDimension; ++r) {
    double row = 0.0;
    for (int c = 0; c < kFockDimension; ++c) row += std::abs(a(r, c));
    norm = std::max(norm, row);
  }

  // Scale until the norm is at most 1/2, sum the series, square back up.
  int squarings = 0;
  double scaled = norm;
  while (scaled > 0.5 && squarings < 64) {
    scaled *= 0.5;
    ++squarings;
  }
  const OperatorMatrix b = std::ldexp(1.0, -squarings) * a;

  OperatorMatrix result = OperatorMatrix::identity();
  OperatorMatrix term = OperatorMatrix::identity();
  for (int k = 1; k <= 40; ++k) {
    term = (1.0 / k) * (term * b);
    result = result + term;
    if (term.max_abs() < 1e-20) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

StateVector apply(const OperatorMatrix& a, const StateVector& v) {
  StateVector r;
  for (int i = 0; i < kFockDimension; ++i) {
    double sum = 0.0;
    for (int j = 0; j < kFockDimension; ++j) sum += a(i, j) * v.amplitude[j];
    r.amplitude[i] = sum;
  }
  return r;
}

}  // namespace helad
