// Copyright 2026 The helium-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "helad/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace helad {

GaussLegendreRule::GaussLegendreRule(int points) {
  if (points < 2) {
    throw std::invalid_argument("GaussLegendreRule: need at least 2 points");
  }
  const int n = points;
  node.resize(n);
  weight.resize(n);

  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev estimate of the i-th root (descending), then Newton.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / pp;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    node[i] = -z;
    node[n - 1 - i] = z;
    weight[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    weight[n - 1 - i] = weight[i];
  }
}

}  // namespace helad
