// Copyright 2026 The helium-ladder Authors
// SPDX-License-Identifier: Apache-2.0
//
// Gauss-Legendre quadrature and the radial double integral
//
//   I = int_0^R dr int_0^R dr' f(r) g(r') / max(r, r')
//
// used for electron-repulsion matrix elements.  The inner integral is split
// at r' = r so each piece has a smooth integrand; f and g are full radial
// densities (any 4*pi*r^2 factors are the caller's business).
//
// Two kernel drivers are provided: a plain serial reference and a tiled
// variant whose outer loop is OpenMP-parallel.  The tiled driver accumulates
// each fixed-size tile serially and combines tile partials in index order,
// so its result is bitwise identical for every thread count (and is the one
// production code uses); the reference exists to test it against.

#pragma once

#include <algorithm>
#include <vector>

namespace helad {

// Nodes (ascending) and weights on [-1, 1].  Newton iteration on the
// Legendre recurrence; nodes converge to machine precision.
struct GaussLegendreRule {
  std::vector<double> node;
  std::vector<double> weight;

  explicit GaussLegendreRule(int points);
  int size() const { return static_cast<int>(node.size()); }
};

// One-dimensional integral of f over [a, b].
template <class F>
double integrate(const GaussLegendreRule& rule, double a, double b, F&& f) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  double sum = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    sum += half * rule.weight[i] * f(half * rule.node[i] + mid);
  }
  return sum;
}

namespace detail {

// Contribution of one outer node r_i: w_i f(r_i) [ (1/r_i) int_0^{r_i} g
//                                                  + int_{r_i}^{R} g(r')/r' dr' ].
template <class F, class G>
double repulsion_outer_term(const GaussLegendreRule& rule, double r_max, int i,
                            const F& f, const G& g) {
  const int n = rule.size();
  const double r = 0.5 * r_max * (rule.node[i] + 1.0);
  const double w = 0.5 * r_max * rule.weight[i];

  double below = 0.0;  // r' in [0, r], kernel 1/r
  for (int j = 0; j < n; ++j) {
    const double rp = 0.5 * r * (rule.node[j] + 1.0);
    below += 0.5 * r * rule.weight[j] * g(rp);
  }

  double above = 0.0;  // r' in [r, R], kernel 1/r'
  const double half = 0.5 * (r_max - r);
  const double mid = 0.5 * (r_max + r);
  for (int j = 0; j < n; ++j) {
    const double rp = half * rule.node[j] + mid;
    above += half * rule.weight[j] * g(rp) / rp;
  }

  return w * f(r) * (below / r + above);
}

}  // namespace detail

// Serial reference implementation: one flat accumulation over outer nodes.
template <class F, class G>
double repulsion_integral_reference(const GaussLegendreRule& rule, double r_max,
                                    F&& f, G&& g) {
  double total = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    total += detail::repulsion_outer_term(rule, r_max, i, f, g);
  }
  return total;
}

inline constexpr int kRepulsionTile = 16;

// Production driver: outer nodes in fixed tiles of kRepulsionTile, tiles
// distributed statically across OpenMP threads, partials combined in tile
// order.  Bitwise deterministic in the thread count by construction.
template <class F, class G>
double repulsion_integral(const GaussLegendreRule& rule, double r_max, F&& f, G&& g) {
  const int n = rule.size();
  const int tiles = (n + kRepulsionTile - 1) / kRepulsionTile;
  std::vector<double> partial(static_cast<std::size_t>(tiles), 0.0);

#pragma omp parallel for schedule(static)
  for (int t = 0; t < tiles; ++t) {
    const int lo = t * kRepulsionTile;
    const int hi = std::min(n, lo + kRepulsionTile);
    double acc = 0.0;
    for (int i = lo; i < hi; ++i) {
      acc += detail::repulsion_outer_term(rule, r_max, i, f, g);
    }
    partial[static_cast<std::size_t>(t)] = acc;
  }

  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace helad
