//
// radflux: computational radiometry on the unit sphere.
//
// Copyright 2026 The radflux authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
#include "radflux/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace radflux {

namespace {

// Legendre polynomial value and derivative via the three-term recurrence.
void legendre_eval(int n, double x, double& p, double& dp) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev initial guess, refined by Newton iteration.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_eval(n, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    legendre_eval(n, x, p, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

SphericalQuadrature build_quadrature(int level) {
  if (level < 1) {
    throw std::invalid_argument("build_quadrature: level must be >= 1, got " +
                                std::to_string(level));
  }

  const int panel = 2 * level + 2;  // Gauss points per z-panel
  const int n_phi = 4 * level + 4;  // uniform azimuthal samples

  std::vector<double> gx, gw;
  gauss_legendre(panel, gx, gw);

  SphericalQuadrature quad;
  quad.level_ = level;
  quad.nodes_.reserve(static_cast<std::size_t>(2 * panel * n_phi));
  quad.weights_.reserve(static_cast<std::size_t>(2 * panel * n_phi));

  const double two_pi = 2.0 * std::numbers::pi;
  const double w_phi = two_pi / n_phi;

  // Northern half: z in (0,1), all azimuths.
  for (int i = 0; i < panel; ++i) {
    const double z = 0.5 * (gx[i] + 1.0);  // map [-1,1] -> (0,1)
    const double wz = 0.5 * gw[i];
    const double r = std::sqrt(1.0 - z * z);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = two_pi * (j + 0.5) / n_phi;
      quad.nodes_.emplace_back(Vec3{r * std::cos(phi), r * std::sin(phi), z});
      quad.weights_.push_back(wz * w_phi);
    }
  }

  // Southern half: exact negation of the northern nodes, same weights.
  const std::size_t half = quad.nodes_.size();
  for (std::size_t k = 0; k < half; ++k) {
    quad.nodes_.push_back(quad.nodes_[k].antipode());
    quad.weights_.push_back(quad.weights_[k]);
  }

  return quad;
}

std::shared_ptr<const SphericalQuadrature> make_quadrature(int level) {
  return std::make_shared<const SphericalQuadrature>(build_quadrature(level));
}

std::size_t thread_cap() {
  if (const char* env = std::getenv("RADFLUX_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace radflux
