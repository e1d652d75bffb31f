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
#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "radflux/direction.hpp"
#include "radflux/errors.hpp"
#include "radflux/parallel.hpp"

namespace radflux {

/// Quadrature rule for the solid-angle measure on S^2.
///
/// Product construction: Gauss-Legendre panels on z in (0,1) and (-1,0)
/// (split at the equator) crossed with a uniform azimuthal grid, the southern
/// half emitted as the exact bitwise negation of the northern half. Hence the
/// node set is closed under u -> -u with equal weights, no node lies on the
/// equator or at the poles, and integrands whose only non-smoothness sits on
/// the equator (hemispherical emitters about +-e3) integrate at full panel
/// accuracy.
///
/// Exactness: all spherical polynomials of degree <= 4*level + 3.
///
///   level   nodes   exact degree
///     1       64        7
///     2      144       11
///     3      256       15
///     4      400       19
///     l    16(l+1)^2  4l+3
class SphericalQuadrature {
 public:
  std::size_t size() const { return nodes_.size(); }
  int level() const { return level_; }
  int exact_degree() const { return 4 * level_ + 3; }

  const std::vector<Direction>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  const Direction& node(std::size_t k) const { return nodes_[k]; }
  double weight(std::size_t k) const { return weights_[k]; }

  /// Index of the node at -node(k); an exact involution of the node set.
  std::size_t antipode_index(std::size_t k) const {
    const std::size_t half = nodes_.size() / 2;
    return k < half ? k + half : k - half;
  }

 private:
  friend SphericalQuadrature build_quadrature(int level);

  int level_ = 0;
  std::vector<Direction> nodes_;
  std::vector<double> weights_;
};

/// Builds the rule for the given refinement level (level >= 1).
SphericalQuadrature build_quadrature(int level);

/// Shared-ownership convenience used by measures and tensors.
std::shared_ptr<const SphericalQuadrature> make_quadrature(int level);

/// Sum_k w_k f(u_k). Throws EvaluationError if f is non-finite at a node.
template <typename F>
double integrate_sphere(F&& f, const SphericalQuadrature& quad) {
  const auto& nodes = quad.nodes();
  const auto& weights = quad.weights();
  return chunked_sum<double>(quad.size(), [&](std::size_t k) {
    const double v = f(nodes[k]);
    if (!std::isfinite(v)) {
      throw EvaluationError("integrate_sphere: non-finite integrand at node", nodes[k].vec());
    }
    return weights[k] * v;
  });
}

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace radflux
