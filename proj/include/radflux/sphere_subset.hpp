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

#include <functional>
#include <stdexcept>
#include <utility>

#include "radflux/direction.hpp"
#include "radflux/quadrature.hpp"

namespace radflux {

/// Borel subset of S^2: the full sphere, a spherical cap (hemisphere being the
/// half-angle pi/2 cap), or an arbitrary membership predicate.
///
/// Cap membership uses the exact dot-product test u.axis >= cos(alpha) - 1e-12,
/// so points on the rim count as inside. Cap and hemisphere solid angles are
/// analytic; predicate subsets are resolved only at quadrature-node resolution.
class SphereSubset {
 public:
  enum class Kind { FullSphere, Hemisphere, Cap, Predicate };

  static SphereSubset full_sphere() { return SphereSubset(Kind::FullSphere); }

  static SphereSubset hemisphere(const Direction& axis) {
    SphereSubset s(Kind::Hemisphere);
    s.axis_ = axis;
    s.half_angle_ = 1.5707963267948966;  // pi/2
    return s;
  }

  static SphereSubset cap(const Direction& axis, double half_angle) {
    if (!(half_angle >= 0.0 && half_angle <= 3.1415926535897932)) {
      throw std::invalid_argument("SphereSubset::cap: half-angle must lie in [0, pi]");
    }
    SphereSubset s(Kind::Cap);
    s.axis_ = axis;
    s.half_angle_ = half_angle;
    return s;
  }

  static SphereSubset predicate(std::function<bool(const Direction&)> member) {
    SphereSubset s(Kind::Predicate);
    s.member_ = std::move(member);
    return s;
  }

  Kind kind() const { return kind_; }
  const Direction& axis() const { return axis_; }
  double half_angle() const { return half_angle_; }

  bool contains(const Direction& u) const {
    switch (kind_) {
      case Kind::FullSphere: return true;
      case Kind::Hemisphere:
      case Kind::Cap: return dot(u, axis_) >= std::cos(half_angle_) - 1e-12;
      case Kind::Predicate: return member_(u);
    }
    return false;
  }

 private:
  explicit SphereSubset(Kind k) : kind_(k) {}

  Kind kind_;
  Direction axis_{0.0, 0.0, 1.0};
  double half_angle_ = 0.0;
  std::function<bool(const Direction&)> member_;
};

/// Solid angle of the subset: analytic 2*pi*(1 - cos(alpha)) for caps and
/// hemispheres, 4*pi for the full sphere, node-resolved weight sum for
/// predicates.
double solid_angle(const SphereSubset& subset, const SphericalQuadrature& quad);

/// Sum of w_k f(u_k) over nodes inside the subset.
template <typename F>
double integrate_sphere(F&& f, const SphericalQuadrature& quad, const SphereSubset& subset) {
  const auto& nodes = quad.nodes();
  const auto& weights = quad.weights();
  return chunked_sum<double>(quad.size(), [&](std::size_t k) -> double {
    if (!subset.contains(nodes[k])) return 0.0;
    const double v = f(nodes[k]);
    if (!std::isfinite(v)) {
      throw EvaluationError("integrate_sphere: non-finite integrand at node", nodes[k].vec());
    }
    return weights[k] * v;
  });
}

}  // namespace radflux
