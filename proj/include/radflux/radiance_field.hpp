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
#include "radflux/vec3.hpp"

namespace radflux {

/// Scalar radiance density (x, u) -> i_u(x), in W m^-2 sr^-1.
///
/// Analytic builders cover the cases whose surface and sphere integrals have
/// closed forms; `general` is the escape hatch for arbitrary evaluation
/// functions with caller-declared smoothness. Builders carry the spatial
/// gradient of i_u analytically; `general` may omit it, in which case callers
/// needing a gradient fall back to central finite differences.
///
/// Physically i_u >= 0. Builders validate their scale parameters; evaluation
/// is not clamped, so the affine builder is physical only where c + a.x >= 0.
class ScalarRadianceField {
 public:
  using Eval = std::function<double(const Vec3&, const Direction&)>;
  using Gradient = std::function<Vec3(const Vec3&, const Direction&)>;

  /// i_u(x) = i0 for all x and u.
  static ScalarRadianceField isotropic(double i0) {
    if (i0 < 0.0) throw std::invalid_argument("isotropic: radiance must be nonnegative");
    return ScalarRadianceField([i0](const Vec3&, const Direction&) { return i0; },
                               [](const Vec3&, const Direction&) { return Vec3{}; });
  }

  /// i_u(x) = c + a.x, direction-independent.
  static ScalarRadianceField affine(double c, const Vec3& a) {
    return ScalarRadianceField(
        [c, a](const Vec3& x, const Direction&) { return c + dot(a, x); },
        [a](const Vec3&, const Direction&) { return a; });
  }

  /// Profile transported along `axis`: i_u(x) = profile(x - (x.axis) axis),
  /// constant along the axis by construction. `profile_gradient` may be null.
  static ScalarRadianceField transported(const Direction& axis,
                                         std::function<double(const Vec3&)> profile,
                                         std::function<Vec3(const Vec3&)> profile_gradient);

  /// Lambert emitter: i_u(x) = i0 on the open hemisphere u.axis > 0, else 0.
  static ScalarRadianceField lambert_surface(double i0, const Direction& axis) {
    if (i0 < 0.0) throw std::invalid_argument("lambert_surface: radiance must be nonnegative");
    return ScalarRadianceField(
        [i0, axis](const Vec3&, const Direction& u) { return dot(u, axis) > 0.0 ? i0 : 0.0; },
        [](const Vec3&, const Direction&) { return Vec3{}; });
  }

  /// Arbitrary evaluation function; gradient optional.
  static ScalarRadianceField general(Eval eval, Gradient gradient = nullptr) {
    return ScalarRadianceField(std::move(eval), std::move(gradient));
  }

  double eval(const Vec3& x, const Direction& u) const { return eval_(x, u); }

  bool has_analytic_gradient() const { return static_cast<bool>(gradient_); }

  /// Spatial gradient of i_u at x: analytic when the builder provides it,
  /// otherwise central differences with the given step.
  Vec3 gradient(const Vec3& x, const Direction& u, double fd_step = 1e-4) const;

  /// Directional derivative grad(i_u).u, the divergence of i_u u.
  double directional_derivative(const Vec3& x, const Direction& u, double fd_step = 1e-4) const {
    return dot(gradient(x, u, fd_step), u.vec());
  }

 private:
  ScalarRadianceField(Eval eval, Gradient gradient)
      : eval_(std::move(eval)), gradient_(std::move(gradient)) {}

  Eval eval_;
  Gradient gradient_;
};

}  // namespace radflux
