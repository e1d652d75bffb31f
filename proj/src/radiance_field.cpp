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
#include "radflux/radiance_field.hpp"

namespace radflux {

ScalarRadianceField ScalarRadianceField::transported(
    const Direction& axis, std::function<double(const Vec3&)> profile,
    std::function<Vec3(const Vec3&)> profile_gradient) {
  auto project = [axis](const Vec3& x) { return x - axis.vec() * dot(x, axis.vec()); };

  Eval eval = [project, profile](const Vec3& x, const Direction&) { return profile(project(x)); };

  Gradient gradient = nullptr;
  if (profile_gradient) {
    // Chain rule through the orthogonal projector: grad = P (grad profile).
    gradient = [project, profile_gradient, axis](const Vec3& x, const Direction&) {
      const Vec3 g = profile_gradient(project(x));
      return g - axis.vec() * dot(g, axis.vec());
    };
  }
  return ScalarRadianceField(std::move(eval), std::move(gradient));
}

Vec3 ScalarRadianceField::gradient(const Vec3& x, const Direction& u, double fd_step) const {
  if (gradient_) return gradient_(x, u);
  const double h = fd_step;
  Vec3 g;
  g.x = (eval_({x.x + h, x.y, x.z}, u) - eval_({x.x - h, x.y, x.z}, u)) / (2.0 * h);
  g.y = (eval_({x.x, x.y + h, x.z}, u) - eval_({x.x, x.y - h, x.z}, u)) / (2.0 * h);
  g.z = (eval_({x.x, x.y, x.z + h}, u) - eval_({x.x, x.y, x.z - h}, u)) / (2.0 * h);
  return g;
}

}  // namespace radflux
