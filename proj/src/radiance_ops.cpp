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
#include "radflux/radiance_ops.hpp"

#include <cmath>

#include "radflux/parallel.hpp"

namespace radflux {

double irradiance(const ScalarRadianceField& field, const Vec3& x, const Direction& n,
                  const SphericalQuadrature& quad, const SphereSubset& subset) {
  return integrate_sphere(
      [&](const Direction& u) { return field.eval(x, u) * dot(u, n); }, quad, subset);
}

double directional_power(const ScalarRadianceField& field, const Region& region,
                         const Direction& u) {
  const auto& samples = region.boundary_samples();
  return chunked_sum<double>(samples.size(), [&](std::size_t i) {
    const auto& s = samples[i];
    const double v = field.eval(s.point, u);
    if (!std::isfinite(v)) {
      throw EvaluationError("directional_power: non-finite radiance", s.point);
    }
    return v * dot(u, s.normal) * s.area_weight;
  });
}

double total_power(const ScalarRadianceField& field, const Region& region,
                   const SphericalQuadrature& quad) {
  const auto& samples = region.boundary_samples();
  return chunked_sum<double>(samples.size(), [&](std::size_t i) {
    const auto& s = samples[i];
    const double local = integrate_sphere(
        [&](const Direction& u) { return field.eval(s.point, u) * dot(u, s.normal); }, quad);
    return local * s.area_weight;
  });
}

Vec3 energy_flux_vector(const ScalarRadianceField& field, const Vec3& x,
                        const SphericalQuadrature& quad) {
  return chunked_sum<Vec3>(quad.size(), [&](std::size_t k) {
    const Direction& u = quad.node(k);
    const double v = field.eval(x, u);
    if (!std::isfinite(v)) {
      throw EvaluationError("energy_flux_vector: non-finite radiance at node", u.vec());
    }
    return u.vec() * (v * quad.weight(k));
  });
}

Vec3 radiant_intensity(const ScalarRadianceField& field, const Region& region,
                       const Direction& u) {
  const auto& samples = region.boundary_samples();
  return chunked_sum<Vec3>(samples.size(), [&](std::size_t i) {
    const auto& s = samples[i];
    const double v = field.eval(s.point, u);
    if (!std::isfinite(v)) {
      throw EvaluationError("radiant_intensity: non-finite radiance", s.point);
    }
    return s.normal.vec() * (v * s.area_weight);
  });
}

}  // namespace radflux
