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

#include "radflux/quadrature.hpp"
#include "radflux/radiance_field.hpp"
#include "radflux/region.hpp"
#include "radflux/sphere_subset.hpp"

namespace radflux {

/// Signed cosine-weighted flux density i_u(x) (u.n): positive outgoing,
/// negative incoming. Antisymmetric in n.
inline double lambert_density(const ScalarRadianceField& field, const Vec3& x, const Direction& u,
                              const Direction& n) {
  return field.eval(x, u) * dot(u, n);
}

/// Signed irradiance: integral over the subset (default full sphere) of
/// i_u(x) (u.n) dw. The hemisphere subset about n recovers the emission-only
/// convention.
double irradiance(const ScalarRadianceField& field, const Vec3& x, const Direction& n,
                  const SphericalQuadrature& quad,
                  const SphereSubset& subset = SphereSubset::full_sphere());

/// P_{R,u}: boundary integral of i_u (u.n) dA, the scalar flux of the
/// direction-u component through the region boundary.
double directional_power(const ScalarRadianceField& field, const Region& region,
                         const Direction& u);

/// Total outgoing power: the double integral of i_u (u.n) over boundary and
/// sphere. Equals the sphere integral of directional_power (Fubini).
double total_power(const ScalarRadianceField& field, const Region& region,
                   const SphericalQuadrature& quad);

/// q(x) = integral of i_u(x) u dw. The irradiance at (x, n) equals q(x).n.
Vec3 energy_flux_vector(const ScalarRadianceField& field, const Vec3& x,
                        const SphericalQuadrature& quad);

/// S_u = integral over the boundary of i_u(x) n(x) dA; equals the volume
/// integral of grad(i_u) by Green's identity.
Vec3 radiant_intensity(const ScalarRadianceField& field, const Region& region, const Direction& u);

}  // namespace radflux
