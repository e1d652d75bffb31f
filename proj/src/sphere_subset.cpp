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
#include "radflux/sphere_subset.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

namespace radflux {

double solid_angle(const SphereSubset& subset, const SphericalQuadrature& quad) {
  switch (subset.kind()) {
    case SphereSubset::Kind::FullSphere:
      return 4.0 * std::numbers::pi;
    case SphereSubset::Kind::Hemisphere:
      return 2.0 * std::numbers::pi;
    case SphereSubset::Kind::Cap:
      return 2.0 * std::numbers::pi * (1.0 - std::cos(subset.half_angle()));
    case SphereSubset::Kind::Predicate: {
      double sum = 0.0;
      for (std::size_t k = 0; k < quad.size(); ++k) {
        if (subset.contains(quad.node(k))) sum += quad.weight(k);
      }
      return sum;
    }
  }
  return 0.0;
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

}  // namespace radflux
