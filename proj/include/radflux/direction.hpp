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

#include <cmath>
#include <stdexcept>

#include "radflux/vec3.hpp"

namespace radflux {

/// Unit vector on S^2. Serves both as a radiation direction and as a surface
/// normal. The constructor normalizes inputs with norm in [0.5, 2] and rejects
/// anything else; after construction the norm is 1 within 1e-12.
class Direction {
 public:
  Direction(double x, double y, double z) : Direction(Vec3{x, y, z}) {}

  explicit Direction(const Vec3& v) {
    const double n = norm(v);
    if (!(n >= 0.5 && n <= 2.0)) {
      throw std::invalid_argument("Direction: vector norm outside [0.5, 2], not a unit direction");
    }
    v_ = v / n;
  }

  /// Exact componentwise negation; preserves bitwise antipodal pairing.
  Direction antipode() const {
    Direction d;
    d.v_ = -v_;
    return d;
  }

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  operator const Vec3&() const { return v_; }

  bool operator==(const Direction& o) const = default;

 private:
  Direction() = default;
  Vec3 v_{0.0, 0.0, 1.0};
};

inline double dot(const Direction& a, const Direction& b) { return dot(a.vec(), b.vec()); }
inline double dot(const Direction& a, const Vec3& b) { return dot(a.vec(), b); }
inline double dot(const Vec3& a, const Direction& b) { return dot(a, b.vec()); }

/// Componentwise coincidence test used when merging atoms.
inline bool same_direction(const Direction& a, const Direction& b, double tol = 1e-12) {
  return norm_inf(a.vec() - b.vec()) <= tol;
}

/// Angle between two unit vectors via the chord length. Stable near 0 and pi,
/// which acos(dot) is not.
inline double angle_between(const Vec3& a, const Vec3& b) {
  const double half_chord = 0.5 * norm(a - b);
  return 2.0 * std::asin(std::min(1.0, half_chord));
}

}  // namespace radflux
