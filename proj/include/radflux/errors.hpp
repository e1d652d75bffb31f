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

#include <stdexcept>
#include <string>

#include "radflux/vec3.hpp"

namespace radflux {

/// An integrand or field returned a non-finite value. Carries the offending
/// evaluation point (a sphere direction or a spatial point, whichever applies).
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, const Vec3& where)
      : std::runtime_error(what), where_(where) {}

  const Vec3& where() const { return where_; }

 private:
  Vec3 where_;
};

/// Two measures built on different quadrature grids were combined.
class GridMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A region is invalid: degenerate extents, open or inward-facing boundary.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scene file could not be parsed or references an unknown entity.
class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace radflux
