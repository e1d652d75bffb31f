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
#include <memory>
#include <utility>
#include <vector>

#include "radflux/radiance_field.hpp"
#include "radflux/region.hpp"
#include "radflux/sphere_measure.hpp"

namespace radflux {

/// Measure-valued radiance tensor: x -> (I_1, I_2, I_3), three sphere
/// measures on one fixed grid with one fixed atom support declared at
/// construction (weights may vary with x).
///
/// `conforming` builders produce tensors of the form I_j = u_j (.) mu_x for a
/// nonnegative mu_x; these satisfy the radiation form exactly (see
/// verify_radiation_assumption). `general` tensors carry arbitrary component
/// data, so the radiation form is a checkable property rather than a built-in
/// constraint.
class RadianceTensor {
 public:
  /// Density and per-atom weight callbacks for a conforming tensor.
  /// `density` may be null (purely atomic tensor); atom weights must be
  /// nonnegative wherever evaluated.
  static RadianceTensor conforming(
      std::shared_ptr<const SphericalQuadrature> quad,
      std::function<double(const Vec3&, const Direction&)> density,
      std::vector<std::pair<Direction, std::function<double(const Vec3&)>>> atoms = {});

  /// Conforming tensor whose density is a scalar radiance field.
  static RadianceTensor conforming_from_field(std::shared_ptr<const SphericalQuadrature> quad,
                                              const ScalarRadianceField& field);

  /// Arbitrary component data: `density` returns the three component
  /// densities at (x, u); each atom callback returns the three component
  /// weights at x.
  static RadianceTensor general(
      std::shared_ptr<const SphericalQuadrature> quad,
      std::function<Vec3(const Vec3&, const Direction&)> density,
      std::vector<std::pair<Direction, std::function<Vec3(const Vec3&)>>> atoms = {});

  /// The component triple at x, materialized on the shared grid.
  VectorSphereMeasure at(const Vec3& x) const;

  const std::shared_ptr<const SphericalQuadrature>& quad_ptr() const { return quad_; }
  const SphericalQuadrature& quad() const { return *quad_; }
  const std::vector<Direction>& atom_directions() const { return atom_dirs_; }
  bool is_conforming() const { return conforming_; }

 private:
  RadianceTensor() = default;

  std::shared_ptr<const SphericalQuadrature> quad_;
  std::vector<Direction> atom_dirs_;
  std::function<Vec3(const Vec3&, const Direction&)> density_;    // may be null
  std::vector<std::function<Vec3(const Vec3&)>> atom_weights_;    // aligned with atom_dirs_
  bool conforming_ = false;
};

/// Sphere measure of power per steradian aggregated over a whole boundary.
struct TotalDistribution {
  SphereMeasure measure;
};

/// Cauchy formula for measures: J = sum_j n_j I_j(x). Accepts arbitrary
/// (not just unit) n; the result is linear in n.
SphereMeasure apply_to_normal(const RadianceTensor& tensor, const Vec3& x, const Vec3& n);

/// J_R(x)(D): the flux measure of the Borel subset D at boundary point (x, n).
double radiance_measure_of(const RadianceTensor& tensor, const Vec3& x, const Direction& n,
                           const SphereSubset& subset);

/// Phi_R: the measure-valued surface integral of J over the region boundary,
/// accumulated support-pointwise in sampler order.
TotalDistribution total_distribution(const RadianceTensor& tensor, const Region& region);

/// P_R = pairing of the total distribution with the unit test function.
double total_power_from_distribution(const TotalDistribution& phi);

/// q(x) = (I_1(S^2), I_2(S^2), I_3(S^2)).
Vec3 energy_flux_vector_measure(const RadianceTensor& tensor, const Vec3& x);

/// Outcome of checking the radiation form I = iota (.) |I| at one point.
struct RadiationAssumptionReport {
  double max_angular_deviation = 0.0;  // radians, between unit field and u
  double unit_norm_residual = 0.0;     // max | ||unit field|| - 1 |
  std::size_t support_points = 0;      // nonzero-magnitude points inspected
  bool pass = false;
};

/// Decomposes the tensor at x and measures how far the unit direction field
/// deviates from the identity map of the sphere. Zero-magnitude support
/// points are skipped. Passes iff both maxima are <= tol.
RadiationAssumptionReport verify_radiation_assumption(const RadianceTensor& tensor, const Vec3& x,
                                                      double tol = 1e-9);

}  // namespace radflux
