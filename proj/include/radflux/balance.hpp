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
#include <utility>

#include "radflux/radiance_ops.hpp"
#include "radflux/radiance_tensor.hpp"
#include "radflux/region.hpp"

namespace radflux {

/// Boundary flux density as a function of point and outward normal; scalar
/// for ordinary flux systems, measure-valued for radiance distributions.
/// Exactly one of the two callbacks is set.
struct CauchyMap {
  std::function<double(const Vec3&, const Direction&)> eval;
  std::function<SphereMeasure(const Vec3&, const Direction&)> eval_measure;

  /// tau(x, n) = F(x).n, the map induced by a flux vector field.
  static CauchyMap from_flux_vector(std::function<Vec3(const Vec3&)> field);

  /// tau(x, n) = i_u(x) (u.n), the direction-u flux of a radiance field.
  static CauchyMap from_radiance(const ScalarRadianceField& field, const Direction& u);

  /// J(x, n) = sum_j n_j I_j(x), the measure-valued map of a tensor.
  static CauchyMap from_tensor(const RadianceTensor& tensor);
};

/// Where the Cauchy map is sampled on the test tetrahedron's faces.
enum class TetraEvalMode {
  FrozenAtPoint,  // all faces evaluated at the center point x
  FaceCentroid,   // each face evaluated at its own centroid
};

/// Face-closure defect of the map on the Cauchy tetrahedron at x:
/// |sum_a tau(., n_a) A_a| / A_0 (measure norm in the measure case).
/// Zero (within roundoff) in frozen mode iff the map is linear in n; for a
/// smooth flux system sampled at face centroids it decays like O(h).
double tetrahedron_residual(const CauchyMap& map, const Vec3& x, const Direction& normal, double h,
                            TetraEvalMode mode = TetraEvalMode::FrozenAtPoint);

/// Supplied rate-of-change and source densities per (point, direction).
struct BalanceData {
  std::function<double(const Vec3&, const Direction&)> rho_dot;
  std::function<double(const Vec3&, const Direction&)> source;

  static BalanceData zero();

  /// Source equal to the field's directional derivative (analytic when the
  /// builder carries a gradient), rho_dot = 0; closes the balance exactly.
  static BalanceData consistent_with(const ScalarRadianceField& field);
};

struct BoundednessReport {
  double constant = 0.0;     // max |grad(i_u).u| over volume sample points
  double power = 0.0;        // P_{R,u}
  double bound = 0.0;        // constant * |R|
  bool verified = false;     // |power| <= bound + 1e-9
};

/// Empirical flux-bound constant: C = max over the region's volume samples of
/// |grad(i_u).u| by central finite differences, checked against |P_{R,u}|.
BoundednessReport boundedness_constant(const ScalarRadianceField& field, const Direction& u,
                                       const Region& region);

/// |grad(i_u).u + rho_dot - source| at one point, gradient by central
/// finite differences (step 1e-4 max(1, |x|_inf)).
double differential_balance_residual(const ScalarRadianceField& field, const BalanceData& data,
                                     const Vec3& x, const Direction& u);

struct RayConservationReport {
  double max_directional_derivative = 0.0;  // max |grad(i_u).u| along the segment
  double endpoint_difference = 0.0;         // |i_u(x2) - i_u(x1)|
};

/// Conservation of radiance along a ray: samples |grad(i_u).u| at `samples`
/// points of the segment (which must be parallel to u within 1e-9) and
/// reports the endpoint radiance difference as the integrated form.
RayConservationReport ray_conservation_residual(const ScalarRadianceField& field,
                                                const Direction& u,
                                                const std::pair<Vec3, Vec3>& segment, int samples);

/// |integral_R rho_dot dV + P_{R,u} - integral_R source dV|.
double integral_balance_residual(const ScalarRadianceField& field, const BalanceData& data,
                                 const Region& region, const Direction& u);

/// Weak-form defect: |surface term + volume term - meter-gradient term| for a
/// radiance-meter variation w, with grad(w) by central finite differences.
/// With w = 1 this reduces to the integral balance residual.
double virtual_power_residual(const ScalarRadianceField& field, const BalanceData& data,
                              const Region& region, const Direction& u,
                              const std::function<double(const Vec3&)>& meter_variation);

}  // namespace radflux
