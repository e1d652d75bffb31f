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

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "radflux/direction.hpp"
#include "radflux/quadrature.hpp"
#include "radflux/sphere_subset.hpp"

namespace radflux {

/// Continuous test function on the sphere; the caller asserts continuity.
/// Must be finite at every quadrature node and atom direction it meets.
struct TestFunction {
  std::function<double(const Direction&)> eval;

  template <typename F>
  TestFunction(F&& f) : eval(std::forward<F>(f)) {}  // NOLINT(google-explicit-constructor)
};

/// Point mass on the sphere.
struct SphereAtom {
  Direction direction;
  double weight = 0.0;
};

/// Borel measure on S^2 in density-plus-atoms form: a smooth part sampled as a
/// per-node density against the quadrature's solid-angle weights, plus a
/// finite list of Dirac atoms. Atoms at coincident directions (componentwise
/// within 1e-12) are merged at construction. Immutable after construction.
class SphereMeasure {
 public:
  SphereMeasure(std::shared_ptr<const SphericalQuadrature> quad, std::vector<double> density,
                std::vector<SphereAtom> atoms);

  static SphereMeasure zero(std::shared_ptr<const SphericalQuadrature> quad);

  /// Absolutely continuous measure with the given density.
  static SphereMeasure from_density(std::shared_ptr<const SphericalQuadrature> quad,
                                    const std::function<double(const Direction&)>& density);

  /// Purely atomic measure with a single point mass.
  static SphereMeasure single_atom(std::shared_ptr<const SphericalQuadrature> quad,
                                   const Direction& direction, double weight);

  const std::shared_ptr<const SphericalQuadrature>& quad_ptr() const { return quad_; }
  const SphericalQuadrature& quad() const { return *quad_; }
  const std::vector<double>& density() const { return density_; }
  const std::vector<SphereAtom>& atoms() const { return atoms_; }

 private:
  std::shared_ptr<const SphericalQuadrature> quad_;
  std::vector<double> density_;
  std::vector<SphereAtom> atoms_;
};

/// Pairing <mu, v> = sum_k w_k rho_k v(u_k) + sum_i a_i v(u_i).
double pair(const SphereMeasure& mu, const TestFunction& v);

/// mu(D): node-resolved density part plus exact atom membership.
double measure_of(const SphereMeasure& mu, const SphereSubset& subset);

/// Total variation: sum_k w_k |rho_k| + sum_i |a_i|. Realizes the operator
/// norm sup |<mu, v>| / max|v| for this representation.
double norm(const SphereMeasure& mu);

/// a*mu + b*nu on a shared grid; atom lists merge, coincident directions sum.
SphereMeasure combine(double a, const SphereMeasure& mu, double b, const SphereMeasure& nu);

/// Function-times-measure (phi (.) mu): densities and atom weights scale
/// pointwise by phi.
SphereMeasure multiply(const TestFunction& phi, const SphereMeasure& mu);

/// Triple of measures sharing one grid and one atom support; the component
/// measures of a radiance tensor at a fixed point.
class VectorSphereMeasure {
 public:
  VectorSphereMeasure(std::shared_ptr<const SphericalQuadrature> quad,
                      std::array<std::vector<double>, 3> node_density,
                      std::vector<Direction> atom_directions,
                      std::array<std::vector<double>, 3> atom_weights);

  /// Components built as I_j = multiply(u -> u_j, mu); satisfies the radiation
  /// form by construction. Requires mu nonnegative.
  static VectorSphereMeasure conforming(const SphereMeasure& mu);

  const std::shared_ptr<const SphericalQuadrature>& quad_ptr() const { return quad_; }
  const SphericalQuadrature& quad() const { return *quad_; }

  SphereMeasure component(int j) const;

  const std::array<std::vector<double>, 3>& node_density() const { return node_density_; }
  const std::vector<Direction>& atom_directions() const { return atom_directions_; }
  const std::array<std::vector<double>, 3>& atom_weights() const { return atom_weights_; }

  Vec3 node_vector(std::size_t k) const {
    return {node_density_[0][k], node_density_[1][k], node_density_[2][k]};
  }
  Vec3 atom_vector(std::size_t i) const {
    return {atom_weights_[0][i], atom_weights_[1][i], atom_weights_[2][i]};
  }

 private:
  std::shared_ptr<const SphericalQuadrature> quad_;
  std::array<std::vector<double>, 3> node_density_;
  std::vector<Direction> atom_directions_;
  std::array<std::vector<double>, 3> atom_weights_;
};

/// Polar (Radon-Nikodym) decomposition of a vector measure: a nonnegative
/// magnitude measure and the unit direction field on its support. Support
/// points of zero magnitude carry a zero vector as an explicit "undefined"
/// marker; the direction field is unit-norm everywhere else.
struct TensorDecomposition {
  SphereMeasure magnitude;
  std::vector<Vec3> node_directions;  // per quadrature node; zero where magnitude is zero
  std::vector<Vec3> atom_directions;  // per atom, aligned with magnitude.atoms()

  static bool is_zero_marker(const Vec3& v) { return v.x == 0.0 && v.y == 0.0 && v.z == 0.0; }
};

TensorDecomposition decompose(const VectorSphereMeasure& v);

}  // namespace radflux
