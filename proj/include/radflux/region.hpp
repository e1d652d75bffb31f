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
#include <string>
#include <vector>

#include "radflux/direction.hpp"
#include "radflux/errors.hpp"
#include "radflux/vec3.hpp"

namespace radflux {

/// One boundary sample: a point on the surface, the outward unit normal
/// there, and the area (m^2) it represents.
struct FluxSample {
  Vec3 point;
  Direction normal;
  double area_weight = 0.0;
};

/// One volumetric sample with its volume weight (m^3).
struct VolumeSample {
  Vec3 point;
  double weight = 0.0;
};

struct Triangle {
  Vec3 a, b, c;
};

/// Bounded region of R^3 with a deterministic oriented boundary sampler.
///
/// Supported kinds: axis-aligned box, ball, tetrahedron, and closed triangle
/// meshes (outward orientation required, certified by the area-weighted
/// normal sum vanishing). Samplers are fixed-order face subdivisions with no
/// randomness; doubling boundary_resolution refines them. Regions are
/// immutable after construction.
class Region {
 public:
  enum class Kind { Box, Ball, Tetrahedron, Mesh };

  static Region box(const Vec3& lo, const Vec3& hi, int boundary_resolution = 16);
  static Region ball(const Vec3& center, double radius, int boundary_resolution = 4);
  static Region tetrahedron(const std::array<Vec3, 4>& vertices, int boundary_resolution = 16);
  static Region mesh(std::vector<Triangle> triangles, int boundary_resolution = 2);

  /// ASCII triangle soup: one triangle per line, 9 floats, '#' comments and
  /// blank lines allowed. Outward orientation required.
  static Region mesh_from_file(const std::string& path, int boundary_resolution = 2);

  Kind kind() const { return kind_; }
  int boundary_resolution() const { return resolution_; }

  /// Same geometry at a different sampler resolution.
  Region with_resolution(int boundary_resolution) const;

  const std::vector<FluxSample>& boundary_samples() const { return boundary_; }
  const std::vector<VolumeSample>& volume_samples() const { return volume_samples_; }

  /// Sum of boundary area weights.
  double surface_area() const { return surface_area_; }

  /// Analytic for box/ball/tetrahedron; the x.n/3 boundary integral for meshes.
  double volume() const { return volume_; }

  /// Length scale used to size finite-difference steps.
  double characteristic_length() const { return char_length_; }

  /// Fixed deterministic volumetric rule: midpoint grid on boxes (exact for
  /// affine integrands), a radial-Gauss x spherical product rule on balls,
  /// centroid sums over red-refined sub-tetrahedra, and an inside-tested
  /// midpoint grid on meshes. Second-order for smooth integrands.
  double volume_integrate(const std::function<double(const Vec3&)>& g) const;

 private:
  Region() = default;
  void build();
  void build_box();
  void build_ball();
  void build_tetrahedron();
  void build_mesh();

  Kind kind_ = Kind::Box;
  int resolution_ = 1;

  Vec3 lo_, hi_;                          // box
  Vec3 center_;                           // ball
  double radius_ = 0.0;                   // ball
  std::array<Vec3, 4> vertices_{};        // tetrahedron
  std::shared_ptr<const std::vector<Triangle>> triangles_;  // mesh

  std::vector<FluxSample> boundary_;
  std::vector<VolumeSample> volume_samples_;
  double surface_area_ = 0.0;
  double volume_ = 0.0;
  double char_length_ = 0.0;
};

/// |integral_{dR} field.n dA - integral_R div(field) dV| with the divergence
/// taken by central finite differences (step 1e-4 x characteristic length).
double gauss_residual(const Region& region, const std::function<Vec3(const Vec3&)>& field);

/// One face of a Cauchy tetrahedron.
struct TetraFace {
  double area = 0.0;
  Direction normal{0.0, 0.0, 1.0};
  Vec3 centroid;
};

/// Tetrahedron with one face of prescribed outward normal (face 0) and three
/// mutually orthogonal faces aligned with a coordinate trihedron. When the
/// requested normal is nearly orthogonal to a coordinate axis the trihedron
/// is replaced by a fixed deterministically rotated one, so axis-aligned
/// normals are valid inputs. Face areas and normals satisfy
/// sum_a A_a n_a = 0 within 1e-12 A_0, and the centroid is the given point.
struct CauchyTetrahedron {
  std::array<TetraFace, 4> faces;  // faces[0] carries the requested normal
  std::array<Vec3, 4> vertices;    // vertices[0] is the apex (the trihedron corner)
  double volume = 0.0;

  Region region(int boundary_resolution = 8) const;
};

CauchyTetrahedron make_tetrahedron(const Vec3& x, double h, const Direction& normal);

}  // namespace radflux
