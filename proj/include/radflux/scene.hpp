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
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "radflux/balance.hpp"
#include "radflux/radiance_field.hpp"
#include "radflux/radiance_tensor.hpp"
#include "radflux/region.hpp"

namespace radflux {

/// Affine scalar of position: offset + gradient.x.
struct AffineSpec {
  double offset = 0.0;
  Vec3 gradient{};

  double operator()(const Vec3& x) const { return offset + dot(gradient, x); }

  bool operator==(const AffineSpec&) const = default;
};

/// Parameterized 1-argument profile for transported fields. Both variants
/// carry analytic gradients.
struct ProfileSpec {
  enum class Type { Affine, Exponential };

  Type type = Type::Affine;
  double offset = 0.0;   // affine: offset + coefficients.x
  double scale = 1.0;    // exponential: scale * exp(coefficients.x)
  Vec3 coefficients{};

  double value(const Vec3& p) const;
  Vec3 gradient(const Vec3& p) const;

  bool operator==(const ProfileSpec&) const = default;
};

struct RegionSpec {
  enum class Kind { Box, Ball, Tetrahedron, Mesh };

  Kind kind = Kind::Box;
  Vec3 min, max;                     // box
  Vec3 center;                       // ball
  double radius = 0.0;               // ball
  std::array<Vec3, 4> vertices{};    // tetrahedron
  std::string path;                  // mesh, relative to the scene file
  int boundary_resolution = 16;

  bool operator==(const RegionSpec&) const = default;
};

struct FieldSpec {
  enum class Builder { Isotropic, Affine, Transported, LambertSurface };

  Builder builder = Builder::Isotropic;
  double radiance = 0.0;     // isotropic, lambert_surface
  double offset = 0.0;       // affine
  Vec3 gradient{};           // affine
  Vec3 axis{0.0, 0.0, 1.0};  // lambert_surface axis / transported axis
  ProfileSpec profile{};     // transported

  bool operator==(const FieldSpec&) const = default;
};

struct AtomSpec {
  Vec3 direction{0.0, 0.0, 1.0};
  AffineSpec weight;

  bool operator==(const AtomSpec&) const = default;
};

struct TensorSpec {
  enum class Builder { ConformingDensity, ConformingAtoms, Rotated };

  Builder builder = Builder::ConformingDensity;
  std::string field;            // conforming_density: scalar field reference
  std::vector<AtomSpec> atoms;  // conforming_atoms
  std::string base;             // rotated: name of a conforming tensor
  Vec3 axis{0.0, 0.0, 1.0};     // rotated
  double angle = 0.0;           // rotated, radians

  bool operator==(const TensorSpec&) const = default;
};

struct BalanceSpec {
  enum class Type { Zero, AnalyticConsistent, Explicit };

  Type type = Type::Zero;
  std::string field;   // analytic-consistent: field whose divergence closes the balance
  AffineSpec rho_dot;  // explicit
  AffineSpec source;   // explicit

  bool operator==(const BalanceSpec&) const = default;
};

/// Parsed scene file: named geometry, fields, tensors, balance data and
/// radiance-meter variations, plus the quadrature level shared by all
/// sphere integrations.
struct Scene {
  int schema_version = 1;
  int quadrature_level = 4;
  std::map<std::string, RegionSpec> regions;
  std::map<std::string, FieldSpec> fields;
  std::map<std::string, TensorSpec> tensors;
  std::map<std::string, BalanceSpec> balance;
  std::map<std::string, AffineSpec> meters;

  bool operator==(const Scene&) const = default;
};

/// Parses scene JSON. Throws SceneError with a byte-offset location on
/// malformed input and with the entity/key name on schema violations.
Scene parse_scene(const std::string& json_text);

/// Reads and parses a scene file.
Scene load_scene_file(const std::string& path);

/// Canonical serialization: sorted names, shortest round-trip numbers.
/// parse(serialize(s)) == s.
std::string serialize_scene(const Scene& scene);

/// Resolves scene references into built objects. Regions are constructed
/// eagerly (validating geometry); fields, tensors, balance data and meters
/// are built on demand. Unknown names throw SceneError.
class CompiledScene {
 public:
  explicit CompiledScene(Scene scene, std::string base_dir = ".");

  const Scene& spec() const { return scene_; }
  const std::shared_ptr<const SphericalQuadrature>& quadrature() const { return quad_; }

  const Region& region(const std::string& name) const;
  ScalarRadianceField field(const std::string& name) const;
  RadianceTensor tensor(const std::string& name) const;
  BalanceData balance(const std::string& name) const;
  std::function<double(const Vec3&)> meter(const std::string& name) const;

 private:
  Scene scene_;
  std::string base_dir_;
  std::shared_ptr<const SphericalQuadrature> quad_;
  std::map<std::string, Region> regions_;
};

}  // namespace radflux
