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
#include "radflux/scene.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace radflux {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SceneError("scene: " + where + ": " + what);
}

double get_number(const json& j, const std::string& where, const std::string& key) {
  if (!j.contains(key)) fail(where, "missing key '" + key + "'");
  if (!j[key].is_number()) fail(where, "key '" + key + "' must be a number");
  const double v = j[key].get<double>();
  if (!std::isfinite(v)) fail(where, "key '" + key + "' must be finite");
  return v;
}

double get_number_or(const json& j, const std::string& where, const std::string& key,
                     double fallback) {
  return j.contains(key) ? get_number(j, where, key) : fallback;
}

int get_int(const json& j, const std::string& where, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) fail(where, "key '" + key + "' must be an integer");
  return j[key].get<int>();
}

std::string get_string(const json& j, const std::string& where, const std::string& key) {
  if (!j.contains(key)) fail(where, "missing key '" + key + "'");
  if (!j[key].is_string()) fail(where, "key '" + key + "' must be a string");
  return j[key].get<std::string>();
}

Vec3 parse_vec3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) fail(where, "expected an array of 3 numbers");
  Vec3 v;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number()) fail(where, "expected an array of 3 numbers");
    v[i] = j[i].get<double>();
    if (!std::isfinite(v[i])) fail(where, "vector component must be finite");
  }
  return v;
}

Vec3 get_vec3(const json& j, const std::string& where, const std::string& key) {
  if (!j.contains(key)) fail(where, "missing key '" + key + "'");
  return parse_vec3(j[key], where + "." + key);
}

AffineSpec parse_affine(const json& j, const std::string& where) {
  AffineSpec a;
  a.offset = get_number_or(j, where, "offset", 0.0);
  if (j.contains("gradient")) a.gradient = get_vec3(j, where, "gradient");
  return a;
}

ProfileSpec parse_profile(const json& j, const std::string& where) {
  ProfileSpec p;
  const std::string type = get_string(j, where, "type");
  if (type == "affine") {
    p.type = ProfileSpec::Type::Affine;
    p.offset = get_number_or(j, where, "offset", 0.0);
  } else if (type == "exponential") {
    p.type = ProfileSpec::Type::Exponential;
    p.scale = get_number_or(j, where, "scale", 1.0);
  } else {
    fail(where, "unknown profile type '" + type + "'");
  }
  p.coefficients = get_vec3(j, where, "coefficients");
  return p;
}

RegionSpec parse_region(const json& j, const std::string& where) {
  RegionSpec r;
  const std::string kind = get_string(j, where, "kind");
  r.boundary_resolution = get_int(j, where, "boundary_resolution", 16);
  if (kind == "box") {
    r.kind = RegionSpec::Kind::Box;
    r.min = get_vec3(j, where, "min");
    r.max = get_vec3(j, where, "max");
  } else if (kind == "ball") {
    r.kind = RegionSpec::Kind::Ball;
    r.center = get_vec3(j, where, "center");
    r.radius = get_number(j, where, "radius");
  } else if (kind == "tetrahedron") {
    r.kind = RegionSpec::Kind::Tetrahedron;
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].size() != 4) {
      fail(where, "tetrahedron needs a 'vertices' array of 4 points");
    }
    for (int i = 0; i < 4; ++i) r.vertices[i] = parse_vec3(j["vertices"][i], where + ".vertices");
  } else if (kind == "mesh") {
    r.kind = RegionSpec::Kind::Mesh;
    r.path = get_string(j, where, "path");
  } else {
    fail(where, "unknown region kind '" + kind + "'");
  }
  return r;
}

FieldSpec parse_field(const json& j, const std::string& where) {
  FieldSpec f;
  const std::string builder = get_string(j, where, "builder");
  if (builder == "isotropic") {
    f.builder = FieldSpec::Builder::Isotropic;
    f.radiance = get_number(j, where, "radiance");
  } else if (builder == "affine") {
    f.builder = FieldSpec::Builder::Affine;
    f.offset = get_number_or(j, where, "offset", 0.0);
    f.gradient = get_vec3(j, where, "gradient");
  } else if (builder == "transported") {
    f.builder = FieldSpec::Builder::Transported;
    f.axis = get_vec3(j, where, "axis");
    if (!j.contains("profile")) fail(where, "missing key 'profile'");
    f.profile = parse_profile(j["profile"], where + ".profile");
  } else if (builder == "lambert_surface") {
    f.builder = FieldSpec::Builder::LambertSurface;
    f.radiance = get_number(j, where, "radiance");
    f.axis = get_vec3(j, where, "axis");
  } else {
    fail(where, "unknown field builder '" + builder + "'");
  }
  return f;
}

TensorSpec parse_tensor(const json& j, const std::string& where) {
  TensorSpec t;
  const std::string builder = get_string(j, where, "builder");
  if (builder == "conforming_density") {
    t.builder = TensorSpec::Builder::ConformingDensity;
    t.field = get_string(j, where, "field");
  } else if (builder == "conforming_atoms") {
    t.builder = TensorSpec::Builder::ConformingAtoms;
    if (!j.contains("atoms") || !j["atoms"].is_array() || j["atoms"].empty()) {
      fail(where, "conforming_atoms needs a non-empty 'atoms' array");
    }
    for (const auto& a : j["atoms"]) {
      AtomSpec atom;
      atom.direction = get_vec3(a, where + ".atoms[]", "direction");
      if (!a.contains("weight")) fail(where + ".atoms[]", "missing key 'weight'");
      atom.weight = parse_affine(a["weight"], where + ".atoms[].weight");
      t.atoms.push_back(atom);
    }
  } else if (builder == "rotated") {
    t.builder = TensorSpec::Builder::Rotated;
    t.base = get_string(j, where, "base");
    t.axis = get_vec3(j, where, "axis");
    t.angle = get_number(j, where, "angle");
  } else {
    fail(where, "unknown tensor builder '" + builder + "'");
  }
  return t;
}

BalanceSpec parse_balance(const json& j, const std::string& where) {
  BalanceSpec b;
  const std::string type = get_string(j, where, "type");
  if (type == "zero") {
    b.type = BalanceSpec::Type::Zero;
  } else if (type == "analytic-consistent") {
    b.type = BalanceSpec::Type::AnalyticConsistent;
    b.field = get_string(j, where, "field");
  } else if (type == "explicit") {
    b.type = BalanceSpec::Type::Explicit;
    if (j.contains("rho_dot")) b.rho_dot = parse_affine(j["rho_dot"], where + ".rho_dot");
    if (j.contains("source")) b.source = parse_affine(j["source"], where + ".source");
  } else {
    fail(where, "unknown balance type '" + type + "'");
  }
  return b;
}

json vec3_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json affine_json(const AffineSpec& a) {
  json j;
  j["offset"] = a.offset;
  j["gradient"] = vec3_json(a.gradient);
  return j;
}

}  // namespace

double ProfileSpec::value(const Vec3& p) const {
  const double t = dot(coefficients, p);
  return type == Type::Affine ? offset + t : scale * std::exp(t);
}

Vec3 ProfileSpec::gradient(const Vec3& p) const {
  return type == Type::Affine ? coefficients : coefficients * (scale * std::exp(dot(coefficients, p)));
}

Scene parse_scene(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SceneError(std::string("scene: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SceneError("scene: top level must be an object");

  Scene scene;
  scene.schema_version = get_int(doc, "top level", "schema_version", 1);
  if (scene.schema_version != 1) {
    fail("top level", "unsupported schema_version " + std::to_string(scene.schema_version));
  }
  scene.quadrature_level = get_int(doc, "top level", "quadrature_level", 4);
  if (scene.quadrature_level < 1) fail("top level", "quadrature_level must be >= 1");

  if (doc.contains("regions")) {
    for (const auto& [name, j] : doc["regions"].items()) {
      scene.regions[name] = parse_region(j, "regions." + name);
    }
  }
  if (doc.contains("fields")) {
    for (const auto& [name, j] : doc["fields"].items()) {
      scene.fields[name] = parse_field(j, "fields." + name);
    }
  }
  if (doc.contains("tensors")) {
    for (const auto& [name, j] : doc["tensors"].items()) {
      scene.tensors[name] = parse_tensor(j, "tensors." + name);
    }
  }
  if (doc.contains("balance")) {
    for (const auto& [name, j] : doc["balance"].items()) {
      scene.balance[name] = parse_balance(j, "balance." + name);
    }
  }
  if (doc.contains("meters")) {
    for (const auto& [name, j] : doc["meters"].items()) {
      scene.meters[name] = parse_affine(j, "meters." + name);
    }
  }

  // Cross-references must resolve.
  for (const auto& [name, t] : scene.tensors) {
    if (t.builder == TensorSpec::Builder::ConformingDensity && !scene.fields.count(t.field)) {
      fail("tensors." + name, "unknown field '" + t.field + "'");
    }
    if (t.builder == TensorSpec::Builder::Rotated) {
      auto base = scene.tensors.find(t.base);
      if (base == scene.tensors.end()) fail("tensors." + name, "unknown base tensor '" + t.base + "'");
      if (base->second.builder == TensorSpec::Builder::Rotated) {
        fail("tensors." + name, "base tensor must be a conforming tensor");
      }
    }
  }
  for (const auto& [name, b] : scene.balance) {
    if (b.type == BalanceSpec::Type::AnalyticConsistent && !scene.fields.count(b.field)) {
      fail("balance." + name, "unknown field '" + b.field + "'");
    }
  }

  return scene;
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SceneError("scene: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

std::string serialize_scene(const Scene& scene) {
  json doc;
  doc["schema_version"] = scene.schema_version;
  doc["quadrature_level"] = scene.quadrature_level;

  json regions = json::object();
  for (const auto& [name, r] : scene.regions) {
    json j;
    switch (r.kind) {
      case RegionSpec::Kind::Box:
        j["kind"] = "box";
        j["min"] = vec3_json(r.min);
        j["max"] = vec3_json(r.max);
        break;
      case RegionSpec::Kind::Ball:
        j["kind"] = "ball";
        j["center"] = vec3_json(r.center);
        j["radius"] = r.radius;
        break;
      case RegionSpec::Kind::Tetrahedron: {
        j["kind"] = "tetrahedron";
        json verts = json::array();
        for (const auto& v : r.vertices) verts.push_back(vec3_json(v));
        j["vertices"] = verts;
        break;
      }
      case RegionSpec::Kind::Mesh:
        j["kind"] = "mesh";
        j["path"] = r.path;
        break;
    }
    j["boundary_resolution"] = r.boundary_resolution;
    regions[name] = j;
  }
  doc["regions"] = regions;

  json fields = json::object();
  for (const auto& [name, f] : scene.fields) {
    json j;
    switch (f.builder) {
      case FieldSpec::Builder::Isotropic:
        j["builder"] = "isotropic";
        j["radiance"] = f.radiance;
        break;
      case FieldSpec::Builder::Affine:
        j["builder"] = "affine";
        j["offset"] = f.offset;
        j["gradient"] = vec3_json(f.gradient);
        break;
      case FieldSpec::Builder::Transported: {
        j["builder"] = "transported";
        j["axis"] = vec3_json(f.axis);
        json p;
        if (f.profile.type == ProfileSpec::Type::Affine) {
          p["type"] = "affine";
          p["offset"] = f.profile.offset;
        } else {
          p["type"] = "exponential";
          p["scale"] = f.profile.scale;
        }
        p["coefficients"] = vec3_json(f.profile.coefficients);
        j["profile"] = p;
        break;
      }
      case FieldSpec::Builder::LambertSurface:
        j["builder"] = "lambert_surface";
        j["radiance"] = f.radiance;
        j["axis"] = vec3_json(f.axis);
        break;
    }
    fields[name] = j;
  }
  doc["fields"] = fields;

  json tensors = json::object();
  for (const auto& [name, t] : scene.tensors) {
    json j;
    switch (t.builder) {
      case TensorSpec::Builder::ConformingDensity:
        j["builder"] = "conforming_density";
        j["field"] = t.field;
        break;
      case TensorSpec::Builder::ConformingAtoms: {
        j["builder"] = "conforming_atoms";
        json atoms = json::array();
        for (const auto& a : t.atoms) {
          json aj;
          aj["direction"] = vec3_json(a.direction);
          aj["weight"] = affine_json(a.weight);
          atoms.push_back(aj);
        }
        j["atoms"] = atoms;
        break;
      }
      case TensorSpec::Builder::Rotated:
        j["builder"] = "rotated";
        j["base"] = t.base;
        j["axis"] = vec3_json(t.axis);
        j["angle"] = t.angle;
        break;
    }
    tensors[name] = j;
  }
  doc["tensors"] = tensors;

  json balance = json::object();
  for (const auto& [name, b] : scene.balance) {
    json j;
    switch (b.type) {
      case BalanceSpec::Type::Zero:
        j["type"] = "zero";
        break;
      case BalanceSpec::Type::AnalyticConsistent:
        j["type"] = "analytic-consistent";
        j["field"] = b.field;
        break;
      case BalanceSpec::Type::Explicit:
        j["type"] = "explicit";
        j["rho_dot"] = affine_json(b.rho_dot);
        j["source"] = affine_json(b.source);
        break;
    }
    balance[name] = j;
  }
  doc["balance"] = balance;

  json meters = json::object();
  for (const auto& [name, m] : scene.meters) meters[name] = affine_json(m);
  doc["meters"] = meters;

  return doc.dump(2) + "\n";
}

CompiledScene::CompiledScene(Scene scene, std::string base_dir)
    : scene_(std::move(scene)), base_dir_(std::move(base_dir)) {
  quad_ = make_quadrature(scene_.quadrature_level);
  for (const auto& [name, spec] : scene_.regions) {
    try {
      switch (spec.kind) {
        case RegionSpec::Kind::Box:
          regions_.emplace(name, Region::box(spec.min, spec.max, spec.boundary_resolution));
          break;
        case RegionSpec::Kind::Ball:
          regions_.emplace(name,
                           Region::ball(spec.center, spec.radius, spec.boundary_resolution));
          break;
        case RegionSpec::Kind::Tetrahedron:
          regions_.emplace(name,
                           Region::tetrahedron(spec.vertices, spec.boundary_resolution));
          break;
        case RegionSpec::Kind::Mesh:
          regions_.emplace(name, Region::mesh_from_file(base_dir_ + "/" + spec.path,
                                                        spec.boundary_resolution));
          break;
      }
    } catch (const GeometryError& e) {
      throw SceneError("scene: regions." + name + ": " + e.what());
    }
  }
}

const Region& CompiledScene::region(const std::string& name) const {
  auto it = regions_.find(name);
  if (it == regions_.end()) throw SceneError("scene: unknown region '" + name + "'");
  return it->second;
}

ScalarRadianceField CompiledScene::field(const std::string& name) const {
  auto it = scene_.fields.find(name);
  if (it == scene_.fields.end()) throw SceneError("scene: unknown field '" + name + "'");
  const FieldSpec& f = it->second;
  switch (f.builder) {
    case FieldSpec::Builder::Isotropic:
      return ScalarRadianceField::isotropic(f.radiance);
    case FieldSpec::Builder::Affine:
      return ScalarRadianceField::affine(f.offset, f.gradient);
    case FieldSpec::Builder::Transported: {
      const ProfileSpec profile = f.profile;
      return ScalarRadianceField::transported(
          Direction(f.axis), [profile](const Vec3& p) { return profile.value(p); },
          [profile](const Vec3& p) { return profile.gradient(p); });
    }
    case FieldSpec::Builder::LambertSurface:
      return ScalarRadianceField::lambert_surface(f.radiance, Direction(f.axis));
  }
  throw SceneError("scene: unknown field builder");
}

namespace {

Vec3 rodrigues(const Vec3& axis, double angle, const Vec3& v) {
  const Vec3 k = axis / norm(axis);
  const double c = std::cos(angle), s = std::sin(angle);
  return v * c + cross(k, v) * s + k * dot(k, v) * (1.0 - c);
}

}  // namespace

RadianceTensor CompiledScene::tensor(const std::string& name) const {
  auto it = scene_.tensors.find(name);
  if (it == scene_.tensors.end()) throw SceneError("scene: unknown tensor '" + name + "'");
  const TensorSpec& t = it->second;

  switch (t.builder) {
    case TensorSpec::Builder::ConformingDensity: {
      const ScalarRadianceField f = field(t.field);
      return RadianceTensor::conforming_from_field(quad_, f);
    }
    case TensorSpec::Builder::ConformingAtoms: {
      std::vector<std::pair<Direction, std::function<double(const Vec3&)>>> atoms;
      for (const auto& a : t.atoms) {
        const AffineSpec w = a.weight;
        atoms.emplace_back(Direction(a.direction), [w](const Vec3& x) { return w(x); });
      }
      return RadianceTensor::conforming(quad_, nullptr, std::move(atoms));
    }
    case TensorSpec::Builder::Rotated: {
      const TensorSpec& base = scene_.tensors.at(t.base);
      const Vec3 axis = t.axis;
      const double angle = t.angle;
      if (base.builder == TensorSpec::Builder::ConformingDensity) {
        const ScalarRadianceField f = field(base.field);
        return RadianceTensor::general(quad_, [f, axis, angle](const Vec3& x, const Direction& u) {
          return rodrigues(axis, angle, u.vec()) * f.eval(x, u);
        });
      }
      std::vector<std::pair<Direction, std::function<Vec3(const Vec3&)>>> atoms;
      for (const auto& a : base.atoms) {
        const AffineSpec w = a.weight;
        const Vec3 rotated = rodrigues(axis, angle, Direction(a.direction).vec());
        atoms.emplace_back(Direction(a.direction),
                           [w, rotated](const Vec3& x) { return rotated * w(x); });
      }
      return RadianceTensor::general(quad_, nullptr, std::move(atoms));
    }
  }
  throw SceneError("scene: unknown tensor builder");
}

BalanceData CompiledScene::balance(const std::string& name) const {
  auto it = scene_.balance.find(name);
  if (it == scene_.balance.end()) throw SceneError("scene: unknown balance data '" + name + "'");
  const BalanceSpec& b = it->second;
  switch (b.type) {
    case BalanceSpec::Type::Zero:
      return BalanceData::zero();
    case BalanceSpec::Type::AnalyticConsistent:
      return BalanceData::consistent_with(field(b.field));
    case BalanceSpec::Type::Explicit: {
      const AffineSpec rd = b.rho_dot;
      const AffineSpec src = b.source;
      return {[rd](const Vec3& x, const Direction&) { return rd(x); },
              [src](const Vec3& x, const Direction&) { return src(x); }};
    }
  }
  throw SceneError("scene: unknown balance type");
}

std::function<double(const Vec3&)> CompiledScene::meter(const std::string& name) const {
  auto it = scene_.meters.find(name);
  if (it == scene_.meters.end()) throw SceneError("scene: unknown meter '" + name + "'");
  const AffineSpec m = it->second;
  return [m](const Vec3& x) { return m(x); };
}

}  // namespace radflux
