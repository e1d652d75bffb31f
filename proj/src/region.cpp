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
#include "radflux/region.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <utility>

#include "radflux/parallel.hpp"
#include "radflux/quadrature.hpp"

namespace radflux {

namespace {

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * norm(cross(b - a, c - a));
}

/// Subdivide a triangle into res^2 congruent sub-triangles and emit centroid
/// samples with the given outward normal.
void sample_triangle(const Vec3& a, const Vec3& b, const Vec3& c, const Direction& normal, int res,
                     std::vector<FluxSample>& out) {
  const double cell_area = triangle_area(a, b, c) / (res * res);
  const Vec3 eab = (b - a) / res;
  const Vec3 eac = (c - a) / res;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res - i; ++j) {
      // Upward sub-triangle (i, j).
      const Vec3 p0 = a + eab * i + eac * j;
      const Vec3 up_centroid = p0 + (eab + eac) / 3.0;
      out.push_back({up_centroid, normal, cell_area});
      // Downward partner, absent on the last diagonal row.
      if (j < res - i - 1) {
        const Vec3 down_centroid = p0 + (eab * 2.0 + eac * 2.0) / 3.0;
        out.push_back({down_centroid, normal, cell_area});
      }
    }
  }
}

Direction outward_triangle_normal(const Vec3& a, const Vec3& b, const Vec3& c,
                                  const Vec3& interior_point) {
  const Vec3 n = cross(b - a, c - a);
  const double len = norm(n);
  if (len <= 0.0) throw GeometryError("Region: degenerate triangle face");
  Vec3 unit = n / len;
  if (dot(unit, a - interior_point) < 0.0) unit = -unit;
  return Direction(unit);
}

/// Red refinement of a tetrahedron into 8 children.
void refine_tet(const std::array<Vec3, 4>& t, int depth, std::vector<VolumeSample>& out) {
  if (depth == 0) {
    const double vol = std::fabs(dot(t[1] - t[0], cross(t[2] - t[0], t[3] - t[0]))) / 6.0;
    out.push_back({(t[0] + t[1] + t[2] + t[3]) / 4.0, vol});
    return;
  }
  const Vec3 m01 = (t[0] + t[1]) * 0.5, m02 = (t[0] + t[2]) * 0.5, m03 = (t[0] + t[3]) * 0.5;
  const Vec3 m12 = (t[1] + t[2]) * 0.5, m13 = (t[1] + t[3]) * 0.5, m23 = (t[2] + t[3]) * 0.5;
  const std::array<std::array<Vec3, 4>, 8> children = {{
      {t[0], m01, m02, m03},
      {t[1], m01, m12, m13},
      {t[2], m02, m12, m23},
      {t[3], m03, m13, m23},
      {m01, m02, m03, m13},
      {m01, m02, m12, m13},
      {m02, m03, m13, m23},
      {m02, m12, m13, m23},
  }};
  for (const auto& child : children) refine_tet(child, depth - 1, out);
}

int tet_refinement_depth(int resolution) {
  int depth = 0;
  while ((1 << depth) < resolution && depth < 4) ++depth;
  return depth;
}

/// Fixed ray direction for mesh inside tests; chosen away from mesh axes.
const Vec3 kParityRay = Vec3{0.5381290951, 0.3279517923, 0.7764208741} /
                        norm(Vec3{0.5381290951, 0.3279517923, 0.7764208741});

bool ray_hits_triangle(const Vec3& origin, const Vec3& dir, const Triangle& tri) {
  const Vec3 e1 = tri.b - tri.a;
  const Vec3 e2 = tri.c - tri.a;
  const Vec3 p = cross(dir, e2);
  const double det = dot(e1, p);
  if (std::fabs(det) < 1e-14) return false;
  const double inv = 1.0 / det;
  const Vec3 s = origin - tri.a;
  const double u = dot(s, p) * inv;
  if (u < 0.0 || u > 1.0) return false;
  const Vec3 q = cross(s, e1);
  const double v = dot(dir, q) * inv;
  if (v < 0.0 || u + v > 1.0) return false;
  const double t = dot(e2, q) * inv;
  return t > 0.0;
}

}  // namespace

Region Region::box(const Vec3& lo, const Vec3& hi, int boundary_resolution) {
  if (!(lo.x < hi.x && lo.y < hi.y && lo.z < hi.z)) {
    throw GeometryError("Region::box: min corner must be strictly below max corner");
  }
  Region r;
  r.kind_ = Kind::Box;
  r.lo_ = lo;
  r.hi_ = hi;
  r.resolution_ = std::max(1, boundary_resolution);
  r.build();
  return r;
}

Region Region::ball(const Vec3& center, double radius, int boundary_resolution) {
  if (!(radius > 0.0)) throw GeometryError("Region::ball: radius must be positive");
  Region r;
  r.kind_ = Kind::Ball;
  r.center_ = center;
  r.radius_ = radius;
  r.resolution_ = std::max(1, boundary_resolution);
  r.build();
  return r;
}

Region Region::tetrahedron(const std::array<Vec3, 4>& vertices, int boundary_resolution) {
  Region r;
  r.kind_ = Kind::Tetrahedron;
  r.vertices_ = vertices;
  r.resolution_ = std::max(1, boundary_resolution);
  r.build();
  return r;
}

Region Region::mesh(std::vector<Triangle> triangles, int boundary_resolution) {
  if (triangles.empty()) throw GeometryError("Region::mesh: empty triangle list");
  Region r;
  r.kind_ = Kind::Mesh;
  r.triangles_ = std::make_shared<const std::vector<Triangle>>(std::move(triangles));
  r.resolution_ = std::max(1, boundary_resolution);
  r.build();
  return r;
}

Region Region::mesh_from_file(const std::string& path, int boundary_resolution) {
  std::ifstream in(path);
  if (!in) throw GeometryError("Region::mesh_from_file: cannot open '" + path + "'");
  std::vector<Triangle> tris;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double v[9];
    int got = 0;
    while (got < 9 && (ls >> v[got])) ++got;
    if (got == 0) continue;  // blank or comment-only line
    if (got != 9) {
      throw GeometryError("Region::mesh_from_file: line " + std::to_string(line_no) +
                          " of '" + path + "': expected 9 floats per triangle");
    }
    tris.push_back({{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]}});
  }
  return mesh(std::move(tris), boundary_resolution);
}

Region Region::with_resolution(int boundary_resolution) const {
  Region r = *this;
  r.resolution_ = std::max(1, boundary_resolution);
  r.boundary_.clear();
  r.volume_samples_.clear();
  r.build();
  return r;
}

void Region::build() {
  switch (kind_) {
    case Kind::Box: build_box(); break;
    case Kind::Ball: build_ball(); break;
    case Kind::Tetrahedron: build_tetrahedron(); break;
    case Kind::Mesh: build_mesh(); break;
  }
  surface_area_ = 0.0;
  for (const auto& s : boundary_) surface_area_ += s.area_weight;
}

void Region::build_box() {
  const Vec3 ext = hi_ - lo_;
  char_length_ = norm_inf(ext);
  volume_ = ext.x * ext.y * ext.z;

  const int n = resolution_;
  // Six faces: for each axis, the lo and hi face with fixed coordinate.
  for (int axis = 0; axis < 3; ++axis) {
    const int a1 = (axis + 1) % 3;
    const int a2 = (axis + 2) % 3;
    const double e1 = ext[a1], e2 = ext[a2];
    const double cell = (e1 / n) * (e2 / n);
    for (int side = 0; side < 2; ++side) {
      Vec3 nvec{};
      nvec[axis] = side == 0 ? -1.0 : 1.0;
      const double coord = side == 0 ? lo_[axis] : hi_[axis];
      const Direction normal(nvec);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Vec3 p;
          p[axis] = coord;
          p[a1] = lo_[a1] + (i + 0.5) * e1 / n;
          p[a2] = lo_[a2] + (j + 0.5) * e2 / n;
          boundary_.push_back({p, normal, cell});
        }
      }
    }
  }

  const int m = std::clamp(resolution_, 2, 48);
  volume_samples_.reserve(static_cast<std::size_t>(m) * m * m);
  const double cell_vol = volume_ / (static_cast<double>(m) * m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        const Vec3 p{lo_.x + (i + 0.5) * ext.x / m, lo_.y + (j + 0.5) * ext.y / m,
                     lo_.z + (k + 0.5) * ext.z / m};
        volume_samples_.push_back({p, cell_vol});
      }
    }
  }
}

void Region::build_ball() {
  char_length_ = 2.0 * radius_;
  volume_ = 4.0 / 3.0 * std::numbers::pi * radius_ * radius_ * radius_;

  const SphericalQuadrature sphere = build_quadrature(resolution_);
  const double r2 = radius_ * radius_;
  for (std::size_t k = 0; k < sphere.size(); ++k) {
    const Direction& u = sphere.node(k);
    boundary_.push_back({center_ + u.vec() * radius_, u, r2 * sphere.weight(k)});
  }

  // Volume: Gauss in radius (with r^2 weight) x the same angular rule.
  std::vector<double> gx, gw;
  gauss_legendre(std::max(4, resolution_ + 2), gx, gw);
  for (std::size_t ir = 0; ir < gx.size(); ++ir) {
    const double r = 0.5 * (gx[ir] + 1.0) * radius_;
    const double wr = 0.5 * gw[ir] * radius_ * r * r;
    for (std::size_t k = 0; k < sphere.size(); ++k) {
      volume_samples_.push_back({center_ + sphere.node(k).vec() * r, wr * sphere.weight(k)});
    }
  }
}

void Region::build_tetrahedron() {
  const auto& v = vertices_;
  const double signed_vol = dot(v[1] - v[0], cross(v[2] - v[0], v[3] - v[0])) / 6.0;
  volume_ = std::fabs(signed_vol);
  if (!(volume_ > 0.0)) throw GeometryError("Region::tetrahedron: degenerate vertices");

  char_length_ = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) char_length_ = std::max(char_length_, norm(v[i] - v[j]));
  }

  const Vec3 centroid = (v[0] + v[1] + v[2] + v[3]) / 4.0;
  const std::array<std::array<int, 3>, 4> face_ids = {{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
  for (const auto& f : face_ids) {
    const Direction normal = outward_triangle_normal(v[f[0]], v[f[1]], v[f[2]], centroid);
    sample_triangle(v[f[0]], v[f[1]], v[f[2]], normal, resolution_, boundary_);
  }

  refine_tet(v, tet_refinement_depth(resolution_), volume_samples_);
}

void Region::build_mesh() {
  const auto& tris = *triangles_;

  Vec3 bb_lo = tris[0].a, bb_hi = tris[0].a;
  Vec3 normal_sum{};
  double area_sum = 0.0;
  for (const auto& t : tris) {
    for (const Vec3& p : {t.a, t.b, t.c}) {
      bb_lo = component_min(bb_lo, p);
      bb_hi = component_max(bb_hi, p);
    }
    const Vec3 n = cross(t.b - t.a, t.c - t.a);  // 2 * area-weighted normal
    normal_sum += n * 0.5;
    area_sum += 0.5 * norm(n);
  }
  if (!(area_sum > 0.0)) throw GeometryError("Region::mesh: zero surface area");
  if (norm(normal_sum) > 1e-9 * area_sum) {
    throw GeometryError(
        "Region::mesh: boundary is not closed and outward-oriented "
        "(area-weighted normals do not cancel)");
  }
  char_length_ = norm(bb_hi - bb_lo);

  for (const auto& t : tris) {
    const Vec3 n = cross(t.b - t.a, t.c - t.a);
    const double len = norm(n);
    if (len <= 0.0) throw GeometryError("Region::mesh: degenerate triangle");
    sample_triangle(t.a, t.b, t.c, Direction(n / len), resolution_, boundary_);
  }

  // Volume by the divergence identity: integral of x.n/3 over the boundary.
  volume_ = 0.0;
  for (const auto& s : boundary_) volume_ += dot(s.point, s.normal.vec()) / 3.0 * s.area_weight;
  if (!(volume_ > 0.0)) throw GeometryError("Region::mesh: non-positive enclosed volume");

  // Volume rule: bounding-box midpoint grid restricted by ray parity.
  const int m = std::clamp(4 * resolution_, 8, 32);
  const Vec3 ext = bb_hi - bb_lo;
  const double cell_vol = (ext.x / m) * (ext.y / m) * (ext.z / m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        const Vec3 p{bb_lo.x + (i + 0.5) * ext.x / m, bb_lo.y + (j + 0.5) * ext.y / m,
                     bb_lo.z + (k + 0.5) * ext.z / m};
        int hits = 0;
        for (const auto& t : tris) {
          if (ray_hits_triangle(p, kParityRay, t)) ++hits;
        }
        if (hits % 2 == 1) volume_samples_.push_back({p, cell_vol});
      }
    }
  }
}

double Region::volume_integrate(const std::function<double(const Vec3&)>& g) const {
  const auto& samples = volume_samples_;
  return chunked_sum<double>(samples.size(), [&](std::size_t i) {
    const double v = g(samples[i].point);
    if (!std::isfinite(v)) {
      throw EvaluationError("volume_integrate: non-finite integrand", samples[i].point);
    }
    return samples[i].weight * v;
  });
}

double gauss_residual(const Region& region, const std::function<Vec3(const Vec3&)>& field) {
  const auto& samples = region.boundary_samples();
  const double boundary = chunked_sum<double>(samples.size(), [&](std::size_t i) {
    const Vec3 f = field(samples[i].point);
    if (!std::isfinite(f.x) || !std::isfinite(f.y) || !std::isfinite(f.z)) {
      throw EvaluationError("gauss_residual: non-finite field", samples[i].point);
    }
    return dot(f, samples[i].normal.vec()) * samples[i].area_weight;
  });

  const double h = 1e-4 * region.characteristic_length();
  auto divergence = [&](const Vec3& x) {
    double div = 0.0;
    div += (field({x.x + h, x.y, x.z}).x - field({x.x - h, x.y, x.z}).x) / (2.0 * h);
    div += (field({x.x, x.y + h, x.z}).y - field({x.x, x.y - h, x.z}).y) / (2.0 * h);
    div += (field({x.x, x.y, x.z + h}).z - field({x.x, x.y, x.z - h}).z) / (2.0 * h);
    return div;
  };
  const double volume_side = region.volume_integrate(divergence);
  return std::fabs(boundary - volume_side);
}

namespace {

Vec3 rotate_axis_angle(const Vec3& axis, double angle, const Vec3& v) {
  const Vec3 k = axis / norm(axis);
  const double c = std::cos(angle), s = std::sin(angle);
  return v * c + cross(k, v) * s + k * dot(k, v) * (1.0 - c);
}

/// Coordinate trihedron for the Cauchy construction. Prefers the standard
/// basis; falls back to fixed rotations of it when the requested normal is
/// nearly orthogonal to an axis.
std::array<Vec3, 3> select_trihedron(const Vec3& n) {
  const std::array<Vec3, 3> identity = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  const std::array<std::pair<Vec3, double>, 3> rotations = {{
      {{1.0, 1.0, 1.0}, 0.4},
      {{1.0, -2.0, 3.0}, 0.7},
      {{-2.0, 1.0, 1.0}, 1.1},
  }};

  auto quality = [&n](const std::array<Vec3, 3>& frame) {
    double q = 1.0;
    for (const auto& f : frame) q = std::min(q, std::fabs(dot(n, f)));
    return q;
  };

  std::array<Vec3, 3> best = identity;
  double best_q = quality(identity);
  if (best_q >= 0.05) return identity;
  for (const auto& [axis, angle] : rotations) {
    std::array<Vec3, 3> frame;
    for (int i = 0; i < 3; ++i) frame[i] = rotate_axis_angle(axis, angle, identity[i]);
    const double q = quality(frame);
    if (q >= 0.05) return frame;
    if (q > best_q) {
      best_q = q;
      best = frame;
    }
  }
  return best;
}

}  // namespace

CauchyTetrahedron make_tetrahedron(const Vec3& x, double h, const Direction& normal) {
  if (!(h > 0.0)) throw std::invalid_argument("make_tetrahedron: h must be positive");

  const Vec3 n = normal.vec();
  const std::array<Vec3, 3> frame = select_trihedron(n);

  // Signed axes u_i and leg lengths b_i so that the three frame-aligned edges
  // from the apex span the slant plane {y : n.(y - apex) = h}.
  std::array<Vec3, 3> axes;
  std::array<double, 3> legs{};
  for (int i = 0; i < 3; ++i) {
    const double c = dot(n, frame[i]);
    axes[i] = c >= 0.0 ? frame[i] : -frame[i];
    legs[i] = h / std::fabs(c);
  }

  const Vec3 span = axes[0] * legs[0] + axes[1] * legs[1] + axes[2] * legs[2];
  const Vec3 apex = x - span / 4.0;  // centroid of the tetrahedron lands on x

  CauchyTetrahedron tet;
  tet.vertices[0] = apex;
  for (int i = 0; i < 3; ++i) tet.vertices[i + 1] = apex + axes[i] * legs[i];

  // Slant face through the three leg tips, outward normal = requested normal.
  const Vec3& p1 = tet.vertices[1];
  const Vec3& p2 = tet.vertices[2];
  const Vec3& p3 = tet.vertices[3];
  tet.faces[0] = {triangle_area(p1, p2, p3), normal, (p1 + p2 + p3) / 3.0};

  // Coordinate faces: the face omitting leg i has outward normal -axes[i].
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const Vec3& q1 = tet.vertices[j + 1];
    const Vec3& q2 = tet.vertices[k + 1];
    tet.faces[i + 1] = {triangle_area(apex, q1, q2), Direction(-axes[i]),
                        (apex + q1 + q2) / 3.0};
  }

  tet.volume = legs[0] * legs[1] * legs[2] / 6.0;
  return tet;
}

Region CauchyTetrahedron::region(int boundary_resolution) const {
  return Region::tetrahedron(vertices, boundary_resolution);
}

}  // namespace radflux
