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
#include "radflux/balance.hpp"

#include <cmath>
#include <stdexcept>

namespace radflux {

namespace {

double fd_step_for(const Vec3& x) { return 1e-4 * std::max(1.0, norm_inf(x)); }

/// Central-difference directional derivative of i_u at x.
double fd_directional_derivative(const ScalarRadianceField& field, const Vec3& x,
                                 const Direction& u, double h) {
  Vec3 g;
  g.x = (field.eval({x.x + h, x.y, x.z}, u) - field.eval({x.x - h, x.y, x.z}, u)) / (2.0 * h);
  g.y = (field.eval({x.x, x.y + h, x.z}, u) - field.eval({x.x, x.y - h, x.z}, u)) / (2.0 * h);
  g.z = (field.eval({x.x, x.y, x.z + h}, u) - field.eval({x.x, x.y, x.z - h}, u)) / (2.0 * h);
  return dot(g, u.vec());
}

}  // namespace

CauchyMap CauchyMap::from_flux_vector(std::function<Vec3(const Vec3&)> field) {
  CauchyMap map;
  map.eval = [field = std::move(field)](const Vec3& x, const Direction& n) {
    return dot(field(x), n.vec());
  };
  return map;
}

CauchyMap CauchyMap::from_radiance(const ScalarRadianceField& field, const Direction& u) {
  CauchyMap map;
  map.eval = [field, u](const Vec3& x, const Direction& n) {
    return lambert_density(field, x, u, n);
  };
  return map;
}

CauchyMap CauchyMap::from_tensor(const RadianceTensor& tensor) {
  CauchyMap map;
  map.eval_measure = [tensor](const Vec3& x, const Direction& n) {
    return apply_to_normal(tensor, x, n.vec());
  };
  return map;
}

double tetrahedron_residual(const CauchyMap& map, const Vec3& x, const Direction& normal, double h,
                            TetraEvalMode mode) {
  const CauchyTetrahedron tet = make_tetrahedron(x, h, normal);
  const double a0 = tet.faces[0].area;

  auto eval_point = [&](const TetraFace& face) {
    return mode == TetraEvalMode::FrozenAtPoint ? x : face.centroid;
  };

  if (map.eval_measure) {
    const SphereMeasure first = map.eval_measure(eval_point(tet.faces[0]), tet.faces[0].normal);
    SphereMeasure sum = SphereMeasure::zero(first.quad_ptr());
    sum = combine(1.0, sum, tet.faces[0].area, first);
    for (int a = 1; a < 4; ++a) {
      sum = combine(1.0, sum, tet.faces[a].area,
                    map.eval_measure(eval_point(tet.faces[a]), tet.faces[a].normal));
    }
    return norm(sum) / a0;
  }

  if (!map.eval) throw std::invalid_argument("tetrahedron_residual: empty Cauchy map");
  double sum = 0.0;
  for (const auto& face : tet.faces) {
    const double v = map.eval(eval_point(face), face.normal);
    if (!std::isfinite(v)) {
      throw EvaluationError("tetrahedron_residual: non-finite flux density", face.centroid);
    }
    sum += v * face.area;
  }
  return std::fabs(sum) / a0;
}

BalanceData BalanceData::zero() {
  return {[](const Vec3&, const Direction&) { return 0.0; },
          [](const Vec3&, const Direction&) { return 0.0; }};
}

BalanceData BalanceData::consistent_with(const ScalarRadianceField& field) {
  return {[](const Vec3&, const Direction&) { return 0.0; },
          [field](const Vec3& x, const Direction& u) {
            return field.directional_derivative(x, u, fd_step_for(x));
          }};
}

BoundednessReport boundedness_constant(const ScalarRadianceField& field, const Direction& u,
                                       const Region& region) {
  BoundednessReport report;
  const double h = 1e-4 * region.characteristic_length();
  for (const auto& s : region.volume_samples()) {
    report.constant =
        std::max(report.constant, std::fabs(fd_directional_derivative(field, s.point, u, h)));
  }
  report.power = directional_power(field, region, u);
  report.bound = report.constant * region.volume();
  report.verified = std::fabs(report.power) <= report.bound + 1e-9;
  return report;
}

double differential_balance_residual(const ScalarRadianceField& field, const BalanceData& data,
                                     const Vec3& x, const Direction& u) {
  const double deriv = fd_directional_derivative(field, x, u, fd_step_for(x));
  return std::fabs(deriv + data.rho_dot(x, u) - data.source(x, u));
}

RayConservationReport ray_conservation_residual(const ScalarRadianceField& field,
                                                const Direction& u,
                                                const std::pair<Vec3, Vec3>& segment,
                                                int samples) {
  if (samples < 2) throw std::invalid_argument("ray_conservation_residual: samples must be >= 2");
  const Vec3 delta = segment.second - segment.first;
  const double length = norm(delta);
  if (!(length > 0.0)) {
    throw std::invalid_argument("ray_conservation_residual: degenerate segment");
  }
  if (norm(cross(delta / length, u.vec())) > 1e-9) {
    throw std::invalid_argument("ray_conservation_residual: segment is not parallel to u");
  }

  RayConservationReport report;
  const double h = 1e-4 * std::max(1.0, length);
  for (int i = 0; i < samples; ++i) {
    const Vec3 p = segment.first + delta * (static_cast<double>(i) / (samples - 1));
    report.max_directional_derivative =
        std::max(report.max_directional_derivative,
                 std::fabs(fd_directional_derivative(field, p, u, h)));
  }
  report.endpoint_difference =
      std::fabs(field.eval(segment.second, u) - field.eval(segment.first, u));
  return report;
}

double integral_balance_residual(const ScalarRadianceField& field, const BalanceData& data,
                                 const Region& region, const Direction& u) {
  const double rate = region.volume_integrate([&](const Vec3& x) { return data.rho_dot(x, u); });
  const double supply = region.volume_integrate([&](const Vec3& x) { return data.source(x, u); });
  const double power = directional_power(field, region, u);
  return std::fabs(rate + power - supply);
}

double virtual_power_residual(const ScalarRadianceField& field, const BalanceData& data,
                              const Region& region, const Direction& u,
                              const std::function<double(const Vec3&)>& meter_variation) {
  const auto& samples = region.boundary_samples();
  const double surface = chunked_sum<double>(samples.size(), [&](std::size_t i) {
    const auto& s = samples[i];
    return lambert_density(field, s.point, u, s.normal) * meter_variation(s.point) *
           s.area_weight;
  });

  const double volume_term = region.volume_integrate([&](const Vec3& x) {
    return meter_variation(x) * (data.rho_dot(x, u) - data.source(x, u));
  });

  const double h = 1e-4 * region.characteristic_length();
  const double meter_gradient_term = region.volume_integrate([&](const Vec3& x) {
    Vec3 grad_w;
    grad_w.x = (meter_variation({x.x + h, x.y, x.z}) - meter_variation({x.x - h, x.y, x.z})) /
               (2.0 * h);
    grad_w.y = (meter_variation({x.x, x.y + h, x.z}) - meter_variation({x.x, x.y - h, x.z})) /
               (2.0 * h);
    grad_w.z = (meter_variation({x.x, x.y, x.z + h}) - meter_variation({x.x, x.y, x.z - h})) /
               (2.0 * h);
    return field.eval(x, u) * dot(grad_w, u.vec());
  });

  return std::fabs(surface + volume_term - meter_gradient_term);
}

}  // namespace radflux
