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
#include "radflux/radiance_tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace radflux {

RadianceTensor RadianceTensor::conforming(
    std::shared_ptr<const SphericalQuadrature> quad,
    std::function<double(const Vec3&, const Direction&)> density,
    std::vector<std::pair<Direction, std::function<double(const Vec3&)>>> atoms) {
  RadianceTensor t;
  t.quad_ = std::move(quad);
  t.conforming_ = true;
  if (density) {
    t.density_ = [density](const Vec3& x, const Direction& u) {
      const double rho = density(x, u);
      if (!std::isfinite(rho)) {
        throw EvaluationError("RadianceTensor: non-finite density", u.vec());
      }
      if (rho < 0.0) {
        throw std::invalid_argument("RadianceTensor::conforming: density must be nonnegative");
      }
      return u.vec() * rho;
    };
  }
  for (auto& [dir, weight] : atoms) {
    t.atom_dirs_.push_back(dir);
    auto w = std::move(weight);
    const Direction d = dir;
    t.atom_weights_.push_back([w, d](const Vec3& x) {
      const double a = w(x);
      if (!std::isfinite(a)) {
        throw EvaluationError("RadianceTensor: non-finite atom weight", d.vec());
      }
      if (a < 0.0) {
        throw std::invalid_argument("RadianceTensor::conforming: atom weight must be nonnegative");
      }
      return d.vec() * a;
    });
  }
  return t;
}

RadianceTensor RadianceTensor::conforming_from_field(
    std::shared_ptr<const SphericalQuadrature> quad, const ScalarRadianceField& field) {
  return conforming(
      std::move(quad),
      [field](const Vec3& x, const Direction& u) { return field.eval(x, u); });
}

RadianceTensor RadianceTensor::general(
    std::shared_ptr<const SphericalQuadrature> quad,
    std::function<Vec3(const Vec3&, const Direction&)> density,
    std::vector<std::pair<Direction, std::function<Vec3(const Vec3&)>>> atoms) {
  RadianceTensor t;
  t.quad_ = std::move(quad);
  t.conforming_ = false;
  t.density_ = std::move(density);
  for (auto& [dir, weight] : atoms) {
    t.atom_dirs_.push_back(dir);
    t.atom_weights_.push_back(std::move(weight));
  }
  return t;
}

VectorSphereMeasure RadianceTensor::at(const Vec3& x) const {
  std::array<std::vector<double>, 3> density;
  for (auto& d : density) d.assign(quad_->size(), 0.0);
  if (density_) {
    for (std::size_t k = 0; k < quad_->size(); ++k) {
      const Vec3 c = density_(x, quad_->node(k));
      density[0][k] = c.x;
      density[1][k] = c.y;
      density[2][k] = c.z;
    }
  }

  std::array<std::vector<double>, 3> weights;
  for (auto& w : weights) w.reserve(atom_dirs_.size());
  for (const auto& fn : atom_weights_) {
    const Vec3 c = fn(x);
    weights[0].push_back(c.x);
    weights[1].push_back(c.y);
    weights[2].push_back(c.z);
  }

  return VectorSphereMeasure(quad_, std::move(density), atom_dirs_, std::move(weights));
}

SphereMeasure apply_to_normal(const RadianceTensor& tensor, const Vec3& x, const Vec3& n) {
  const VectorSphereMeasure v = tensor.at(x);
  const auto& quad = tensor.quad();

  std::vector<double> rho(quad.size());
  for (std::size_t k = 0; k < quad.size(); ++k) rho[k] = dot(v.node_vector(k), n);

  std::vector<SphereAtom> atoms;
  atoms.reserve(v.atom_directions().size());
  for (std::size_t i = 0; i < v.atom_directions().size(); ++i) {
    atoms.push_back({v.atom_directions()[i], dot(v.atom_vector(i), n)});
  }

  return SphereMeasure(tensor.quad_ptr(), std::move(rho), std::move(atoms));
}

double radiance_measure_of(const RadianceTensor& tensor, const Vec3& x, const Direction& n,
                           const SphereSubset& subset) {
  return measure_of(apply_to_normal(tensor, x, n.vec()), subset);
}

TotalDistribution total_distribution(const RadianceTensor& tensor, const Region& region) {
  const auto& quad = tensor.quad();
  std::vector<double> rho(quad.size(), 0.0);
  std::vector<double> atom_acc(tensor.atom_directions().size(), 0.0);

  for (const auto& s : region.boundary_samples()) {
    const VectorSphereMeasure v = tensor.at(s.point);
    const Vec3 n = s.normal.vec();
    for (std::size_t k = 0; k < quad.size(); ++k) {
      rho[k] += dot(v.node_vector(k), n) * s.area_weight;
    }
    for (std::size_t i = 0; i < atom_acc.size(); ++i) {
      atom_acc[i] += dot(v.atom_vector(i), n) * s.area_weight;
    }
  }

  std::vector<SphereAtom> atoms;
  atoms.reserve(atom_acc.size());
  for (std::size_t i = 0; i < atom_acc.size(); ++i) {
    atoms.push_back({tensor.atom_directions()[i], atom_acc[i]});
  }
  return TotalDistribution{SphereMeasure(tensor.quad_ptr(), std::move(rho), std::move(atoms))};
}

double total_power_from_distribution(const TotalDistribution& phi) {
  return pair(phi.measure, TestFunction([](const Direction&) { return 1.0; }));
}

Vec3 energy_flux_vector_measure(const RadianceTensor& tensor, const Vec3& x) {
  const VectorSphereMeasure v = tensor.at(x);
  const auto& quad = tensor.quad();
  Vec3 q{};
  for (std::size_t k = 0; k < quad.size(); ++k) q += v.node_vector(k) * quad.weight(k);
  for (std::size_t i = 0; i < v.atom_directions().size(); ++i) q += v.atom_vector(i);
  return q;
}

RadiationAssumptionReport verify_radiation_assumption(const RadianceTensor& tensor, const Vec3& x,
                                                      double tol) {
  const VectorSphereMeasure v = tensor.at(x);
  const TensorDecomposition dec = decompose(v);
  const auto& quad = tensor.quad();

  RadiationAssumptionReport report;
  auto inspect = [&report](const Vec3& unit, const Direction& u) {
    if (TensorDecomposition::is_zero_marker(unit)) return;  // zero magnitude: skipped
    ++report.support_points;
    report.max_angular_deviation =
        std::max(report.max_angular_deviation, angle_between(unit, u.vec()));
    report.unit_norm_residual =
        std::max(report.unit_norm_residual, std::fabs(norm(unit) - 1.0));
  };

  for (std::size_t k = 0; k < quad.size(); ++k) inspect(dec.node_directions[k], quad.node(k));
  for (std::size_t i = 0; i < dec.atom_directions.size(); ++i) {
    inspect(dec.atom_directions[i], v.atom_directions()[i]);
  }

  report.pass = report.max_angular_deviation <= tol && report.unit_norm_residual <= tol;
  return report;
}

}  // namespace radflux
