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
#include "radflux/sphere_measure.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace radflux {

namespace {

void check_grids(const SphereMeasure& mu, const SphereMeasure& nu, const char* op) {
  if (mu.quad_ptr().get() != nu.quad_ptr().get() && mu.quad().level() != nu.quad().level()) {
    throw GridMismatchError(std::string(op) + ": measures live on different quadrature grids");
  }
  if (mu.quad().size() != nu.quad().size()) {
    throw GridMismatchError(std::string(op) + ": measures live on different quadrature grids");
  }
}

double eval_checked(const TestFunction& v, const Direction& u, const char* op) {
  const double value = v.eval(u);
  if (!std::isfinite(value)) {
    throw EvaluationError(std::string(op) + ": test function non-finite on the support", u.vec());
  }
  return value;
}

/// Merge duplicate directions (componentwise within 1e-12) by summing weights.
std::vector<SphereAtom> merge_atoms(std::vector<SphereAtom> atoms) {
  std::vector<SphereAtom> merged;
  merged.reserve(atoms.size());
  for (const auto& a : atoms) {
    bool found = false;
    for (auto& m : merged) {
      if (same_direction(a.direction, m.direction)) {
        m.weight += a.weight;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(a);
  }
  return merged;
}

}  // namespace

SphereMeasure::SphereMeasure(std::shared_ptr<const SphericalQuadrature> quad,
                             std::vector<double> density, std::vector<SphereAtom> atoms)
    : quad_(std::move(quad)), density_(std::move(density)), atoms_(merge_atoms(std::move(atoms))) {
  if (!quad_) throw std::invalid_argument("SphereMeasure: null quadrature");
  if (density_.empty()) density_.assign(quad_->size(), 0.0);
  if (density_.size() != quad_->size()) {
    throw std::invalid_argument("SphereMeasure: density size does not match the grid");
  }
  for (std::size_t k = 0; k < density_.size(); ++k) {
    if (!std::isfinite(density_[k])) {
      throw EvaluationError("SphereMeasure: non-finite density at node", quad_->node(k).vec());
    }
  }
  for (const auto& a : atoms_) {
    if (!std::isfinite(a.weight)) {
      throw EvaluationError("SphereMeasure: non-finite atom weight", a.direction.vec());
    }
  }
}

SphereMeasure SphereMeasure::zero(std::shared_ptr<const SphericalQuadrature> quad) {
  return SphereMeasure(std::move(quad), {}, {});
}

SphereMeasure SphereMeasure::from_density(std::shared_ptr<const SphericalQuadrature> quad,
                                          const std::function<double(const Direction&)>& density) {
  std::vector<double> rho(quad->size());
  for (std::size_t k = 0; k < quad->size(); ++k) rho[k] = density(quad->node(k));
  return SphereMeasure(std::move(quad), std::move(rho), {});
}

SphereMeasure SphereMeasure::single_atom(std::shared_ptr<const SphericalQuadrature> quad,
                                         const Direction& direction, double weight) {
  return SphereMeasure(std::move(quad), {}, {{direction, weight}});
}

double pair(const SphereMeasure& mu, const TestFunction& v) {
  const auto& quad = mu.quad();
  const auto& rho = mu.density();
  double sum = chunked_sum<double>(quad.size(), [&](std::size_t k) {
    return quad.weight(k) * rho[k] * eval_checked(v, quad.node(k), "pair");
  });
  for (const auto& a : mu.atoms()) sum += a.weight * eval_checked(v, a.direction, "pair");
  return sum;
}

double measure_of(const SphereMeasure& mu, const SphereSubset& subset) {
  const auto& quad = mu.quad();
  const auto& rho = mu.density();
  double sum = 0.0;
  for (std::size_t k = 0; k < quad.size(); ++k) {
    if (subset.contains(quad.node(k))) sum += quad.weight(k) * rho[k];
  }
  for (const auto& a : mu.atoms()) {
    if (subset.contains(a.direction)) sum += a.weight;
  }
  return sum;
}

double norm(const SphereMeasure& mu) {
  const auto& quad = mu.quad();
  const auto& rho = mu.density();
  double sum = 0.0;
  for (std::size_t k = 0; k < quad.size(); ++k) sum += quad.weight(k) * std::fabs(rho[k]);
  for (const auto& a : mu.atoms()) sum += std::fabs(a.weight);
  return sum;
}

SphereMeasure combine(double a, const SphereMeasure& mu, double b, const SphereMeasure& nu) {
  check_grids(mu, nu, "combine");
  std::vector<double> rho(mu.quad().size());
  for (std::size_t k = 0; k < rho.size(); ++k) rho[k] = a * mu.density()[k] + b * nu.density()[k];

  std::vector<SphereAtom> atoms;
  atoms.reserve(mu.atoms().size() + nu.atoms().size());
  for (const auto& at : mu.atoms()) atoms.push_back({at.direction, a * at.weight});
  for (const auto& at : nu.atoms()) atoms.push_back({at.direction, b * at.weight});

  return SphereMeasure(mu.quad_ptr(), std::move(rho), std::move(atoms));
}

SphereMeasure multiply(const TestFunction& phi, const SphereMeasure& mu) {
  const auto& quad = mu.quad();
  std::vector<double> rho(quad.size());
  for (std::size_t k = 0; k < rho.size(); ++k) {
    rho[k] = eval_checked(phi, quad.node(k), "multiply") * mu.density()[k];
  }
  std::vector<SphereAtom> atoms = mu.atoms();
  for (auto& a : atoms) a.weight *= eval_checked(phi, a.direction, "multiply");
  return SphereMeasure(mu.quad_ptr(), std::move(rho), std::move(atoms));
}

VectorSphereMeasure::VectorSphereMeasure(std::shared_ptr<const SphericalQuadrature> quad,
                                         std::array<std::vector<double>, 3> node_density,
                                         std::vector<Direction> atom_directions,
                                         std::array<std::vector<double>, 3> atom_weights)
    : quad_(std::move(quad)),
      node_density_(std::move(node_density)),
      atom_directions_(std::move(atom_directions)),
      atom_weights_(std::move(atom_weights)) {
  if (!quad_) throw std::invalid_argument("VectorSphereMeasure: null quadrature");
  for (int j = 0; j < 3; ++j) {
    if (node_density_[j].empty()) node_density_[j].assign(quad_->size(), 0.0);
    if (node_density_[j].size() != quad_->size()) {
      throw std::invalid_argument("VectorSphereMeasure: component density size mismatch");
    }
    if (atom_weights_[j].size() != atom_directions_.size()) {
      throw std::invalid_argument("VectorSphereMeasure: atom weight/direction size mismatch");
    }
  }
}

VectorSphereMeasure VectorSphereMeasure::conforming(const SphereMeasure& mu) {
  for (double rho : mu.density()) {
    if (rho < 0.0) {
      throw std::invalid_argument("VectorSphereMeasure::conforming: density must be nonnegative");
    }
  }
  for (const auto& a : mu.atoms()) {
    if (a.weight < 0.0) {
      throw std::invalid_argument(
          "VectorSphereMeasure::conforming: atom weights must be nonnegative");
    }
  }

  const auto& quad = mu.quad();
  std::array<std::vector<double>, 3> density;
  for (auto& d : density) d.resize(quad.size());
  for (std::size_t k = 0; k < quad.size(); ++k) {
    const Vec3 u = quad.node(k).vec();
    density[0][k] = u.x * mu.density()[k];
    density[1][k] = u.y * mu.density()[k];
    density[2][k] = u.z * mu.density()[k];
  }

  std::vector<Direction> dirs;
  std::array<std::vector<double>, 3> weights;
  dirs.reserve(mu.atoms().size());
  for (const auto& a : mu.atoms()) {
    dirs.push_back(a.direction);
    weights[0].push_back(a.direction.x() * a.weight);
    weights[1].push_back(a.direction.y() * a.weight);
    weights[2].push_back(a.direction.z() * a.weight);
  }

  return VectorSphereMeasure(mu.quad_ptr(), std::move(density), std::move(dirs),
                             std::move(weights));
}

SphereMeasure VectorSphereMeasure::component(int j) const {
  std::vector<SphereAtom> atoms;
  atoms.reserve(atom_directions_.size());
  for (std::size_t i = 0; i < atom_directions_.size(); ++i) {
    atoms.push_back({atom_directions_[i], atom_weights_[j][i]});
  }
  return SphereMeasure(quad_, node_density_[j], std::move(atoms));
}

TensorDecomposition decompose(const VectorSphereMeasure& v) {
  const auto& quad = v.quad();

  std::vector<double> mag_density(quad.size());
  std::vector<Vec3> node_dirs(quad.size(), Vec3{});
  for (std::size_t k = 0; k < quad.size(); ++k) {
    const Vec3 c = v.node_vector(k);
    const double m = norm(c);
    mag_density[k] = m;
    if (m > 0.0) node_dirs[k] = c / m;
  }

  std::vector<SphereAtom> mag_atoms;
  std::vector<Vec3> atom_dirs(v.atom_directions().size(), Vec3{});
  for (std::size_t i = 0; i < v.atom_directions().size(); ++i) {
    const Vec3 c = v.atom_vector(i);
    const double m = norm(c);
    mag_atoms.push_back({v.atom_directions()[i], m});
    if (m > 0.0) atom_dirs[i] = c / m;
  }

  return TensorDecomposition{SphereMeasure(v.quad_ptr(), std::move(mag_density), std::move(mag_atoms)),
                             std::move(node_dirs), std::move(atom_dirs)};
}

}  // namespace radflux
