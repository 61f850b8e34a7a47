// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#include "quad/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>

#include <Eigen/Eigenvalues>

#include "core/errors.hpp"

namespace amx {

namespace {

QuadratureRule build_legendre(int n) {
  QuadratureRule r;
  r.order = n;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // one more derivative evaluation at the converged node for the weight
    double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    const double w = 2 / ((1 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

// Golub-Welsch eigenvalues of the Jacobi matrix seed the nodes; Newton on the orthonormal Hermite
// functions then polishes each node and gives a weight that stays accurate in the far tails.
QuadratureRule build_hermite(int n) {
  QuadratureRule r;
  r.order = n;
  r.nodes.resize(n);
  r.weights.resize(n);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n), sub(n - 1);
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) fail(ErrorCode::internal, "Gauss-Hermite eigenvalue solve failed");
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  for (int i = 0; i < n; ++i) {
    double z = eig.eigenvalues()(i);
    double pp = 0;
    for (int it = 0; it < 20; ++it) {
      double p1 = pim4, p2 = 0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    r.nodes[i] = z;
    r.weights[i] = 2.0 / (pp * pp);
  }
  // exact symmetry
  for (int i = 0; i < n / 2; ++i) {
    const double x = (r.nodes[n - 1 - i] - r.nodes[i]) / 2, w = (r.weights[i] + r.weights[n - 1 - i]) / 2;
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

template <QuadratureRule (*Build)(int)>
class RuleCache {
 public:
  std::shared_ptr<const QuadratureRule> get(int n) {
    {
      std::shared_lock lock(mu_);
      if (auto it = rules_.find(n); it != rules_.end()) return it->second;
    }
    auto rule = std::make_shared<const QuadratureRule>(Build(n));
    std::unique_lock lock(mu_);
    return rules_.try_emplace(n, rule).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<int, std::shared_ptr<const QuadratureRule>> rules_;
};

}  // namespace

std::shared_ptr<const QuadratureRule> gauss_legendre(int order) {
  if (order < 2 || order > 512) fail(ErrorCode::domain, "Gauss-Legendre order must be in [2, 512]");
  static RuleCache<build_legendre> cache;
  return cache.get(order);
}

std::shared_ptr<const QuadratureRule> gauss_hermite(int order) {
  if (order < 2 || order > 256) fail(ErrorCode::domain, "Gauss-Hermite order must be in [2, 256]");
  static RuleCache<build_hermite> cache;
  return cache.get(order);
}

double integrate(const std::function<double(double)>& f, double a, double b, int order) {
  const auto rule = gauss_legendre(order);
  const double half = (b - a) / 2, mid = (a + b) / 2;
  double s = 0;
  for (int i = 0; i < rule->order; ++i) s += rule->weights[i] * f(mid + half * rule->nodes[i]);
  return s * half;
}

}  // namespace amx
