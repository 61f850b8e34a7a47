// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
#pragma once

#include <functional>
#include <memory>
#include <vector>

namespace amx {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

// Nodes on (-1, 1). Orders 2..512; rules are cached and shared.
std::shared_ptr<const QuadratureRule> gauss_legendre(int order);
// Weight exp(-x^2) on the real line. Orders 2..256.
std::shared_ptr<const QuadratureRule> gauss_hermite(int order);

// Integral of f over [a, b] with an order-n Gauss-Legendre rule.
double integrate(const std::function<double(double)>& f, double a, double b, int order);

}  // namespace amx
