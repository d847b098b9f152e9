#pragma once

#include <span>
#include <vector>

namespace axiquad {

/// Nodes and weights of an n-point rule on [-1,1].
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

/// n-point Gauss-Legendre rule on [-1,1]. Results are cached per n.
const QuadRule& gauss_legendre(int n);

/// Sum of w_k * f(t_k) over the rule, with an affine map to [a,b].
template <class F>
double integrate(const QuadRule& rule, double a, double b, F&& f) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int k = 0; k < rule.size(); ++k)
    acc += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return acc * half;
}

/// Uniform nodes phi_l = 2*pi*l/n on [0, 2*pi), the periodic trapezoidal grid.
std::vector<double> trapezoid_nodes(int n);

}  // namespace axiquad
