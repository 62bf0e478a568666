#ifndef CALR_QUADRATURE_HPP
#define CALR_QUADRATURE_HPP

#include <vector>

namespace calr {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree 2n-1.
QuadRule gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [a, b].
QuadRule gauss_legendre(int n, double a, double b);

}  // namespace calr

#endif
