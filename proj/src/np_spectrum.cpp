#include "calr/np_spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace calr {

double single_layer_mode_2d(double r0, int n, double r) {
  if (!(r0 > 0.0) || !(r > 0.0))
    throw std::invalid_argument("radii must be positive");
  if (n == 0) return r < r0 ? std::log(r0) : std::log(r);
  const int k = std::abs(n);
  const double ratio = r <= r0 ? r / r0 : r0 / r;
  return -(r0 / (2.0 * k)) * pow_flush(ratio, k);
}

double single_layer_mode_deriv_2d(double r0, int n, double r, Side side) {
  if (!(r0 > 0.0) || !(r > 0.0))
    throw std::invalid_argument("radii must be positive");
  const bool inner =
      side == Side::automatic ? r < r0 : (side == Side::inner);
  if (n == 0) {
    if (side == Side::automatic && r == r0)
      throw std::invalid_argument("n = 0 derivative at r = r0: pick a side");
    return inner ? 0.0 : 1.0 / r;
  }
  const int k = std::abs(n);
  if (inner) return -0.5 * pow_flush(r / r0, k - 1);
  return 0.5 * pow_flush(r0 / r, k + 1);
}

double single_layer_mode_3d(double r0, int n, double r) {
  if (!(r0 > 0.0) || !(r > 0.0))
    throw std::invalid_argument("radii must be positive");
  if (n < 0) throw std::invalid_argument("3D mode degree must be >= 0");
  if (r <= r0) return -(1.0 / (2.0 * n + 1.0)) * pow_flush(r / r0, n) * r0;
  return -(1.0 / (2.0 * n + 1.0)) * pow_flush(r0 / r, n + 1) * r0 * (r0 / r);
}

double single_layer_mode_deriv_3d(double r0, int n, double r, Side side) {
  if (n < 0) throw std::invalid_argument("3D mode degree must be >= 0");
  const bool inner =
      side == Side::automatic ? r < r0 : (side == Side::inner);
  if (inner) {
    if (n == 0) return 0.0;
    return -(static_cast<double>(n) / (2.0 * n + 1.0)) * pow_flush(r / r0, n - 1);
  }
  return (static_cast<double>(n + 1) / (2.0 * n + 1.0)) *
         pow_flush(r0 / r, n + 2);
}

std::vector<EigenPair2D> np_eigenpairs_2d(const StructureConfig& cfg, int n_max) {
  cfg.validate();
  if (cfg.dimension != Dim::two) throw RegimeError("2D eigenpairs need a 2D config");
  const double rho = cfg.rho();
  std::vector<EigenPair2D> out;
  out.reserve(2 * n_max + 2);
  out.push_back({0, -1, -0.5, 1.0, -1.0 / cfg.r_e});
  out.push_back({0, +1, +0.5, 0.0, 1.0});
  for (int n = 1; n <= n_max; ++n) {
    const double mu = 0.5 * pow_flush(rho, n);
    out.push_back({n, +1, +mu, 1.0, +rho});
    out.push_back({n, -1, -mu, 1.0, -rho});
  }
  return out;
}

std::vector<EigenPair3D> np_eigenpairs_3d(const StructureConfig& cfg, int n_max) {
  cfg.validate();
  if (cfg.dimension != Dim::three)
    throw RegimeError("3D eigenpairs need a 3D config");
  const double rho = cfg.rho();
  std::vector<EigenPair3D> out;
  for (int n = 0; n <= n_max; ++n) {
    const double beta = 1.0 / (2.0 * (2.0 * n + 1.0));
    const double coupling = 4.0 * n * (n + 1.0) * pow_flush(rho, 2 * n + 1);
    const double root = std::sqrt(1.0 + coupling);
    const double re = 2.0 * (n + 1.0) * pow_flush(rho, n + 2);
    for (int m = -n; m <= n; ++m) {
      if (coupling == 0.0 && n > 0) {
        // flushed coupling: decoupled single-sphere pair
        out.push_back({n, m, +1, +beta, 0.0, 1.0});
        out.push_back({n, m, -1, -beta, 1.0, 0.0});
      } else {
        out.push_back({n, m, +1, +beta * root, root - 1.0, re});
        out.push_back({n, m, -1, -beta * root, -root - 1.0, re});
      }
    }
  }
  return out;
}

void block_mode_action_2d(const StructureConfig& cfg, int n, double a, double b,
                          double* out_a, double* out_b) {
  const double rho = cfg.rho();
  if (n == 0) {
    *out_a = -0.5 * a;
    *out_b = a / cfg.r_e + 0.5 * b;
    return;
  }
  const int k = std::abs(n);
  *out_a = 0.5 * pow_flush(rho, k - 1) * b;
  *out_b = 0.5 * pow_flush(rho, k + 1) * a;
}

void block_mode_action_3d(const StructureConfig& cfg, int n, double a, double b,
                          double* out_a, double* out_b) {
  const double rho = cfg.rho();
  const double beta = 1.0 / (2.0 * (2.0 * n + 1.0));
  *out_a = -beta * a + 2.0 * n * beta * pow_flush(rho, n - 1) * b;
  *out_b = 2.0 * (n + 1.0) * beta * pow_flush(rho, n + 2) * a + beta * b;
}

GapAsymptotics spectral_gap_asymptotics(const StructureConfig& cfg, int n_max) {
  if (n_max < 5) throw std::invalid_argument("n_max must be >= 5");
  const double rho = cfg.rho();
  GapAsymptotics res;
  for (int n = 1; n <= n_max; ++n) {
    double q;
    if (cfg.dimension == Dim::two) {
      // mu_n = rho^n / 2 exactly, single-circle lambda_n = 0 for n >= 1
      q = 0.5;
    } else {
      const double x = 4.0 * n * (n + 1.0) * pow_flush(rho, 2 * n + 1);
      const double lambda = 1.0 / (2.0 * (2.0 * n + 1.0));
      // mu - lambda = lambda (sqrt(1+x) - 1), evaluated as x/(sqrt(1+x)+1)
      const double diff = lambda * x / (std::sqrt(1.0 + x) + 1.0);
      q = diff / pow_flush(rho, n);
    }
    res.table.push_back({n, q});
    res.fitted_constant = std::max(res.fitted_constant, q);
  }
  return res;
}

}  // namespace calr
