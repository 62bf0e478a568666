#ifndef CALR_NP_SPECTRUM_HPP
#define CALR_NP_SPECTRUM_HPP

#include <vector>

#include "calr/geometry.hpp"
#include "calr/types.hpp"

namespace calr {

/// Scalar multiplying e^{in theta} in S_Gamma[e^{in theta}] on a circle of
/// radius r0:
///   -(r0 / 2|n|) (r/r0)^{|n|} inside, -(r0 / 2|n|) (r0/r)^{|n|} outside.
/// n = 0 follows the normalized-density convention log(r0) inside / log(r)
/// outside; only the mode solvers' n != 0 values enter field assembly.
double single_layer_mode_2d(double r0, int n, double r);

/// Radial derivative multiplier of the same mode. For n = 0 the jump at
/// r = r0 is ambiguous: pass an explicit side, otherwise throws.
double single_layer_mode_deriv_2d(double r0, int n, double r,
                                  Side side = Side::automatic);

/// Multiplier of Y_n^m in S_Gamma[Y_n^m] on a sphere of radius r0:
///   -(1/(2n+1)) r^n / r0^{n-1} for r <= r0,
///   -(1/(2n+1)) r0^{n+2} / r^{n+1} for r >= r0.
double single_layer_mode_3d(double r0, int n, double r);

double single_layer_mode_deriv_3d(double r0, int n, double r,
                                  Side side = Side::automatic);

struct EigenPair2D {
  int n = 0;         // 0 marks the static pair
  int sign = +1;
  double eigenvalue = 0.0;
  double f_i = 0.0;  // density coefficient on Gamma_i
  double f_e = 0.0;  // density coefficient on Gamma_e
};

struct EigenPair3D {
  int n = 0;
  int m = 0;
  int sign = +1;
  double eigenvalue = 0.0;
  double f_i = 0.0;
  double f_e = 0.0;
};

/// { -1/2 with [1, -1/r_e], +1/2 with [0, 1] } plus
/// { +-rho^n/2 with [1, +-rho] } for 1 <= n <= n_max.
std::vector<EigenPair2D> np_eigenpairs_2d(const StructureConfig& cfg, int n_max);

/// +-(1/(2(2n+1))) sqrt(1 + 4n(n+1) rho^{2n+1}) for 0 <= n <= n_max, each
/// listed with multiplicity 2n+1, eigenvectors
/// (+-sqrt(1 + 4n(n+1) rho^{2n+1}) - 1, 2(n+1) rho^{n+2}).
/// When rho^{2n+1} underflows (log-space flush below 1e-300) the eigenvalue
/// falls back to the single-sphere value with decoupled eigenvectors.
std::vector<EigenPair3D> np_eigenpairs_3d(const StructureConfig& cfg, int n_max);

/// Block action of the two-interface operator on a single Fourier /
/// spherical-harmonic mode (densities a on Gamma_i, b on Gamma_e); used by
/// the eigen-residual property tests.
void block_mode_action_2d(const StructureConfig& cfg, int n, double a, double b,
                          double* out_a, double* out_b);
void block_mode_action_3d(const StructureConfig& cfg, int n, double a, double b,
                          double* out_a, double* out_b);

struct GapAsymptotics {
  /// (n, |mu_n -+ lambda_n| / rho^n) rows.
  std::vector<std::pair<int, double>> table;
  double fitted_constant = 0.0;  // max of the quotient over the range
};

/// Quotient |mu_n -+ lambda_n| / rho^n against the single-surface
/// eigenvalues (0 for the circle when n >= 1, 1/(2(2n+1)) for the sphere).
GapAsymptotics spectral_gap_asymptotics(const StructureConfig& cfg, int n_max);

}  // namespace calr

#endif
