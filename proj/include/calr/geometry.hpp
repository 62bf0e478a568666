#ifndef CALR_GEOMETRY_HPP
#define CALR_GEOMETRY_HPP

#include <optional>

#include "calr/types.hpp"

namespace calr {

/// Concentric core-shell-matrix structure: core radius r_i, shell outer
/// radius r_e, core permittivity eps_core > 0, shell permittivity
/// eps_shell < 0 with loss delta >= 0 (shell value is eps_shell + i*delta),
/// background permittivity 1.
///
/// Immutable after construction; all derived quantities are pure functions.
struct StructureConfig {
  Dim dimension = Dim::two;
  double r_i = 1.0;
  double r_e = 2.0;
  double eps_core = 1.0;
  double eps_shell = -1.0;
  double delta = 0.0;

  double rho() const { return r_i / r_e; }

  /// Throws ConfigError unless 0 < r_i < r_e, eps_core > 0, eps_shell < 0,
  /// delta >= 0.
  void validate() const;
};

/// Dimensionless contrast pair driving the per-mode systems:
///   z_i = (eps_c + eps_s + i d) / (2 (eps_c - eps_s - i d))
///   z_e = (1 + eps_s + i d) / (2 (1 - eps_s - i d))
struct ContrastPair {
  cplx z_i;
  cplx z_e;
};

/// Exact rational-complex contrast values. Denominators are nonzero under
/// the config invariants (eps_c - eps_s > 0, 1 - eps_s > 0).
ContrastPair contrast_parameters(const StructureConfig& cfg);

/// Critical source radius separating occurrence from non-occurrence of
/// anomalous-resonance blow-up:
///   2D, eps_s = -1, eps_c  = 1:  sqrt(r_e^3 / r_i)
///   2D, eps_s = -1, eps_c != 1:  r_e^2 / r_i
///   2D, eps_s != -1, or 3D:      none (no blow-up regime)
std::optional<double> critical_radius(const StructureConfig& cfg);

/// Radius beyond which |V_delta| stays uniformly bounded in the weak
/// blow-up regime (2D, eps_s = -1, eps_c != 1): r_e^3 / r_i^2.
/// Returns none outside that regime.
std::optional<double> bounded_safe_radius(const StructureConfig& cfg);

}  // namespace calr

#endif
