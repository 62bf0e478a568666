#ifndef CALR_SOURCES_HPP
#define CALR_SOURCES_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "calr/geometry.hpp"
#include "calr/types.hpp"

namespace calr {

struct PointCharge {
  Vec3 position{0.0, 0.0, 0.0};  // 2D sources keep z = 0
  double weight = 0.0;
};

/// Finite collection of weighted point charges with zero total weight,
/// all supported strictly outside the shell, or directly specified
/// exterior multipole coefficients (coeff_override).
struct SourceSpec {
  Dim dimension = Dim::two;
  std::vector<PointCharge> charges;

  /// Exterior coefficients g_e given directly instead of charges.
  /// 2D: signed mode index n != 0.  3D: (n >= 1, -n <= m <= n).
  std::optional<std::map<int, cplx>> override_2d;
  std::optional<std::map<std::pair<int, int>, cplx>> override_3d;

  bool has_override() const { return override_2d || override_3d; }

  /// Zero total weight, charges strictly outside the shell, dimension
  /// consistency. Throws ConfigError / RegimeError.
  void validate(const StructureConfig& cfg) const;

  /// Tight radial pair approximating a dipole at radius r0 (separation
  /// 1e-3 * r0, weights +-1/h), placed on the +x axis (2D) or +z axis (3D).
  static SourceSpec radial_dipole(Dim dim, double r0);
};

/// Newtonian potential F(x) = sum_k w_k G(x - p_k) with
/// G = ln|x| / 2pi (2D), -1/(4pi |x|) (3D).
double newtonian_potential(const SourceSpec& src, const Vec3& x);

/// grad F(x), same kernels.
Vec3 newtonian_gradient(const SourceSpec& src, const Vec3& x);

/// Exterior-data multipole coefficients of the Newtonian potential's
/// normal derivatives on the two interfaces.
/// 2D: g = sum_{n != 0} (g_i^n, g_e^n) e^{in theta} with
/// g_i^n = -g_e^n rho^{|n|-1} for sources outside the shell.
class ModeCoefficients2D {
 public:
  ModeCoefficients2D(int n_max, double rho);

  int n_max() const { return n_max_; }
  double rho() const { return rho_; }

  /// g_e^n for signed n, |n| <= n_max (0 for n == 0).
  cplx g_e(int n) const;
  /// g_i^n = -g_e^n rho^{|n|-1}.
  cplx g_i(int n) const;

  void set_g_e(int n, cplx v);

 private:
  int n_max_;
  double rho_;
  std::vector<cplx> pos_, neg_;  // index |n|-1
};

/// 3D: partial_nu_e F = -sum_{n,m} g_{nm} Y_n^m, interior data scaled by
/// rho^{n-1}.
class ModeCoefficients3D {
 public:
  ModeCoefficients3D(int n_max, double rho);

  int n_max() const { return n_max_; }
  double rho() const { return rho_; }

  cplx g_e(int n, int m) const;
  /// Coefficient of Y_n^m in -partial_nu_i F (the rho^{n-1} relation).
  cplx g_i(int n, int m) const;

  void set_g_e(int n, int m, cplx v);

  /// sum_m |g_e(n, m)|^2.
  double degree_power(int n) const;

 private:
  int n_max_;
  double rho_;
  std::vector<std::vector<cplx>> by_degree_;  // [n][m + n]
};

/// Closed-form Fourier data of -dF/dnu_e on the outer circle, validated in
/// tests against spectral sampling of dF/dr. Honors coeff_override verbatim.
/// Requires n_max >= 1 and all charges outside the shell.
ModeCoefficients2D exterior_coefficients_2d(const SourceSpec& src,
                                            const StructureConfig& cfg,
                                            int n_max);

struct Quadrature3DOptions {
  // 0 means "derive from n_max": (n_max+1)*2 polar Gauss-Legendre nodes and
  // 2*(2*n_max+2) uniform azimuth nodes.
  int n_polar = 0;
  int n_azimuth = 0;
};

/// Projects dF/dr on the outer sphere onto orthonormal Y_n^m by
/// Gauss-Legendre (polar) x uniform (azimuth) quadrature.
ModeCoefficients3D exterior_coefficients_3d(const SourceSpec& src,
                                            const StructureConfig& cfg,
                                            int n_max,
                                            const Quadrature3DOptions& opts = {});

enum class GapVariant { GP, GP2 };
enum class GapVerdict { holds_up_to_n_max, fails, inconclusive };

struct GapCheckResult {
  GapVerdict verdict = GapVerdict::inconclusive;
  /// (n_k, quotient_k) over the nonzero-coefficient subsequence.
  std::vector<std::pair<int, double>> quotients;
};

/// Finite-window gap-property check on the exterior coefficients:
///   GP : rho^{|n_{k+1}|-|n_k|}    |g_e^{n_k}|^2 / (|n_k| rho^{|n_k|})
///   GP2: rho^{2(|n_{k+1}|-|n_k|)} |g_e^{n_k}|^2 / (|n_k| rho^{2|n_k|})
/// Verdict "holds" / "fails" is decided by the trend over the tail of the
/// computed window; finite data cannot prove the limit.
GapCheckResult gap_property_check(const ModeCoefficients2D& coeffs,
                                  const StructureConfig& cfg, GapVariant variant,
                                  int n_max);

}  // namespace calr

#endif
