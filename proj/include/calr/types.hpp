#ifndef CALR_TYPES_HPP
#define CALR_TYPES_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace calr {

using cplx = std::complex<double>;

constexpr double pi = 3.14159265358979323846;

enum class Dim { two = 2, three = 3 };

/// Side of a boundary trace; `automatic` picks the region containing the point.
enum class Side { automatic, inner, outer };

using Vec3 = std::array<double, 3>;

inline double norm(const Vec3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RegimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vanishing per-mode denominator (possible only at delta = 0).
struct ResonanceError : std::runtime_error {
  int mode;
  explicit ResonanceError(int n)
      : std::runtime_error("exact resonance at mode n = " + std::to_string(n)),
        mode(n) {}
};

struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// rho^k evaluated in log-space, flushed to exact 0 below 1e-300 so that
/// deep-mode sweeps never produce denormal noise.
inline double pow_flush(double rho, double k) {
  if (k == 0.0) return 1.0;
  if (rho == 0.0) return 0.0;
  const double l = k * std::log10(rho);
  if (l < -300.0) return 0.0;
  return std::pow(rho, k);
}

}  // namespace calr

#endif
