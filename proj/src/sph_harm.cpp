#include "calr/sph_harm.hpp"

#include <cmath>
#include <stdexcept>

namespace calr {

namespace {

// Seed Pbar_m^m with the product form to avoid overflow at large m.
double legendre_norm_mm(int m, double s /* = sin(theta) */) {
  double p = std::sqrt(1.0 / (4.0 * pi));
  for (int k = 1; k <= m; ++k) {
    p *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
  }
  return p;
}

}  // namespace

double legendre_norm(int n, int m, double x) {
  if (m < 0 || n < m) throw std::invalid_argument("legendre_norm: need 0 <= m <= n");
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  double pmm = legendre_norm_mm(m, s);
  if (n == m) return pmm;
  double pm1 = std::sqrt(2.0 * m + 3.0) * x * pmm;
  if (n == m + 1) return pm1;
  double p = 0.0;
  double a_prev = std::sqrt(2.0 * m + 3.0);  // a_{m+1,m}
  for (int k = m + 2; k <= n; ++k) {
    const double a = std::sqrt((4.0 * k * k - 1.0) /
                               (static_cast<double>(k - m) * (k + m)));
    p = a * (x * pm1 - pmm / a_prev);
    pmm = pm1;
    pm1 = p;
    a_prev = a;
  }
  return p;
}

std::vector<double> legendre_norm_all(int n_max, int m, double x) {
  if (m < 0) throw std::invalid_argument("legendre_norm_all: m must be >= 0");
  std::vector<double> out(n_max + 1, 0.0);
  if (n_max < m) return out;
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  out[m] = legendre_norm_mm(m, s);
  if (n_max == m) return out;
  out[m + 1] = std::sqrt(2.0 * m + 3.0) * x * out[m];
  double a_prev = std::sqrt(2.0 * m + 3.0);
  for (int k = m + 2; k <= n_max; ++k) {
    const double a = std::sqrt((4.0 * k * k - 1.0) /
                               (static_cast<double>(k - m) * (k + m)));
    out[k] = a * (x * out[k - 1] - out[k - 2] / a_prev);
    a_prev = a;
  }
  return out;
}

cplx sph_harm(int n, int m, const Vec3& u) {
  const int ma = std::abs(m);
  if (ma > n) throw std::invalid_argument("sph_harm: |m| must be <= n");
  const double ct = u[2];
  const double phi = std::atan2(u[1], u[0]);
  const double p = legendre_norm(n, ma, ct);
  const cplx e = std::polar(1.0, ma * phi);
  if (m >= 0) return p * e;
  const double sign = (ma % 2 == 0) ? 1.0 : -1.0;
  return sign * p * std::conj(e);
}

double legendre(int n, double x) {
  if (n == 0) return 1.0;
  if (n == 1) return x;
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace calr
