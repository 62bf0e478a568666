#include "calr/sources.hpp"

#include <algorithm>
#include <cmath>

#include "calr/quadrature.hpp"
#include "calr/sph_harm.hpp"

namespace calr {

void SourceSpec::validate(const StructureConfig& cfg) const {
  if (dimension != cfg.dimension)
    throw ConfigError("source dimension does not match structure dimension");
  if (has_override()) {
    if (dimension == Dim::two && !override_2d)
      throw ConfigError("2D source requires a 2D coefficient override");
    if (dimension == Dim::three && !override_3d)
      throw ConfigError("3D source requires a 3D coefficient override");
    if (override_2d && override_2d->count(0))
      throw ConfigError("coefficient override must not contain n = 0");
    return;
  }
  if (charges.empty()) throw ConfigError("source has no charges");
  double sum = 0.0, abs_sum = 0.0;
  for (const auto& c : charges) {
    if (dimension == Dim::two && c.position[2] != 0.0)
      throw ConfigError("2D charge positions must have z = 0");
    if (!(norm(c.position) > cfg.r_e))
      throw RegimeError("charges must lie strictly outside the shell");
    sum += c.weight;
    abs_sum += std::abs(c.weight);
  }
  if (std::abs(sum) > 1e-12 * std::max(1.0, abs_sum))
    throw ConfigError("total charge must vanish");
}

SourceSpec SourceSpec::radial_dipole(Dim dim, double r0) {
  const double h = 1e-3 * r0;
  SourceSpec src;
  src.dimension = dim;
  if (dim == Dim::two) {
    src.charges = {{{r0 + h, 0.0, 0.0}, 1.0 / h}, {{r0, 0.0, 0.0}, -1.0 / h}};
  } else {
    src.charges = {{{0.0, 0.0, r0 + h}, 1.0 / h}, {{0.0, 0.0, r0}, -1.0 / h}};
  }
  return src;
}

double newtonian_potential(const SourceSpec& src, const Vec3& x) {
  if (src.has_override())
    throw RegimeError("newtonian potential unavailable for coefficient overrides");
  double f = 0.0;
  for (const auto& c : src.charges) {
    const double d = norm(x - c.position);
    if (d < 1e-14) throw SingularityError("evaluation at a charge position");
    if (src.dimension == Dim::two)
      f += c.weight * std::log(d) / (2.0 * pi);
    else
      f += -c.weight / (4.0 * pi * d);
  }
  return f;
}

Vec3 newtonian_gradient(const SourceSpec& src, const Vec3& x) {
  if (src.has_override())
    throw RegimeError("newtonian gradient unavailable for coefficient overrides");
  Vec3 g{0.0, 0.0, 0.0};
  for (const auto& c : src.charges) {
    const Vec3 r = x - c.position;
    const double d = norm(r);
    if (d < 1e-14) throw SingularityError("evaluation at a charge position");
    const double scale = (src.dimension == Dim::two)
                             ? c.weight / (2.0 * pi * d * d)
                             : c.weight / (4.0 * pi * d * d * d);
    g[0] += scale * r[0];
    g[1] += scale * r[1];
    g[2] += scale * r[2];
  }
  return g;
}

ModeCoefficients2D::ModeCoefficients2D(int n_max, double rho)
    : n_max_(n_max), rho_(rho), pos_(n_max, cplx(0.0)), neg_(n_max, cplx(0.0)) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
}

cplx ModeCoefficients2D::g_e(int n) const {
  if (n == 0 || std::abs(n) > n_max_) return cplx(0.0);
  return n > 0 ? pos_[n - 1] : neg_[-n - 1];
}

cplx ModeCoefficients2D::g_i(int n) const {
  if (n == 0) return cplx(0.0);
  return -g_e(n) * pow_flush(rho_, std::abs(n) - 1);
}

void ModeCoefficients2D::set_g_e(int n, cplx v) {
  if (n == 0 || std::abs(n) > n_max_)
    throw std::invalid_argument("mode index out of range");
  (n > 0 ? pos_[n - 1] : neg_[-n - 1]) = v;
}

ModeCoefficients3D::ModeCoefficients3D(int n_max, double rho)
    : n_max_(n_max), rho_(rho), by_degree_(n_max + 1) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  for (int n = 0; n <= n_max; ++n) by_degree_[n].assign(2 * n + 1, cplx(0.0));
}

cplx ModeCoefficients3D::g_e(int n, int m) const {
  if (n < 0 || n > n_max_ || std::abs(m) > n) return cplx(0.0);
  return by_degree_[n][m + n];
}

cplx ModeCoefficients3D::g_i(int n, int m) const {
  return g_e(n, m) * pow_flush(rho_, n - 1);
}

void ModeCoefficients3D::set_g_e(int n, int m, cplx v) {
  if (n < 0 || n > n_max_ || std::abs(m) > n)
    throw std::invalid_argument("mode index out of range");
  by_degree_[n][m + n] = v;
}

double ModeCoefficients3D::degree_power(int n) const {
  double s = 0.0;
  for (const auto& v : by_degree_[n]) s += std::norm(v);
  return s;
}

ModeCoefficients2D exterior_coefficients_2d(const SourceSpec& src,
                                            const StructureConfig& cfg,
                                            int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  src.validate(cfg);
  ModeCoefficients2D out(n_max, cfg.rho());
  if (src.override_2d) {
    for (const auto& [n, v] : *src.override_2d) {
      if (std::abs(n) <= n_max) out.set_g_e(n, v);
    }
    return out;
  }
  // Unit charge at (r0, theta0): F = c - sum_n g_e^n r^{|n|} e^{in theta} /
  // (|n| r_e^{|n|-1}) with g_e^n = (r_e/r0)^{|n|} e^{-in theta0} / (4 pi r_e),
  // from the cosine expansion of ln|x - y|.
  for (int n = 1; n <= n_max; ++n) {
    cplx gp(0.0), gn(0.0);
    for (const auto& c : src.charges) {
      const double r0 = std::hypot(c.position[0], c.position[1]);
      const double th0 = std::atan2(c.position[1], c.position[0]);
      const double amp =
          c.weight / (4.0 * pi * cfg.r_e) * std::pow(cfg.r_e / r0, n);
      gp += amp * std::polar(1.0, -n * th0);
      gn += amp * std::polar(1.0, n * th0);
    }
    out.set_g_e(n, gp);
    out.set_g_e(-n, gn);
  }
  return out;
}

ModeCoefficients3D exterior_coefficients_3d(const SourceSpec& src,
                                            const StructureConfig& cfg,
                                            int n_max,
                                            const Quadrature3DOptions& opts) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  src.validate(cfg);
  ModeCoefficients3D out(n_max, cfg.rho());
  if (src.override_3d) {
    for (const auto& [nm, v] : *src.override_3d) {
      if (nm.first >= 1 && nm.first <= n_max) out.set_g_e(nm.first, nm.second, v);
    }
    return out;
  }

  const int np = opts.n_polar > 0 ? opts.n_polar : 2 * (n_max + 1);
  const int na = opts.n_azimuth > 0 ? opts.n_azimuth : 2 * (2 * n_max + 2);
  const QuadRule polar = gauss_legendre(np, -1.0, 1.0);

  // dF/dr sampled on the outer sphere.
  std::vector<std::vector<double>> dfr(np, std::vector<double>(na));
  std::vector<Vec3> dirs(np * na);
  for (int ip = 0; ip < np; ++ip) {
    const double ct = polar.nodes[ip];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int ia = 0; ia < na; ++ia) {
      const double phi = 2.0 * pi * ia / na;
      const Vec3 u{st * std::cos(phi), st * std::sin(phi), ct};
      dirs[ip * na + ia] = u;
      const Vec3 x{cfg.r_e * u[0], cfg.r_e * u[1], cfg.r_e * u[2]};
      dfr[ip][ia] = dot(newtonian_gradient(src, x), u);
    }
  }

  // g_{nm} = -int dF/dr conj(Y_n^m) domega; the azimuth integral is a plain
  // DFT in m, the polar one Gauss-Legendre in cos(theta).
  const double dphi = 2.0 * pi / na;
  for (int m = 0; m <= n_max; ++m) {
    // accumulate per polar node: h_m(ip) = sum_ia dF/dr e^{-im phi} dphi
    std::vector<cplx> hm(np);
    for (int ip = 0; ip < np; ++ip) {
      cplx acc(0.0);
      for (int ia = 0; ia < na; ++ia) {
        acc += dfr[ip][ia] * std::polar(1.0, -m * (2.0 * pi * ia / na));
      }
      hm[ip] = acc * dphi;
    }
    for (int n = std::max(1, m); n <= n_max; ++n) {
      cplx acc(0.0);
      for (int ip = 0; ip < np; ++ip) {
        acc += polar.weights[ip] * legendre_norm(n, m, polar.nodes[ip]) * hm[ip];
      }
      out.set_g_e(n, m, -acc);
      if (m > 0) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        // real dF/dr: g_{n,-m} = (-1)^m conj(g_{n,m})
        out.set_g_e(n, -m, sign * std::conj(-acc));
      }
    }
  }
  return out;
}

GapCheckResult gap_property_check(const ModeCoefficients2D& coeffs,
                                  const StructureConfig& cfg, GapVariant variant,
                                  int n_max) {
  n_max = std::min(n_max, coeffs.n_max());
  const double rho = cfg.rho();

  // Subsequence of |n| with nonzero coefficient content (max over +-n).
  double peak = 0.0;
  for (int n = 1; n <= n_max; ++n)
    peak = std::max(peak, std::max(std::abs(coeffs.g_e(n)), std::abs(coeffs.g_e(-n))));
  GapCheckResult res;
  if (peak == 0.0) {
    res.verdict = GapVerdict::fails;
    return res;
  }
  std::vector<int> ns;
  std::vector<double> mag2;
  for (int n = 1; n <= n_max; ++n) {
    const double a = std::max(std::abs(coeffs.g_e(n)), std::abs(coeffs.g_e(-n)));
    if (a > 1e-100 * peak) {
      ns.push_back(n);
      mag2.push_back(a * a);
    }
  }
  if (ns.size() < 2) {
    res.verdict = GapVerdict::fails;  // finite spectrum: quotient sequence terminates
    if (ns.size() == 1) res.quotients.push_back({ns[0], 0.0});
    return res;
  }

  const double denom_pow = (variant == GapVariant::GP) ? 1.0 : 2.0;
  for (size_t k = 0; k + 1 < ns.size(); ++k) {
    const double gap = static_cast<double>(ns[k + 1] - ns[k]);
    const double e_k = (variant == GapVariant::GP) ? gap : 2.0 * gap;
    const double q = pow_flush(rho, e_k) * mag2[k] /
                     (ns[k] * pow_flush(rho, denom_pow * ns[k]));
    res.quotients.push_back({ns[k], q});
  }

  // Trend over the tail half of the window.
  const size_t K = res.quotients.size();
  if (K < 3) {
    res.verdict = GapVerdict::inconclusive;
    return res;
  }
  const size_t tail = std::max<size_t>(3, K / 2);
  bool increasing = true, decreasing = true;
  for (size_t k = K - tail; k + 1 < K; ++k) {
    if (!(res.quotients[k + 1].second > res.quotients[k].second)) increasing = false;
    if (!(res.quotients[k + 1].second < res.quotients[k].second)) decreasing = false;
  }
  if (increasing)
    res.verdict = GapVerdict::holds_up_to_n_max;
  else if (decreasing)
    res.verdict = GapVerdict::fails;
  else
    res.verdict = GapVerdict::inconclusive;
  return res;
}

}  // namespace calr
