#ifndef CALR_SPH_HARM_HPP
#define CALR_SPH_HARM_HPP

#include <vector>

#include "calr/types.hpp"

namespace calr {

/// Complex orthonormal spherical harmonics with Condon-Shortley phase:
/// Y_n^m(theta, phi) = Pbar_n^m(cos theta) e^{i m phi},
/// Y_n^{-m} = (-1)^m conj(Y_n^m), and int_{S^2} |Y_n^m|^2 domega = 1.

/// Normalized associated Legendre Pbar_n^m(x) for m >= 0 (stable recurrence,
/// usable up to n of a few thousand).
double legendre_norm(int n, int m, double x);

/// Y_n^m at the unit vector u (|u| = 1); m may be negative.
cplx sph_harm(int n, int m, const Vec3& u);

/// All degrees 0..n_max of Pbar_n^m(x) for fixed m >= 0 in one sweep.
std::vector<double> legendre_norm_all(int n_max, int m, double x);

/// Legendre polynomial P_n(x) (unnormalized, P_n(1) = 1).
double legendre(int n, double x);

}  // namespace calr

#endif
