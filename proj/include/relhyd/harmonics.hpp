#pragma once

#include "relhyd/types.hpp"

namespace relhyd {

/// Quantization axis and m label of a generalized l = 1 harmonic factor.
/// The odd (m = +-1) parts are taken linear in n.Lhat.
struct AngularFactor {
    int m = 0;           // -1, 0, +1
    Vec3 axis{0, 0, 1};  // unit quantization axis n

    AngularFactor() = default;
    AngularFactor(int m_, const Vec3& axis_);
};

/// Unit direction of the orbital angular momentum for position angles
/// (theta, phi) and momentum angle nu:
///   Lhat = (-cos t cos f sin v - sin f cos v,
///           -cos t sin f sin v + cos f cos v,
///            sin t sin v).
Vec3 lhat(double theta, double phi, double nu);

/// Phase-space generalization of |Y_1m|^2 evaluated on a given Lhat:
///   m = +-1:  (3/4pi) [(n.Lhat)^2 +- n.Lhat]
///   m =  0 :  (3/4pi) [1 - 2 (n.Lhat)^2]
double calY(const AngularFactor& af, const Vec3& lhat_dir);

/// (1/2pi) integral of calY over nu at fixed theta (z axis), computed by
/// periodic trapezoidal quadrature; equals |Y_1m(theta)|^2.
double nu_average(int m, double theta);

/// nu-average of Lhat_z * calY at fixed theta; equals (3 m / 8 pi) sin^2.
double nu_average_lz(int m, double theta);

struct Moments {
    double Lz = 0.0, Lx = 0.0, Ly = 0.0;
};

/// Full angular averages of Lhat_i * calY over (theta, phi, nu) by
/// Gauss-Legendre x trapezoid product quadrature; equals (m, 0, 0).
Moments angular_momentum_moments(int m);

} // namespace relhyd
