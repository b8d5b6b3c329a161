#pragma once

#include <cmath>
#include <cstdint>

#include "relhyd/errors.hpp"

namespace relhyd {

/// Minimal 3-vector; atomic units throughout.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// The single dimensionless knob of the scaled problem, alpha*Z.
/// All relativistic corrections enter through a2() = (alpha Z)^2.
struct Coupling {
    double alpha_z = 0.0;

    Coupling() = default;
    explicit Coupling(double az) : alpha_z(az) {
        if (!(az >= 0.0))
            throw OutOfRange("coupling alpha*Z must be non-negative");
    }

    double a2() const { return alpha_z * alpha_z; }
    bool zero() const { return alpha_z == 0.0; }
};

/// Level labels (n, l) with 1 <= n, 0 <= l <= n-1.
struct QuantumNumbers {
    int n = 1;
    int l = 0;

    QuantumNumbers() = default;
    QuantumNumbers(int n_, int l_) : n(n_), l(l_) {
        if (n < 1 || l < 0 || l > n - 1)
            throw OutOfRange("quantum numbers require 1 <= n and 0 <= l <= n-1");
    }

    /// Maximal angular momentum for the principal number: l = n-1.
    bool is_yrast() const { return l == n - 1; }
};

/// Length/time scales of the unit system; energies are reported in units of
/// m c^2 and angular momenta in units of hbar.
struct AtomicUnits {
    double bohr_radius_m = 0.0;
    double bohr_time_s = 0.0;
    double rest_energy_scale = 1.0;
};

/// Instantaneous particle state (position, momentum) in atomic units.
struct PhasePoint {
    Vec3 position;
    Vec3 momentum;
};

/// Conserved quantities of a bound orbit.
///   E      total energy, units of m c^2, 0 < E < 1 for bound orbits
///   L      angular momentum magnitude, units of hbar, L >= alpha Z
///   omega  sqrt(1 - (alpha Z)^2 / L^2)
///   R      orbit scale solving E = sqrt(1 + (aZ)^4/R^2) - (aZ)^2/R
struct OrbitalElements {
    double E = 0.0;
    double L = 0.0;
    double omega = 0.0;
    double R = 0.0;
};

/// Orbit-adapted chart: position (r, theta, phi), orbit scale R, and the
/// momentum angles (mu, nu) parameterising (p_r, omega L) on the shell.
struct ChartPoint {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double R = 0.0;
    double mu = 0.0;
    double nu = 0.0;
};

} // namespace relhyd
