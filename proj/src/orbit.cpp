#include "relhyd/orbit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "relhyd/errors.hpp"
#include "relhyd/quadrature.hpp"

namespace relhyd {

namespace {

constexpr double kCollisionRadius = 1e-8;

using State6 = std::array<double, 6>;

State6 rhs(const State6& y, double a) {
    double p2 = y[3] * y[3] + y[4] * y[4] + y[5] * y[5];
    double gamma = std::sqrt(1.0 + a * p2);
    double r2 = y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
    double r3 = r2 * std::sqrt(r2);
    return {a * y[3] / gamma, a * y[4] / gamma, a * y[5] / gamma,
            -a * y[0] / r3, -a * y[1] / r3, -a * y[2] / r3};
}

// Fehlberg 7(8), 13 stages; the error estimate uses the classic
// (41/840)(k1 + k11 - k12 - k13) combination.
constexpr int kStages = 13;
constexpr double kC[kStages] = {
    0.0, 2.0 / 27.0, 1.0 / 9.0, 1.0 / 6.0, 5.0 / 12.0, 0.5, 5.0 / 6.0,
    1.0 / 6.0, 2.0 / 3.0, 1.0 / 3.0, 1.0, 0.0, 1.0};
constexpr double kA[kStages][kStages - 1] = {
    {},
    {2.0 / 27.0},
    {1.0 / 36.0, 1.0 / 12.0},
    {1.0 / 24.0, 0.0, 1.0 / 8.0},
    {5.0 / 12.0, 0.0, -25.0 / 16.0, 25.0 / 16.0},
    {1.0 / 20.0, 0.0, 0.0, 1.0 / 4.0, 1.0 / 5.0},
    {-25.0 / 108.0, 0.0, 0.0, 125.0 / 108.0, -65.0 / 27.0, 125.0 / 54.0},
    {31.0 / 300.0, 0.0, 0.0, 0.0, 61.0 / 225.0, -2.0 / 9.0, 13.0 / 900.0},
    {2.0, 0.0, 0.0, -53.0 / 6.0, 704.0 / 45.0, -107.0 / 9.0, 67.0 / 90.0, 3.0},
    {-91.0 / 108.0, 0.0, 0.0, 23.0 / 108.0, -976.0 / 135.0, 311.0 / 54.0,
     -19.0 / 60.0, 17.0 / 6.0, -1.0 / 12.0},
    {2383.0 / 4100.0, 0.0, 0.0, -341.0 / 164.0, 4496.0 / 1025.0, -301.0 / 82.0,
     2133.0 / 4100.0, 45.0 / 82.0, 45.0 / 164.0, 18.0 / 41.0},
    {3.0 / 205.0, 0.0, 0.0, 0.0, 0.0, -6.0 / 41.0, -3.0 / 205.0, -3.0 / 41.0,
     3.0 / 41.0, 6.0 / 41.0, 0.0},
    {-1777.0 / 4100.0, 0.0, 0.0, -341.0 / 164.0, 4496.0 / 1025.0, -289.0 / 82.0,
     2193.0 / 4100.0, 51.0 / 82.0, 33.0 / 164.0, 12.0 / 41.0, 0.0, 1.0}};
// 8th-order propagation weights
constexpr double kB8[kStages] = {
    0.0, 0.0, 0.0, 0.0, 0.0, 34.0 / 105.0, 9.0 / 35.0, 9.0 / 35.0,
    9.0 / 280.0, 9.0 / 280.0, 0.0, 41.0 / 840.0, 41.0 / 840.0};

struct StepResult {
    State6 y;
    double err;  // max-norm of the embedded error, scaled by tolerance
};

StepResult rk78_step(const State6& y0, double h, double a, double tol) {
    std::array<State6, kStages> k;
    k[0] = rhs(y0, a);
    for (int s = 1; s < kStages; ++s) {
        State6 ys = y0;
        for (int j = 0; j < s; ++j) {
            if (kA[s][j] == 0.0)
                continue;
            for (int d = 0; d < 6; ++d)
                ys[d] += h * kA[s][j] * k[j][d];
        }
        k[s] = rhs(ys, a);
    }
    StepResult res;
    res.y = y0;
    for (int d = 0; d < 6; ++d) {
        for (int s = 0; s < kStages; ++s)
            if (kB8[s] != 0.0)
                res.y[d] += h * kB8[s] * k[s][d];
    }
    res.err = 0.0;
    for (int d = 0; d < 6; ++d) {
        double e = h * 41.0 / 840.0 * (k[0][d] + k[10][d] - k[11][d] - k[12][d]);
        double scale = tol * (1.0 + std::max(std::fabs(y0[d]), std::fabs(res.y[d])));
        res.err = std::max(res.err, std::fabs(e) / scale);
    }
    return res;
}

} // namespace

Trajectory orbit_integrate(const PhasePoint& start, const Coupling& coupling,
                           double t_end, double tol) {
    if (coupling.zero())
        throw OutOfRange("orbit integration requires alpha*Z > 0 (scaled time)");
    if (!(tol > 0.0) || !(t_end > 0.0))
        throw OutOfRange("orbit integration requires t_end > 0 and tol > 0");
    double a = coupling.a2();

    State6 y{start.position.x, start.position.y, start.position.z,
             start.momentum.x, start.momentum.y, start.momentum.z};

    auto energy = [&](const State6& s) {
        double p2 = s[3] * s[3] + s[4] * s[4] + s[5] * s[5];
        double r = std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
        return std::sqrt(1.0 + a * p2) - a / r;
    };
    auto angmom = [&](const State6& s) {
        Vec3 r{s[0], s[1], s[2]}, p{s[3], s[4], s[5]};
        return r.cross(p).norm();
    };

    double E0 = energy(y), L0 = angmom(y);
    Trajectory traj;
    traj.times.push_back(0.0);
    traj.points.push_back(start);

    double t = 0.0;
    double h = t_end * 1e-6;
    const double h_min = t_end * 1e-14;
    while (t < t_end) {
        h = std::min(h, t_end - t);
        StepResult step = rk78_step(y, h, a, tol);
        if (step.err > 1.0 && h > h_min) {
            h *= std::clamp(0.9 * std::pow(step.err, -1.0 / 8.0), 0.1, 0.9);
            continue;
        }
        if (h <= h_min && step.err > 1.0)
            throw ToleranceFailure("step size underflow in orbit integration");
        t += h;
        y = step.y;
        double r = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
        if (r < kCollisionRadius)
            throw Collision("trajectory reached r = " + std::to_string(r));
        traj.times.push_back(t);
        traj.points.push_back(PhasePoint{{y[0], y[1], y[2]}, {y[3], y[4], y[5]}});
        traj.energy_drift = std::max(traj.energy_drift,
                                     std::fabs(energy(y) - E0) / std::fabs(E0));
        traj.angmom_drift = std::max(traj.angmom_drift,
                                     std::fabs(angmom(y) - L0) / L0);
        h *= std::clamp(0.9 * std::pow(std::max(step.err, 1e-10), -1.0 / 8.0), 0.2, 5.0);
    }
    return traj;
}

PhasePoint circular_orbit(double r, const Coupling& coupling) {
    if (!(r > 0.0))
        throw OutOfRange("circular orbit requires r > 0");
    double a = coupling.a2();
    // force balance: gamma^2 = 1 + a gamma / r  =>  L^2 = r gamma
    double gamma = 0.5 * (a / r + std::sqrt(a * a / (r * r) + 4.0));
    double pperp = std::sqrt(r * gamma) / r;
    return PhasePoint{{r, 0.0, 0.0}, {0.0, pperp, 0.0}};
}

double circular_orbit_period(double r, const Coupling& coupling) {
    if (coupling.zero())
        throw OutOfRange("period is infinite at zero coupling (scaled time)");
    double a = coupling.a2();
    double gamma = 0.5 * (a / r + std::sqrt(a * a / (r * r) + 4.0));
    double pperp = std::sqrt(r * gamma) / r;
    // speed a p/gamma around circumference 2 pi r
    return 2.0 * std::numbers::pi * r * gamma / (a * pperp);
}

double radial_period(const OrbitalElements& el, const Coupling& coupling) {
    if (coupling.zero())
        throw OutOfRange("period is infinite at zero coupling (scaled time)");
    double a = coupling.a2();
    double wl2 = el.omega * el.omega * el.L * el.L;
    double disc = 1.0 - 2.0 * wl2 / (el.E * el.R);
    if (disc < 0.0)
        throw DomainError("orbital elements admit no radial turning points");
    double root = std::sqrt(disc);
    double r_minus = 0.5 * el.R * (1.0 - root);
    double r_plus = 0.5 * el.R * (1.0 + root);
    double rbar = 0.5 * (r_plus + r_minus);
    double half_width = 0.5 * (r_plus - r_minus);

    // T = 2/(a sqrt(2E/R)) * int_0^pi gamma(r(psi)) r(psi) dpsi,
    // r(psi) = rbar - half_width cos(psi); the sqrt singularities at the
    // turning points cancel against dr.
    const GaussRule& gl = gauss_legendre(64);
    double sum = 0.0;
    for (int i = 0; i < 64; ++i) {
        double psi = 0.5 * std::numbers::pi * (gl.nodes[i] + 1.0);
        double r = rbar - half_width * std::cos(psi);
        double gamma = el.E + a / r;
        sum += gl.weights[i] * gamma * r;
    }
    sum *= 0.5 * std::numbers::pi;
    return 2.0 * sum / (a * std::sqrt(2.0 * el.E / el.R));
}

} // namespace relhyd
