#include "relhyd/harmonics.hpp"

#include <cmath>
#include <numbers>

#include "relhyd/errors.hpp"
#include "relhyd/quadrature.hpp"

namespace relhyd {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kTrapPoints = 64;   // exact for trigonometric polynomials of low degree
constexpr int kGaussOrder = 32;
} // namespace

AngularFactor::AngularFactor(int m_, const Vec3& axis_) : m(m_), axis(axis_) {
    if (m < -1 || m > 1)
        throw OutOfRange("angular factor requires m in {-1, 0, 1}");
    if (std::fabs(axis.norm() - 1.0) > 1e-14)
        throw OutOfRange("quantization axis must have unit norm");
}

Vec3 lhat(double theta, double phi, double nu) {
    double st = std::sin(theta), ct = std::cos(theta);
    double sf = std::sin(phi), cf = std::cos(phi);
    double sv = std::sin(nu), cv = std::cos(nu);
    return {-ct * cf * sv - sf * cv, -ct * sf * sv + cf * cv, st * sv};
}

double calY(const AngularFactor& af, const Vec3& lhat_dir) {
    double u = af.axis.dot(lhat_dir);
    double pref = 3.0 / (4.0 * kPi);
    switch (af.m) {
        case -1: return pref * (u * u - u);
        case 0:  return pref * (1.0 - 2.0 * u * u);
        case 1:  return pref * (u * u + u);
    }
    throw OutOfRange("angular factor requires m in {-1, 0, 1}");
}

namespace {

template <typename F>
double trapezoid_periodic(F&& f, double period, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += f(period * i / n);
    return sum * period / n;
}

} // namespace

double nu_average(int m, double theta) {
    AngularFactor af(m, Vec3{0, 0, 1});
    auto f = [&](double nu) { return calY(af, lhat(theta, 0.0, nu)); };
    return trapezoid_periodic(f, 2.0 * kPi, kTrapPoints) / (2.0 * kPi);
}

double nu_average_lz(int m, double theta) {
    AngularFactor af(m, Vec3{0, 0, 1});
    auto f = [&](double nu) {
        Vec3 lh = lhat(theta, 0.0, nu);
        return lh.z * calY(af, lh);
    };
    return trapezoid_periodic(f, 2.0 * kPi, kTrapPoints) / (2.0 * kPi);
}

Moments angular_momentum_moments(int m) {
    AngularFactor af(m, Vec3{0, 0, 1});
    const GaussRule& gl = gauss_legendre(kGaussOrder);

    Moments mom;
    // integral over cos(theta) in [-1,1], phi and nu periodic
    for (int i = 0; i < kGaussOrder; ++i) {
        double ct = gl.nodes[i];
        double theta = std::acos(ct);
        auto inner = [&](int component) {
            return trapezoid_periodic(
                [&](double phi) {
                    return trapezoid_periodic(
                        [&](double nu) {
                            Vec3 lh = lhat(theta, phi, nu);
                            double y = calY(af, lh);
                            double c = component == 0 ? lh.z : (component == 1 ? lh.x : lh.y);
                            return c * y;
                        },
                        2.0 * kPi, kTrapPoints) / (2.0 * kPi);
                },
                2.0 * kPi, kTrapPoints);
        };
        mom.Lz += gl.weights[i] * inner(0);
        mom.Lx += gl.weights[i] * inner(1);
        mom.Ly += gl.weights[i] * inner(2);
    }
    return mom;
}

} // namespace relhyd
