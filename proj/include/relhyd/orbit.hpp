#pragma once

#include <vector>

#include "relhyd/types.hpp"

namespace relhyd {

/// Accepted integration steps plus the maximal relative deviations of the
/// conserved quantities along the way.
struct Trajectory {
    std::vector<double> times;
    std::vector<PhasePoint> points;
    double energy_drift = 0.0;
    double angmom_drift = 0.0;
};

/// Integrates the scaled equations of motion
///   dr/dt = a p / gamma,   dp/dt = -a r / r^3,   a = (alpha Z)^2,
/// with an adaptive embedded Runge-Kutta 7(8) pair at local tolerance tol.
/// Throws Collision below r = 1e-8 and ToleranceFailure on step underflow.
Trajectory orbit_integrate(const PhasePoint& start, const Coupling& coupling,
                           double t_end, double tol);

/// Initial data of the circular orbit of radius r (force balance L^2 = r gamma).
PhasePoint circular_orbit(double r, const Coupling& coupling);

/// Period of one lab-frame revolution of that circular orbit.
double circular_orbit_period(double r, const Coupling& coupling);

/// Radial (perihelion-to-perihelion) period of the orbit with the given
/// elements, evaluated by quadrature over the turning-angle parameter.
double radial_period(const OrbitalElements& el, const Coupling& coupling);

} // namespace relhyd
