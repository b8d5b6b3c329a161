#pragma once

#include "relhyd/spectrum.hpp"
#include "relhyd/types.hpp"

namespace relhyd {

/// Orbit energy determined by the scale R:  E = sqrt(1 + a^2/R^2) - a/R with
/// a = (alpha Z)^2.  Returns exactly 1 at zero coupling (the scale R then
/// encodes the finite Kepler energy -1/R).
double orbit_energy(double R, const Coupling& coupling);

/// Orbit scale determined by the energy, closed form R = 2 a E / (1 - E^2).
double orbit_scale(double E, const Coupling& coupling);

/// Conserved quantities of the bound orbit through a phase point.
/// Throws Unbound for E >= 1 and SubBarrier for L < alpha Z.
OrbitalElements orbital_elements(const PhasePoint& pt, const Coupling& coupling);

/// Assembles the phase point of a chart point:
///   q   = sqrt(2 E (1/r - 1/R)),  p_r = q cos(mu),  omega L = r q sin(mu),
/// momentum built in the frame along r then rotated to the lab frame.
/// E must be the orbit energy belonging to R (see orbit_energy).
PhasePoint chart_to_phase(const ChartPoint& cp, const Coupling& coupling, double E);

/// Inverse of chart_to_phase (up to the 2 pi periodicity of nu).
ChartPoint phase_to_chart(const PhasePoint& pt, const Coupling& coupling);

/// Density of the invariant momentum volume d^3p/gamma in (mu, nu, R):
///   (1/(2 R^2 Phi(E))) sqrt(2/(E r) - 2/(E R)) sin(mu),
///   Phi(E) = sqrt(1 + a^2/R^2) / (2 E^2).
/// The r-dependence through gamma cancels identically.
double measure_factor(const ChartPoint& cp, const Coupling& coupling, double E);

/// Stationary phase-space density built from the conserved quantities
/// (E, L).  Kinds:
///   yrast(n)   non-negative, momentum marginal R_{n,n-1}(r)^2
///   two_s_a    the 2s construction with the polynomial in w^2 L^2 R/(2E)
///   two_s_b    the alternative 2s construction with the polynomial in R
///   two_s_mix  (1-lambda) * two_s_a + lambda * two_s_b
/// Densities follow the full 3-D normalization: the integral over
/// dV_r dV_p equals 1, i.e. the (4 pi)^-1 solid-angle factor is included.
class StateDensity {
public:
    enum class Kind { yrast, two_s_a, two_s_b, two_s_mix };

    static StateDensity yrast(int n, const Coupling& coupling);
    static StateDensity two_s_a(const Coupling& coupling);
    static StateDensity two_s_b(const Coupling& coupling);
    static StateDensity two_s_mix(double lambda, const Coupling& coupling);

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    double ell() const { return ell_; }
    double energy() const { return energy_; }
    double mix_lambda() const { return lambda_; }
    const Coupling& coupling() const { return coupling_; }
    bool is_yrast() const { return kind_ == Kind::yrast; }

    /// Density at given orbital elements, without the (4 pi)^-1 factor
    /// (the radial convention: integrating dV_p gives R(r)^2).
    double radial_phase_density(const OrbitalElements& el) const;

private:
    StateDensity() = default;
    Kind kind_ = Kind::yrast;
    int n_ = 1;
    double ell_ = 0.0;
    double energy_ = 1.0;
    double lambda_ = 0.0;
    Coupling coupling_;
};

/// Full 3-D density at a phase point: radial_phase_density / (4 pi).
double density_eval(const StateDensity& sd, const PhasePoint& pt);

/// Same density evaluated from precomputed orbital elements.
double density_from_elements(const StateDensity& sd, const OrbitalElements& el);

/// Closed-form momentum marginal: integral of the density over dV_p.
/// Equals R(r)^2 / (4 pi) for the matching radial state.
double momentum_marginal(const StateDensity& sd, double r);

/// Closed-form marginal density of the orbit scale R (position, mu and nu
/// integrated out); normalized to unit integral over R in (0, inf).
double r_marginal(const StateDensity& sd, double R);

/// Joint density of (r, R): r^2 times the (mu, nu)-integrated form.  Its sign
/// structure carries the 2s negativity; integrates to 1 over 0 < r < R < inf.
double radial_density(const StateDensity& sd, double r, double R);

struct ScanResult {
    double min_value = 0.0;
    ChartPoint location;
};

/// Coarse grid over (r/R, R, mu) at the given resolution per axis, followed
/// by multi-start local refinement.  Returns the estimated global minimum of
/// the full 3-D density and where it occurs.
ScanResult negativity_scan(const StateDensity& sd, int resolution, int workers = 1);

} // namespace relhyd
