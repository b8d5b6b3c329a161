#pragma once

#include <span>

#include "relhyd/types.hpp"

namespace relhyd {

/// Effective angular momentum ell_l solving ell(ell+1) = l(l+1) - (aZ)^2:
///   ell_l = -1/2 + sqrt((2l+1)^2 - 4 (aZ)^2) / 2.
/// Throws DegenerateCoupling once the square root argument is <= 0.
double effective_ell(int l, const Coupling& coupling);

/// Bound level energy in units of m c^2, valid for every (n, l):
///   E_nl = [1 + (aZ)^2 / (n - l + ell_l)^2]^(-1/2).
double level_energy(const QuantumNumbers& qn, const Coupling& coupling);

/// Weak-coupling expansion of level_energy through order (aZ)^4:
///   1 - (aZ)^2/(2n^2) - (aZ)^4 [1/(n^3(2l+1)) - 3/(8n^4)].
double level_energy_series(const QuantumNumbers& qn, const Coupling& coupling);

/// Inverts level_energy for the squared coupling:
///   (aZ)^2 = (1-E^2)/E^2 * (n - l + ell_l)^2,
/// solved by fixed-point iteration since ell_l itself depends on the coupling.
/// Returns (alpha Z)^2.  Requires 0 < E < 1.
double coupling_from_energy(const QuantumNumbers& qn, double energy);

/// Electron-value unit scales for nuclear charge Z:
/// a0 = 5.29e-11/Z m, tau0 = 2.418e-17/Z^2 s.
AtomicUnits atomic_units(double Z);

/// Normalized bound-state radial wavefunction
///   R(r) = C r^ell (1 - c r) exp(-lambda r),
/// covering the ground state, the Yrast family (c = 0) and the 2s state.
/// C is fixed by unit L2 norm under the weight r^2.
class RadialState {
public:
    enum class Kind { ground, yrast, two_s };

    static RadialState ground(const Coupling& coupling);
    static RadialState yrast(int n, const Coupling& coupling);
    static RadialState two_s(const Coupling& coupling);

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    int l() const { return l_; }
    double ell() const { return ell_; }
    double energy() const { return energy_; }
    double norm_constant() const { return norm_; }
    double decay_rate() const { return lambda_; }
    double node_coefficient() const { return node_coeff_; }
    const Coupling& coupling() const { return coupling_; }

private:
    RadialState() = default;
    Kind kind_ = Kind::ground;
    int n_ = 1, l_ = 0;
    double ell_ = 0.0, energy_ = 1.0, norm_ = 0.0;
    double lambda_ = 0.0;      // exponential decay rate in r
    double node_coeff_ = 0.0;  // c in (1 - c r); zero for single-term states
    Coupling coupling_;
};

/// Pointwise value of the radial wavefunction.  r = 0 is admissible: the
/// value is 0 for ell > 0, C for ell = 0, and +infinity for ell < 0 (the
/// r^ell singularity is integrable since 2 ell > -1).
double radial_wavefunction(const RadialState& state, double r);

/// Max over the grid of |H_scaled psi| / |psi| where H_scaled is the scaled
/// radial operator
///   -1/2 d^2 - (1/x) d + ell(ell+1)/(2x^2) - 1/x + 1/(2 n_eff^2)
/// acting on psi(x) = R(x / E_nl) in the stretched coordinate x = r E_nl,
/// with n_eff = n - l + ell_l.  Analytic derivatives; grid strictly in (0, inf).
double schrodinger_residual(const RadialState& state, std::span<const double> grid);

} // namespace relhyd
