#include "relhyd/spectrum.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "relhyd/special.hpp"

namespace relhyd {

double effective_ell(int l, const Coupling& coupling) {
    if (l < 0)
        throw OutOfRange("orbital number l must be non-negative");
    double disc = (2.0 * l + 1.0) * (2.0 * l + 1.0) - 4.0 * coupling.a2();
    if (disc <= 0.0)
        throw DegenerateCoupling("alpha*Z = " + std::to_string(coupling.alpha_z) +
                                 " reaches the fall-to-center regime at l = " +
                                 std::to_string(l));
    return -0.5 + 0.5 * std::sqrt(disc);
}

double level_energy(const QuantumNumbers& qn, const Coupling& coupling) {
    double ell = effective_ell(qn.l, coupling);
    double n_eff = qn.n - qn.l + ell;
    return 1.0 / std::sqrt(1.0 + coupling.a2() / (n_eff * n_eff));
}

double level_energy_series(const QuantumNumbers& qn, const Coupling& coupling) {
    double a = coupling.a2();
    double n = qn.n;
    return 1.0 - a / (2.0 * n * n) -
           a * a * (1.0 / (n * n * n * (2.0 * qn.l + 1.0)) - 3.0 / (8.0 * n * n * n * n));
}

double coupling_from_energy(const QuantumNumbers& qn, double energy) {
    if (!(energy > 0.0 && energy < 1.0))
        throw OutOfRange("coupling_from_energy requires 0 < E < 1");
    double pref = (1.0 - energy * energy) / (energy * energy);
    double a2 = pref * qn.n * qn.n;  // non-relativistic start: ell = l, n_eff = n
    for (int it = 0; it < 200; ++it) {
        double ell = effective_ell(qn.l, Coupling(std::sqrt(a2)));
        double n_eff = qn.n - qn.l + ell;
        double next = pref * n_eff * n_eff;
        if (std::fabs(next - a2) <= 1e-14 * std::max(next, 1e-30)) {
            a2 = next;
            break;
        }
        a2 = next;
    }
    return a2;
}

AtomicUnits atomic_units(double Z) {
    if (!(Z > 0.0))
        throw OutOfRange("atomic_units requires Z > 0");
    AtomicUnits u;
    u.bohr_radius_m = 5.29e-11 / Z;
    u.bohr_time_s = 2.418e-17 / (Z * Z);
    u.rest_energy_scale = 1.0;
    return u;
}

namespace {

// norm of r^ell exp(-lambda r) under weight r^2
double single_term_norm(double ell, double lambda) {
    return std::sqrt(std::pow(2.0 * lambda, 2.0 * ell + 3.0) / gamma_fn(2.0 * ell + 3.0));
}

} // namespace

RadialState RadialState::ground(const Coupling& coupling) {
    return yrast(1, coupling);
}

RadialState RadialState::yrast(int n, const Coupling& coupling) {
    QuantumNumbers qn(n, n - 1);
    RadialState s;
    s.kind_ = (n == 1) ? Kind::ground : Kind::yrast;
    s.n_ = n;
    s.l_ = n - 1;
    s.ell_ = effective_ell(s.l_, coupling);
    s.energy_ = level_energy(qn, coupling);
    s.lambda_ = s.energy_ / (s.ell_ + 1.0);
    s.node_coeff_ = 0.0;
    s.norm_ = single_term_norm(s.ell_, s.lambda_);
    s.coupling_ = coupling;
    return s;
}

RadialState RadialState::two_s(const Coupling& coupling) {
    RadialState s;
    s.kind_ = Kind::two_s;
    s.n_ = 2;
    s.l_ = 0;
    double ell = effective_ell(0, coupling);
    double root = std::sqrt(4.0 + 3.0 * ell);
    s.ell_ = ell;
    s.energy_ = (2.0 + ell) / root;
    s.lambda_ = 1.0 / root;
    s.node_coeff_ = 1.0 / ((1.0 + ell) * root);
    s.norm_ = std::sqrt((1.0 + ell) * std::pow(2.0, 3.0 + 2.0 * ell) /
                        ((2.0 + ell) * std::pow(4.0 + 3.0 * ell, 1.5 + ell) *
                         gamma_fn(2.0 + 2.0 * ell)));
    s.coupling_ = coupling;
    return s;
}

double radial_wavefunction(const RadialState& state, double r) {
    if (r < 0.0)
        throw OutOfRange("radial_wavefunction requires r >= 0");
    if (r == 0.0) {
        if (state.ell() > 0.0) return 0.0;
        if (state.ell() == 0.0) return state.norm_constant();
        return std::numeric_limits<double>::infinity();
    }
    return state.norm_constant() * std::pow(r, state.ell()) *
           (1.0 - state.node_coefficient() * r) * std::exp(-state.decay_rate() * r);
}

double schrodinger_residual(const RadialState& state, std::span<const double> grid) {
    // Work in the stretched coordinate x = r E_nl, where the wavefunction is
    //   psi(x) = x^ell (1 - c x) exp(-beta x),
    // beta = 1/n_eff, c = node_coeff / E_nl, and -1/(2 n_eff^2) plays the role
    // of the associated non-relativistic energy.
    double ell = state.ell();
    double n_eff = state.n() - state.l() + ell;
    double beta = 1.0 / n_eff;
    double c = state.node_coefficient() / state.energy();
    double eps = 1.0 / (2.0 * n_eff * n_eff);
    double ll1 = ell * (ell + 1.0);

    double worst = 0.0;
    for (double x : grid) {
        if (!(x > 0.0) || !std::isfinite(x))
            throw GridOutOfDomain("residual grid must lie strictly inside (0, inf)");
        double q = 1.0 - c * x;
        double psi = q;                      // common factor x^ell exp(-beta x) divided out
        double dpsi = ell / x * q - c - beta * q;
        double d2psi = ell * (ell - 1.0) / (x * x) * q - 2.0 * ell / x * c -
                       2.0 * beta * (ell / x * q - c) + beta * beta * q;
        double op = -0.5 * d2psi - dpsi / x + ll1 / (2.0 * x * x) * psi - psi / x + eps * psi;
        double denom = std::fabs(psi);
        if (denom < 1e-300)
            continue;  // grid point at the wavefunction node
        worst = std::max(worst, std::fabs(op) / denom);
    }
    return worst;
}

} // namespace relhyd
