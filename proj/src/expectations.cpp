#include "relhyd/expectations.hpp"

#include <cmath>
#include <limits>

namespace relhyd {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct BracketPair {
    double inv_R;   // <1/R>
    double inv_r;   // <1/r>
    double p2;      // <<p^2>>
};

BracketPair brackets_for(const StateDensity& state) {
    double ell = state.ell();
    if (state.is_yrast()) {
        double E = state.energy();
        double u = (1.0 + ell) * (1.0 + ell);
        return {E / (2.0 * u), E / u, 1.0 / u};
    }
    double s = std::sqrt(4.0 + 3.0 * ell);
    double inv_r = 1.0 / ((2.0 + ell) * s);
    return {0.5 * inv_r, inv_r, 1.0 / ((2.0 + ell) * (2.0 + ell))};
}

} // namespace

ExpectationReport yrast_expectations(int n, const Coupling& coupling) {
    StateDensity sd = StateDensity::yrast(n, coupling);
    double ell = sd.ell();
    double E = sd.energy();
    double u = 1.0 + ell;

    ExpectationReport rep;
    rep.inv_r = E / (u * u);
    rep.inv_r2 = 2.0 * E * E / (u * u * u * (1.0 + 2.0 * ell));
    rep.inv_R = E / (2.0 * u * u);
    rep.inv_R2 = E * E / (u * u * u * (3.0 + 4.0 * ell));
    rep.pr2 = E * E / (4.0 * u * u * u);
    rep.L2_over_r2 = E * E * (3.0 + 4.0 * ell) / (4.0 * u * u * u);
    rep.p2 = 1.0 / (u * u);
    rep.naive_E = naive_classical_energy(n, coupling);
    rep.double_bracket_E = double_bracket_energy(sd);
    rep.double_bracket_E_prime = double_bracket_energy_prime(sd);
    rep.quantum_E = E;
    return rep;
}

ExpectationReport two_s_expectations(const Coupling& coupling) {
    StateDensity sd = StateDensity::two_s_a(coupling);
    BracketPair b = brackets_for(sd);

    ExpectationReport rep;
    rep.inv_r = b.inv_r;
    rep.inv_r2 = kNaN;
    rep.inv_R = b.inv_R;
    rep.inv_R2 = kNaN;
    rep.pr2 = kNaN;
    rep.L2_over_r2 = kNaN;
    rep.p2 = b.p2;
    rep.naive_E = kNaN;
    rep.double_bracket_E = double_bracket_energy(sd);
    rep.double_bracket_E_prime = double_bracket_energy_prime(sd);
    rep.quantum_E = sd.energy();
    return rep;
}

double naive_classical_energy(int n, const Coupling& coupling) {
    StateDensity sd = StateDensity::yrast(n, coupling);
    double ell = sd.ell();
    double E = sd.energy();
    double u = 1.0 + ell;
    double inv_R = E / (2.0 * u * u);
    double inv_R2 = E * E / (u * u * u * (3.0 + 4.0 * ell));
    double a = coupling.a2();
    return 1.0 - a * inv_R + 0.5 * a * a * inv_R2;
}

double double_bracket_energy(const StateDensity& state) {
    double a = state.coupling().a2();
    BracketPair b = brackets_for(state);
    return std::sqrt(1.0 + a * a * b.inv_R * b.inv_R) - a * b.inv_R;
}

double double_bracket_energy_prime(const StateDensity& state) {
    double a = state.coupling().a2();
    BracketPair b = brackets_for(state);
    return std::sqrt(1.0 + a * b.p2) - a * b.inv_r;
}

} // namespace relhyd
