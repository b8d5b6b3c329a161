#pragma once

#include "relhyd/phasespace.hpp"
#include "relhyd/types.hpp"

namespace relhyd {

/// Analytic expectation values over a stationary density, together with the
/// energy functionals built from them.  Entries without a closed form for the
/// given state are NaN.  Single brackets <.> are plain averages; pr2 and p2
/// are the factorized ("neglecting correlations") double brackets <<.>>.
struct ExpectationReport {
    double inv_r = 0.0;        // <1/r>
    double inv_r2 = 0.0;       // <1/r^2>
    double inv_R = 0.0;        // <1/R>
    double inv_R2 = 0.0;       // <1/R^2>
    double pr2 = 0.0;          // <<p_r^2>>
    double L2_over_r2 = 0.0;   // <omega^2 L^2 / r^2>
    double p2 = 0.0;           // <<p^2>>
    double naive_E = 0.0;      // 1 - a <1/R> + a^2/2 <1/R^2>
    double double_bracket_E = 0.0;
    double double_bracket_E_prime = 0.0;
    double quantum_E = 0.0;
};

/// Closed-form table for the Yrast level (n, n-1):
///   <1/r>   = E/(1+ell)^2            <1/r^2> = 2E^2/((1+ell)^3 (1+2ell))
///   <1/R>   = E/(2(1+ell)^2)         <1/R^2> = E^2/((1+ell)^3 (3+4ell))
///   <<pr^2>> = E^2/(4(1+ell)^3)      <w^2L^2/r^2> = E^2 (3+4ell)/(4(1+ell)^3)
///   <<p^2>> = 1/(1+ell)^2
ExpectationReport yrast_expectations(int n, const Coupling& coupling);

/// Closed-form entries for the 2s state: <1/r> = 1/((2+ell0) s),
/// <1/R> = <1/r>/2 and <<p^2>> = 1/(2+ell0)^2 with s = sqrt(4+3 ell0);
/// remaining single brackets are NaN.
ExpectationReport two_s_expectations(const Coupling& coupling);

/// Classical energy functional with the bare <1/R^2> term,
///   1 - a <1/R> + a^2/2 <1/R^2>;
/// exceeds the quantum level by a^2/(8 n^4 (4n-1)) + O(a^3).  Yrast only.
double naive_classical_energy(int n, const Coupling& coupling);

/// Resummed factorized energy sqrt(1 + a^2 <1/R>^2) - a <1/R>; agrees with
/// the quantum level exactly for the Yrast family and the 2s state.
double double_bracket_energy(const StateDensity& state);

/// Consistency route through the momentum average:
/// sqrt(1 + a <<p^2>>) - a <1/r>, with
/// <<p^2>> = <<p_r^2>> + <w^2 L^2/r^2> + a <1/r>^2.
double double_bracket_energy_prime(const StateDensity& state);

} // namespace relhyd
