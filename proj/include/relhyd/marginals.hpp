#pragma once

#include <vector>

#include "relhyd/quadrature.hpp"

namespace relhyd {

/// Momentum marginal of the non-relativistic ground-state Wigner function:
///   W(p) = 8 / (pi^2 (1 + p^2)^4).
double wigner_marginal(double p);

/// Momentum marginal of the non-relativistic classical ground-state density,
///   P(p) = (2p/pi) int_0^inf dR R^6 e^{-2R} / (1 + p^2 R / 2)^5,
/// by adaptive quadrature.  Vanishes linearly at p = 0.
double classical_marginal(double p, const QuadratureSpec& spec = {});

/// d P / d p at p = 0, i.e. (2/pi) int R^6 e^{-2R} dR = 11.25 / pi.
double classical_marginal_slope0(const QuadratureSpec& spec = {});

struct FigureRow {
    double p = 0.0;
    double wigner = 0.0;
    double classical = 0.0;
};

/// Both marginal curves on the given grid (sorted, non-negative).
std::vector<FigureRow> figure_data(const std::vector<double>& p_grid,
                                   const QuadratureSpec& spec = {});

/// Least-squares slope of log f vs log p over a log-uniform grid in
/// [p_lo, p_hi].
double log_log_slope(const std::function<double(double)>& f, double p_lo,
                     double p_hi, int n_points = 25);

/// Locations where W - P changes sign on (lo, hi), each refined by bisection.
std::vector<double> marginal_crossings(double lo, double hi, int scan_points = 512,
                                       const QuadratureSpec& spec = {});

} // namespace relhyd
