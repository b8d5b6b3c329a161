#pragma once

#include <functional>
#include <vector>

namespace relhyd {

/// Tolerances for the adaptive integrator.  Integration succeeds once the
/// accumulated error estimate falls below max(abs_tol, rel_tol * |value|).
struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
    enum class Map { exponential, rational };
    Map semi_infinite_map = Map::rational;
};

struct IntegralResult {
    double value = 0.0;
    double error = 0.0;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
/// Computed once per order by Newton iteration on P_n and cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// Adaptive integral of f over the finite interval [a, b].
/// Integrable endpoint singularities (r^p with p > -1) are admissible; the
/// rule never evaluates f at the endpoints.  Throws MaxSubdivisions if the
/// tolerance cannot be met within spec.max_subdivisions intervals.
IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const QuadratureSpec& spec = {});

/// Adaptive integral of f over [a, infinity), using the map selected in
/// spec.semi_infinite_map (rational x = a + t/(1-t) or exponential
/// x = a - log(1-t)).
IntegralResult integrate_to_inf(const std::function<double(double)>& f, double a,
                                const QuadratureSpec& spec = {});

} // namespace relhyd
