#include "relhyd/marginals.hpp"

#include <cmath>
#include <numbers>

#include "relhyd/errors.hpp"

namespace relhyd {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

double wigner_marginal(double p) {
    if (p < 0.0)
        throw OutOfRange("wigner_marginal requires p >= 0");
    double u = 1.0 + p * p;
    return 8.0 / (kPi * kPi * u * u * u * u);
}

double classical_marginal(double p, const QuadratureSpec& spec) {
    if (p < 0.0)
        throw OutOfRange("classical_marginal requires p >= 0");
    if (p == 0.0)
        return 0.0;
    double half_p2 = 0.5 * p * p;
    auto f = [half_p2](double R) {
        double e = -2.0 * R;
        if (e < -700.0)
            return 0.0;
        double denom = 1.0 + half_p2 * R;
        double d2 = denom * denom;
        return R * R * R * R * R * R * std::exp(e) / (d2 * d2 * denom);
    };
    return 2.0 * p / kPi * integrate_to_inf(f, 0.0, spec).value;
}

double classical_marginal_slope0(const QuadratureSpec& spec) {
    auto f = [](double R) {
        double e = -2.0 * R;
        return e < -700.0 ? 0.0 : R * R * R * R * R * R * std::exp(e);
    };
    return 2.0 / kPi * integrate_to_inf(f, 0.0, spec).value;
}

std::vector<FigureRow> figure_data(const std::vector<double>& p_grid,
                                   const QuadratureSpec& spec) {
    std::vector<FigureRow> rows;
    rows.reserve(p_grid.size());
    double prev = -1.0;
    for (double p : p_grid) {
        if (p < 0.0 || p < prev)
            throw OutOfRange("figure grid must be sorted and non-negative");
        prev = p;
        rows.push_back({p, wigner_marginal(p), classical_marginal(p, spec)});
    }
    return rows;
}

double log_log_slope(const std::function<double(double)>& f, double p_lo,
                     double p_hi, int n_points) {
    if (!(p_lo > 0.0) || !(p_hi > p_lo) || n_points < 2)
        throw OutOfRange("log_log_slope requires 0 < p_lo < p_hi and >= 2 points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n_points; ++i) {
        double lp = std::log(p_lo) + (std::log(p_hi) - std::log(p_lo)) * i / (n_points - 1);
        double lf = std::log(f(std::exp(lp)));
        sx += lp;
        sy += lf;
        sxx += lp * lp;
        sxy += lp * lf;
    }
    double n = n_points;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> marginal_crossings(double lo, double hi, int scan_points,
                                       const QuadratureSpec& spec) {
    auto diff = [&spec](double p) { return wigner_marginal(p) - classical_marginal(p, spec); };
    std::vector<double> found;
    double prev_p = lo > 0.0 ? lo : (hi - lo) / scan_points * 0.5;
    double prev_d = diff(prev_p);
    for (int i = 1; i <= scan_points; ++i) {
        double p = lo + (hi - lo) * i / scan_points;
        if (p <= prev_p)
            continue;
        double d = diff(p);
        if (prev_d == 0.0) {
            found.push_back(prev_p);
        } else if (d != 0.0 && std::signbit(d) != std::signbit(prev_d)) {
            double a = prev_p, b = p, fa = prev_d;
            for (int it = 0; it < 80; ++it) {
                double m = 0.5 * (a + b);
                double fm = diff(m);
                if (fm == 0.0) { a = b = m; break; }
                if (std::signbit(fm) == std::signbit(fa)) { a = m; fa = fm; }
                else { b = m; }
            }
            found.push_back(0.5 * (a + b));
        }
        prev_p = p;
        prev_d = d;
    }
    return found;
}

} // namespace relhyd
