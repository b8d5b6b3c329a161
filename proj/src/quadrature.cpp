#include "relhyd/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <string>

#include "relhyd/errors.hpp"

namespace relhyd {

namespace {

GaussRule make_gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n(x) = 0
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-16)
                break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

namespace {

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

// embedded pair: value from G31, error from |G31 - G15|
Interval estimate(const std::function<double(double)>& f, double a, double b) {
    static const GaussRule& g15 = gauss_legendre(15);
    static const GaussRule& g31 = gauss_legendre(31);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s15 = 0.0, s31 = 0.0;
    for (int i = 0; i < 15; ++i)
        s15 += g15.weights[i] * f(c + h * g15.nodes[i]);
    for (int i = 0; i < 31; ++i)
        s31 += g31.weights[i] * f(c + h * g31.nodes[i]);
    s15 *= h;
    s31 *= h;
    double err = std::fabs(s31 - s15);
    if (!std::isfinite(s31))
        err = std::numeric_limits<double>::infinity();
    return {a, b, s31, err};
}

} // namespace

IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const QuadratureSpec& spec) {
    if (a == b)
        return {0.0, 0.0};
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::priority_queue<Interval> heap;
    Interval whole = estimate(f, a, b);
    double total = whole.value;
    double toterr = whole.error;  // reducible error held in the heap
    double stuck = 0.0;           // error of intervals at roundoff width
    heap.push(whole);
    int used = 1;

    auto tolerance = [&]() {
        return std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
    };

    while (toterr + stuck > tolerance() && !heap.empty()) {
        if (used >= spec.max_subdivisions)
            throw MaxSubdivisions("quadrature tolerance unreachable after " +
                                  std::to_string(used) + " subdivisions");
        Interval worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // cannot split further; its error is no longer reducible
            toterr -= worst.error;
            stuck += worst.error;
            continue;
        }
        Interval left = estimate(f, worst.a, mid);
        Interval right = estimate(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        toterr += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++used;
    }
    return {sign * total, toterr + stuck};
}

IntegralResult integrate_to_inf(const std::function<double(double)>& f, double a,
                                const QuadratureSpec& spec) {
    std::function<double(double)> g;
    if (spec.semi_infinite_map == QuadratureSpec::Map::rational) {
        // x = a + t/(1-t), dx = dt/(1-t)^2
        g = [&f, a](double t) {
            double u = 1.0 - t;
            double x = a + t / u;
            double v = f(x);
            return v == 0.0 ? 0.0 : v / (u * u);
        };
    } else {
        // x = a - log(1-t), dx = dt/(1-t)
        g = [&f, a](double t) {
            double u = 1.0 - t;
            double x = a - std::log(u);
            double v = f(x);
            return v == 0.0 ? 0.0 : v / u;
        };
    }
    return integrate(g, 0.0, 1.0, spec);
}

} // namespace relhyd
