#include "relhyd/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "relhyd/rng.hpp"

namespace relhyd {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

SampleBatch sample_yrast(const StateDensity& state, std::size_t count,
                         std::uint64_t seed, int workers) {
    if (!state.is_yrast())
        throw UnsupportedState("exact sampling is defined for the non-negative yrast densities only");

    double ell = state.ell();
    double E = state.energy();
    double gamma_shape = 5.0 + 4.0 * ell;
    double gamma_rate = 2.0 * E / (1.0 + ell);
    double beta_a = 3.0 + 2.0 * ell;
    double beta_b = 2.0 + 2.0 * ell;
    double mu_shape = (3.0 + 4.0 * ell) / 2.0;

    SampleBatch batch;
    batch.seed = seed;
    batch.state = state;
    batch.points.resize(count);
    batch.weights.assign(count, 1.0);

    auto fill = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            SplitStream rng(seed, i);
            ChartPoint& cp = batch.points[i];
            cp.R = rng.gamma(gamma_shape, gamma_rate);
            cp.r = cp.R * rng.beta(beta_a, beta_b);
            double c = 2.0 * rng.beta(mu_shape, mu_shape) - 1.0;
            cp.mu = std::acos(std::clamp(c, -1.0, 1.0));
            cp.nu = rng.uniform(0.0, 2.0 * kPi);
            cp.phi = rng.uniform(0.0, 2.0 * kPi);
            cp.theta = std::acos(rng.uniform(-1.0, 1.0));
        }
    };

    int W = std::max(1, workers);
    if (W == 1 || count < 2048) {
        fill(0, count);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < W; ++w)
            pool.emplace_back(fill, count * w / W, count * (w + 1) / W);
        for (auto& th : pool)
            th.join();
    }
    return batch;
}

McEstimate mc_expectation(const SampleBatch& batch,
                          const std::function<double(const PhasePoint&)>& observable) {
    std::size_t n = batch.points.size();
    if (n == 0)
        throw EmptyBatch("mc_expectation on an empty batch");

    const Coupling& coupling = batch.state.coupling();
    std::vector<double> values(n);
    double wsum = 0.0, vsum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const ChartPoint& cp = batch.points[i];
        double E = orbit_energy(cp.R, coupling);
        values[i] = observable(chart_to_phase(cp, coupling, E)) * batch.weights[i];
        vsum += values[i];
        wsum += batch.weights[i];
    }
    McEstimate est;
    est.mean = vsum / wsum;

    // batch means over contiguous blocks
    std::size_t nb = std::min<std::size_t>(1000, n);
    if (nb < 2) {
        est.stderr_ = 0.0;
        return est;
    }
    double var = 0.0;
    std::size_t used = 0;
    for (std::size_t b = 0; b < nb; ++b) {
        std::size_t lo = n * b / nb, hi = n * (b + 1) / nb;
        if (hi == lo)
            continue;
        double bw = 0.0, bv = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            bv += values[i];
            bw += batch.weights[i];
        }
        double bm = bv / bw;
        var += (bm - est.mean) * (bm - est.mean);
        ++used;
    }
    est.stderr_ = used > 1 ? std::sqrt(var / (used * (used - 1.0))) : 0.0;
    return est;
}

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty())
        throw EmptyBatch("ks_statistic on an empty sample");
    std::sort(sample.begin(), sample.end());
    double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double f = cdf(sample[i]);
        d = std::max(d, std::fabs(f - i / n));
        d = std::max(d, std::fabs((i + 1) / n - f));
    }
    return d;
}

double ks_critical(double alpha, std::size_t n) {
    return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

} // namespace relhyd
