#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "relhyd/phasespace.hpp"

namespace relhyd {

/// Reproducible draw from a non-negative phase-space density, stored in
/// chart coordinates.  Weights are unit for the exact sampler.
struct SampleBatch {
    std::vector<ChartPoint> points;
    std::vector<double> weights;
    std::uint64_t seed = 0;
    StateDensity state = StateDensity::yrast(1, Coupling(0.0));
};

/// Exact sampler of a Yrast density via the conditional factorization
///   R    ~ Gamma(5 + 4 ell, 2 E / (1 + ell))
///   r/R  ~ Beta(3 + 2 ell, 2 + 2 ell)
///   cos(mu) shifted symmetric Beta((3+4 ell)/2, (3+4 ell)/2)
///   nu, phi uniform on (0, 2 pi), cos(theta) uniform on (-1, 1).
/// Sample i derives from substream (seed, i): batches are bit-identical
/// across runs and across any worker count.  Signed (2s) densities are
/// rejected with UnsupportedState.
SampleBatch sample_yrast(const StateDensity& state, std::size_t count,
                         std::uint64_t seed, int workers = 1);

struct McEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
};

/// Weighted mean and batch-means standard error of an observable on the
/// phase points of the batch.
McEstimate mc_expectation(const SampleBatch& batch,
                          const std::function<double(const PhasePoint&)>& observable);

/// Kolmogorov-Smirnov statistic of a sample against a CDF.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

/// Large-sample critical value of the one-sample KS statistic at the given
/// significance level (e.g. 0.01): sqrt(-log(alpha/2)/2) / sqrt(n).
double ks_critical(double alpha, std::size_t n);

} // namespace relhyd
