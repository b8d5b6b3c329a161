#pragma once

#include <cstdint>

namespace relhyd {

/// Counter-keyed splittable stream: every (seed, index) pair owns an
/// independent deterministic sequence, so work distributed over any number
/// of threads reproduces bit-identically as long as indices are fixed.
class SplitStream {
public:
    SplitStream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();

    /// Uniform double strictly inside (0, 1).
    double uniform();
    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller (one value per call, pair cached).
    double normal();

    /// Gamma(shape, rate) by Marsaglia-Tsang squeeze, with the u^(1/shape)
    /// boost for shape < 1.
    double gamma(double shape, double rate);

    /// Beta(a, b) from two gammas.
    double beta(double a, double b);

private:
    std::uint64_t state_;
    bool have_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

} // namespace relhyd
