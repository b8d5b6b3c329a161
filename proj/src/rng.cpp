#include "relhyd/rng.hpp"

#include <cmath>
#include <numbers>

#include "relhyd/errors.hpp"

namespace relhyd {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

SplitStream::SplitStream(std::uint64_t seed, std::uint64_t index) {
    // double mixing decorrelates neighbouring indices of the same seed
    state_ = mix64(mix64(seed + kGolden) ^ (index * 0xD1B54A32D192ED03ull + kGolden));
}

std::uint64_t SplitStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double SplitStream::uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double SplitStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double SplitStream::normal() {
    if (have_cached_normal_) {
        have_cached_normal_ = false;
        return cached_normal_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double rad = std::sqrt(-2.0 * std::log(u1));
    double ang = 2.0 * std::numbers::pi * u2;
    cached_normal_ = rad * std::sin(ang);
    have_cached_normal_ = true;
    return rad * std::cos(ang);
}

double SplitStream::gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0))
        throw OutOfRange("gamma sampling requires shape, rate > 0");
    if (shape < 1.0) {
        double g = gamma(shape + 1.0, rate);
        return g * std::pow(uniform(), 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x)
            return d * v / rate;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v / rate;
    }
}

double SplitStream::beta(double a, double b) {
    double x = gamma(a, 1.0);
    double y = gamma(b, 1.0);
    return x / (x + y);
}

} // namespace relhyd
