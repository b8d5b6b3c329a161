#pragma once

#include <stdexcept>
#include <string>

namespace relhyd {

/// Effective angular momentum would be complex: (2l+1)^2 - 4 (alpha Z)^2 <= 0
/// (fall-to-center regime).
class DegenerateCoupling : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Scalar argument outside its admissible range.
class OutOfRange : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Phase point with E >= 1: no bound orbit through it.
class Unbound : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Phase point with L < alpha Z, i.e. below the angular momentum barrier;
/// reported instead of clamped.
class SubBarrier : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Chart coordinates outside the orbit domain (e.g. r > R).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation grid leaves the open interval the operator is defined on.
class GridOutOfDomain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Adaptive quadrature ran out of subdivisions before reaching tolerance.
class MaxSubdivisions : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation requested for a density kind it is not defined on
/// (e.g. exact sampling of a signed density).
class UnsupportedState : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Monte Carlo estimate requested from an empty batch.
class EmptyBatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Trajectory fell below the collision radius.
class Collision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Step size control could not satisfy the requested tolerance.
class ToleranceFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace relhyd
