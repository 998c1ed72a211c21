#ifndef LEVRECON_ERRORS_HPP
#define LEVRECON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace levrecon {

/// Thrown when a caller violates a documented precondition (bad lengths,
/// parameter ranges, unmet channel-count thresholds).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an exhaustive operation is asked to run beyond its
/// configured search budget.
class budget_error : public precondition_error {
public:
    using precondition_error::precondition_error;
};

/// Thrown when a guaranteed witness (shattered set, covered coset) is not
/// found even though the guaranteeing threshold was met. Indicates either a
/// malformed input batch (duplicates shrinking the effective output set) or
/// a genuine contract violation; callers should surface it, not retry.
class diagnostic_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace levrecon

#endif
