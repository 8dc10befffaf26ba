#ifndef RFSO_ERRORS_HPP
#define RFSO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rfso {

// Quadrature or series truncation did not reach its accuracy target.
// `estimate` is the achieved relative error bound.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }
private:
    double estimate_;
};

// Parameter set outside what the evaluator can separate (e.g. Mellin-Barnes
// pole families that collide at integer offsets).
class unsupported_parameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameter set with coincident poles or a vanishing denominator; the caller
// must use a different evaluation route.
class degenerate_parameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Sampler self-calibration disagrees with the analytic moments.
class model_mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rfso

#endif
