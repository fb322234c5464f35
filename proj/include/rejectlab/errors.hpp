#pragma once

#include <stdexcept>
#include <string>

namespace rejectlab {

// Mixture density is zero at the query point (uniform model, x outside both
// supports). Pointwise quantities are undefined there.
class ZeroMixtureDensity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A cost matrix violates the Chow ordering or the general chain constraint,
// or a model/policy combination is structurally unsupported.
class ConstraintViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Rejection thresholds outside the admissible set (tr1 + tr2 must stay in
// (0, 1]; inversion to costs additionally needs tr1 + tr2 < 1 and tr > 0).
class DegenerateThresholds : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The two members of a boundary-point pair disagree on the threshold they
// imply; the input points are not boundary points of one rule.
class InconsistentPair : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An input value contradicts another input it must be consistent with.
class InconsistentInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Target entropy is zero; normalized mutual information is undefined.
class DegenerateTarget : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Experiment configuration could not be parsed or is schematically invalid.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rejectlab
