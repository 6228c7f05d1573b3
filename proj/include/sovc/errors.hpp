#pragma once

#include <stdexcept>
#include <string>

namespace sovc {

// Base class for every error raised by the library. Verification code is
// expected to fail loudly: a quantity near a gamma pole or a violated
// constraint throws instead of returning a huge number.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Gamma-function pole hit (or approached within tolerance).
class PoleError : public Error {
public:
    using Error::Error;
};

// Evaluation at a non-integrable singular point, e.g. [0]^alpha with
// Re(alpha + alpha_bar) <= 0.
class SingularityError : public Error {
public:
    using Error::Error;
};

// Integration plan violates integrability or decay requirements.
class PlanError : public Error {
public:
    using Error::Error;
};

// Evaluation budget exhausted before reaching the error target.
class NonConvergence : public Error {
public:
    using Error::Error;
};

// Diagram rewrite applied to a vertex that does not match the rule pattern.
class PatternError : public Error {
public:
    using Error::Error;
};

// Exact index constraint violated (star-triangle sum, cross balance, ...).
class ConstraintError : public Error {
public:
    using Error::Error;
};

// Finite-difference stencil too close to a singular point.
class StencilError : public Error {
public:
    using Error::Error;
};

// A pole of the Mellin-Barnes integrand sits on (or on the wrong side of)
// the integration contour.
class PoleOnContour : public Error {
public:
    using Error::Error;
};

// Fitted tail of a truncated sum does not decay.
class TailDivergence : public Error {
public:
    using Error::Error;
};

// Bad configuration / case file.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace sovc
