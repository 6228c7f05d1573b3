#pragma once

// Numerical integration over the complex plane (d^2z = dx dy) for integrands
// with labeled algebraic singularities and algebraic decay at infinity.
//
// The plane is covered by a smooth partition of unity: a polar chart around
// each declared singularity (radial substitution r = t^q absorbing the local
// power), one rectangle chart for the middle region, and an inversion chart
// z -> 1/z for the far field. Every chart is driven by the same deterministic
// Genz-Malik refinement, all charts sharing one worst-cell-first heap.
//
// Oscillatory Fourier factors are never attacked in 2D; use
// integrate_radial_oscillatory (angular reduction to Bessel J_n, integration
// between consecutive Bessel zeros, Wynn epsilon acceleration of the tail).

#include <functional>
#include <optional>
#include <vector>

#include "sovc/complexfn.hpp"
#include "sovc/errors.hpp"
#include "sovc/quad.hpp"

namespace sovc {

struct Singularity {
    cplx location{};
    BiIndex strength{}; // local behavior [z - location]^(-strength)
};

struct QuadPlan {
    std::vector<Singularity> singularities;
    BiIndex decay_at_infinity{};      // total exponent: |f| ~ |z|^(-Re sum) at infinity
    std::optional<cplx> oscillation;  // momentum p of a factor e^{i(pz+pbar zbar)}
    double target_rel_error = 1e-7;
    double target_abs_error = 0.0;    // absolute floor, for near-zero answers
    long max_evaluations = 20'000'000;

    // throws PlanError on integrability / decay violations
    void validate() const;
};

struct IntegralEstimate {
    cplx value{};
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

using PlaneFn = std::function<cplx(cplx)>;
using RadialFn = std::function<cplx(double)>;

// integral of f over the whole plane per the plan; returns the estimate with
// converged=false when the evaluation budget ran out
IntegralEstimate integrate_plane(const PlaneFn& f, const QuadPlan& plan);

// same, but throws NonConvergence instead of returning converged=false
IntegralEstimate integrate_plane_strict(const PlaneFn& f, const QuadPlan& plan);

// integral of f over |z| > radius via the inversion chart (no windowing)
IntegralEstimate integrate_exterior(const PlaneFn& f, double radius, const BiIndex& decay,
                                    double rel_tol, double abs_tol, long max_evals = 20'000'000);

// int_0^inf dr r f_radial(r) J_n(2 p_mag r); the plan may declare one
// singularity at the origin (its strength tunes the endpoint substitution)
// and supplies the error targets
IntegralEstimate integrate_radial_oscillatory(const RadialFn& f_radial, int n, double p_mag,
                                              const QuadPlan& plan);

} // namespace sovc
