#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "sovc/errors.hpp"

namespace sovc {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

// ---------------------------------------------------------------------------
// Exact phase bookkeeping.
//
// Products of gamma ratios are accumulated as (log-magnitude, phase) pairs.
// Exact quarter-turn phases coming from i^n and (-1)^n factors are kept as an
// integer counter and folded in only when the value is materialized, so that
// integer-power phases never pick up float error.
// ---------------------------------------------------------------------------
struct LogComplex {
    double log_mag = 0.0;
    double phase = 0.0;           // accumulated phase, not reduced
    std::int64_t quarters = 0;    // exact extra phase in units of pi/2
    bool is_zero = false;

    static LogComplex one() { return {}; }
    static LogComplex zero() {
        LogComplex v;
        v.is_zero = true;
        return v;
    }
    static LogComplex from(cplx v);

    cplx value() const;

    LogComplex& operator*=(const LogComplex& o);
    LogComplex& operator/=(const LogComplex& o);
    friend LogComplex operator*(LogComplex a, const LogComplex& b) { return a *= b; }
    friend LogComplex operator/(LogComplex a, const LogComplex& b) { return a /= b; }

    // multiply by i^k (exact)
    LogComplex& mul_i_pow(std::int64_t k) {
        quarters += k;
        return *this;
    }
    // multiply by (-1)^k (exact)
    LogComplex& mul_sign_pow(std::int64_t k) {
        quarters += 2 * k;
        return *this;
    }
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

// Pair of complex exponents (alpha, alpha_bar) with alpha - alpha_bar an
// integer; indexes the single-valued power [z]^alpha = z^alpha zbar^alpha_bar.
struct BiIndex {
    cplx alpha{};
    cplx alpha_bar{};
    std::int64_t n = 0; // the integer gap alpha - alpha_bar, stored exactly

    BiIndex() = default;
    BiIndex(cplx a, cplx a_bar);                  // validates integer gap (1e-9)
    BiIndex(cplx a, std::int64_t gap) : alpha(a), alpha_bar(a - double(gap)), n(gap) {}

    cplx sum() const { return alpha + alpha_bar; }

    // (alpha_bar, alpha): the "barred" index of the same symbol
    BiIndex swapped() const {
        BiIndex r;
        r.alpha = alpha_bar;
        r.alpha_bar = alpha;
        r.n = -n;
        return r;
    }

    // index of conj([z]^this) = [z]^(conj(alpha_bar), conj(alpha))
    BiIndex conj_swapped() const {
        BiIndex r;
        r.alpha = std::conj(alpha_bar);
        r.alpha_bar = std::conj(alpha);
        r.n = n;
        return r;
    }

    BiIndex& operator+=(const BiIndex& o) {
        alpha += o.alpha;
        alpha_bar += o.alpha_bar;
        n += o.n;
        return *this;
    }
    BiIndex& operator-=(const BiIndex& o) {
        alpha -= o.alpha;
        alpha_bar -= o.alpha_bar;
        n -= o.n;
        return *this;
    }
    friend BiIndex operator+(BiIndex a, const BiIndex& b) { return a += b; }
    friend BiIndex operator-(BiIndex a, const BiIndex& b) { return a -= b; }
    friend BiIndex operator-(const BiIndex& a) {
        BiIndex r;
        r.alpha = -a.alpha;
        r.alpha_bar = -a.alpha_bar;
        r.n = -a.n;
        return r;
    }
    // add a real constant to both slots (gap unchanged)
    friend BiIndex operator+(BiIndex a, double c) {
        a.alpha += c;
        a.alpha_bar += c;
        return a;
    }
    friend BiIndex operator+(double c, BiIndex a) { return a + c; }
    friend BiIndex operator-(double c, const BiIndex& a) {
        BiIndex r;
        r.alpha = c - a.alpha;
        r.alpha_bar = c - a.alpha_bar;
        r.n = -a.n;
        return r;
    }
};

// Principal-series spin label: s = (1+n)/2 + i nu, sbar = (1-n)/2 + i nu.
struct Spin {
    int n = 0;        // integer per the homogeneous-chain restriction
    double nu = 0.0;

    cplx s() const { return cplx(0.5 * (1.0 + n), nu); }
    cplx s_bar() const { return cplx(0.5 * (1.0 - n), nu); }

    // bi-index of the multiplier [z]^(2s): gap 2n
    BiIndex two_s() const { return BiIndex(2.0 * s(), std::int64_t(2 * n)); }
};

// Separated variable x = -i n/2 + nu, x_bar = i n/2 + nu. nu may carry an
// imaginary regularization offset; x_bar - x = i n holds exactly either way.
struct SeparatedPoint {
    std::int64_t n = 0;
    cplx nu{};

    SeparatedPoint() = default;
    SeparatedPoint(std::int64_t n_, cplx nu_) : n(n_), nu(nu_) {}

    cplx x() const { return nu + cplx(0.0, -0.5 * double(n)); }
    cplx x_bar() const { return nu + cplx(0.0, 0.5 * double(n)); }

    // label of the conjugate wavefunction: (x,xbar) -> (conj(xbar), conj(x)),
    // i.e. same n with nu conjugated
    SeparatedPoint conjugated() const { return SeparatedPoint(n, std::conj(nu)); }

    // i*x as a bi-index contribution: (i x, i x_bar) has gap n
    BiIndex i_times() const { return BiIndex(cplx(0, 1) * x(), std::int64_t(n)); }
};

// ---------------------------------------------------------------------------
// Scalar special functions
// ---------------------------------------------------------------------------

// true when z is within tol of a non-positive integer
bool near_nonpositive_int(cplx z, double tol);

// Principal branch of log Gamma(z). Relative accuracy ~1e-15 for |z| <= 100.
// Throws PoleError when z is within 1e-12 of a non-positive integer.
cplx log_gamma(cplx z);

// a(alpha) = Gamma(1 - alpha_bar) / Gamma(alpha).
//   - Gamma(alpha) pole only        -> exact 0
//   - Gamma(1-alpha_bar) pole only  -> PoleError
//   - both at poles                 -> finite limit (-1)^n Gamma(1-alpha)/Gamma(alpha_bar)
LogComplex a_factor_log(const BiIndex& idx);
cplx a_factor(const BiIndex& idx);

// product of a-factors, accumulated in log space; PoleError identifies the
// offending factor
LogComplex a_product_log(std::span<const BiIndex> indices);
cplx a_product(std::span<const BiIndex> indices);

// Gamma function of the complex field: i^n Gamma(alpha)/Gamma(1-alpha_bar)
cplx complex_field_gamma(const BiIndex& idx);

// [z]^idx = |z|^(alpha+alpha_bar) exp(i n arg z); exact integer n phase.
// z = 0 returns 0 when Re(alpha+alpha_bar) > 0, else SingularityError.
cplx power_bi(cplx z, const BiIndex& idx);

// Precompiled form of power_bi for quadrature hot loops.
struct PowerEval {
    cplx s{};         // alpha + alpha_bar
    double n = 0.0;   // integer gap as double
    bool trivial = false;

    PowerEval() = default;
    explicit PowerEval(const BiIndex& idx)
        : s(idx.sum()), n(double(idx.n)),
          trivial(idx.alpha == cplx(0, 0) && idx.alpha_bar == cplx(0, 0)) {}

    cplx operator()(cplx z) const {
        if (trivial) return cplx(1, 0);
        const double L = 0.5 * std::log(std::norm(z));
        const double th = std::arg(z);
        const double re = s.real() * L;
        const double im = s.imag() * L + n * th;
        const double m = std::exp(re);
        return cplx(m * std::cos(im), m * std::sin(im));
    }
};

// i^k for exact integer k
cplx i_pow(std::int64_t k);
// (-1)^k
inline double sign_pow(std::int64_t k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// ---------------------------------------------------------------------------
// Bessel J_n (integer order)
// ---------------------------------------------------------------------------

// J_n(x) for |n| <= 64, 0 <= x <= 1e4; absolute accuracy ~1e-13.
// J_{-n}(x) = (-1)^n J_n(x) holds exactly by construction.
double bessel_j(int n, double x);

// k-th positive zero of J_n (k >= 1), McMahon expansion + Newton refinement
double bessel_zero(int n, int k);

} // namespace sovc
