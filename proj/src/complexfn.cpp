#include "sovc/complexfn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sovc {

// ---------------------------------------------------------------------------
// LogComplex
// ---------------------------------------------------------------------------

LogComplex LogComplex::from(cplx v) {
    if (v == cplx(0, 0)) return zero();
    LogComplex r;
    r.log_mag = 0.5 * std::log(std::norm(v));
    r.phase = std::arg(v);
    return r;
}

cplx LogComplex::value() const {
    if (is_zero) return cplx(0, 0);
    const double ph = std::fmod(phase, two_pi);
    const std::int64_t q = ((quarters % 4) + 4) % 4;
    const double m = std::exp(log_mag);
    cplx base(m * std::cos(ph), m * std::sin(ph));
    switch (q) {
        case 0: return base;
        case 1: return cplx(-base.imag(), base.real());
        case 2: return -base;
        default: return cplx(base.imag(), -base.real());
    }
}

LogComplex& LogComplex::operator*=(const LogComplex& o) {
    if (is_zero || o.is_zero) {
        *this = zero();
        return *this;
    }
    log_mag += o.log_mag;
    phase += o.phase;
    quarters += o.quarters;
    return *this;
}

LogComplex& LogComplex::operator/=(const LogComplex& o) {
    if (o.is_zero) throw SingularityError("LogComplex: division by exact zero");
    if (is_zero) return *this;
    log_mag -= o.log_mag;
    phase -= o.phase;
    quarters -= o.quarters;
    return *this;
}

// ---------------------------------------------------------------------------
// BiIndex
// ---------------------------------------------------------------------------

BiIndex::BiIndex(cplx a, cplx a_bar) : alpha(a), alpha_bar(a_bar) {
    const cplx gap = a - a_bar;
    const double nr = std::round(gap.real());
    if (std::abs(gap.imag()) > 1e-9 || std::abs(gap.real() - nr) > 1e-9)
        throw ConstraintError("BiIndex: alpha - alpha_bar = (" + std::to_string(gap.real()) +
                              "," + std::to_string(gap.imag()) + ") is not an integer");
    n = std::int64_t(nr);
}

// ---------------------------------------------------------------------------
// log gamma
// ---------------------------------------------------------------------------

bool near_nonpositive_int(cplx z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    return r <= 0.5 && std::abs(z.real() - r) <= tol;
}

namespace {

// B_{2k} / (2k (2k-1)) for k = 1..9
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
};

cplx stirling_log_gamma(cplx z) {
    cplx w = (z - 0.5) * std::log(z) - z + 0.5 * std::log(two_pi);
    const cplx invz = 1.0 / z;
    const cplx invz2 = invz * invz;
    cplx t = invz;
    for (double c : kStirling) {
        w += c * t;
        t *= invz2;
    }
    return w;
}

cplx log_gamma_upper(cplx z) {
    // Im z >= 0 assumed here
    if (z.real() >= 0.5) {
        cplx acc(0, 0);
        cplx w = z;
        while (w.real() < 12.0) {
            acc += std::log(w); // right half-plane: principal logs compose exactly
            w += 1.0;
        }
        return stirling_log_gamma(w) - acc;
    }
    // reflection; 1-z lands in Re >= 0.5, Im <= 0
    const cplx lg1mz = std::conj(log_gamma_upper(std::conj(1.0 - z)));
    // log sin(pi z) from sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z});
    // |e^{2 pi i z}| <= 1 for Im z >= 0, so the principal log of the bracket
    // is the right branch
    const cplx logsin = cplx(0, 0.5 * pi) - std::log(2.0) - cplx(0, pi) * z +
                        std::log(1.0 - std::exp(cplx(0, two_pi) * z));
    return std::log(pi) - logsin - lg1mz;
}

} // namespace

cplx log_gamma(cplx z) {
    if (near_nonpositive_int(z, 1e-12))
        throw PoleError("log_gamma: pole at z = " + std::to_string(z.real()));
    if (z.imag() < 0.0) return std::conj(log_gamma_upper(std::conj(z)));
    return log_gamma_upper(z);
}

// ---------------------------------------------------------------------------
// a-function and relatives
// ---------------------------------------------------------------------------

namespace {
constexpr double kPoleTol = 1e-9;
}

LogComplex a_factor_log(const BiIndex& idx) {
    const cplx top = 1.0 - idx.alpha_bar;
    const bool top_pole = near_nonpositive_int(top, kPoleTol);
    const bool bottom_pole = near_nonpositive_int(idx.alpha, kPoleTol);
    if (top_pole && bottom_pole) {
        // simultaneous poles cancel; the limit is (-1)^n Gamma(1-alpha)/Gamma(alpha_bar)
        LogComplex r = LogComplex::from(cplx(1, 0));
        const cplx d = log_gamma(1.0 - idx.alpha) - log_gamma(idx.alpha_bar);
        r.log_mag = d.real();
        r.phase = d.imag();
        r.mul_sign_pow(idx.n);
        return r;
    }
    if (top_pole)
        throw PoleError("a_factor: Gamma(1-alpha_bar) pole, 1-alpha_bar = " +
                        std::to_string(top.real()));
    if (bottom_pole) return LogComplex::zero();
    const cplx d = log_gamma(top) - log_gamma(idx.alpha);
    LogComplex r;
    r.log_mag = d.real();
    r.phase = d.imag();
    return r;
}

cplx a_factor(const BiIndex& idx) { return a_factor_log(idx).value(); }

LogComplex a_product_log(std::span<const BiIndex> indices) {
    LogComplex acc = LogComplex::one();
    for (std::size_t i = 0; i < indices.size(); ++i) {
        try {
            acc *= a_factor_log(indices[i]);
        } catch (const PoleError& e) {
            throw PoleError("a_product: factor " + std::to_string(i) + ": " + e.what());
        }
    }
    return acc;
}

cplx a_product(std::span<const BiIndex> indices) { return a_product_log(indices).value(); }

cplx complex_field_gamma(const BiIndex& idx) {
    const cplx bottom = 1.0 - idx.alpha_bar;
    const bool top_pole = near_nonpositive_int(idx.alpha, kPoleTol);
    const bool bottom_pole = near_nonpositive_int(bottom, kPoleTol);
    if (top_pole && bottom_pole) {
        const cplx d = log_gamma(idx.alpha_bar) - log_gamma(1.0 - idx.alpha);
        LogComplex r;
        r.log_mag = d.real();
        r.phase = d.imag();
        r.mul_sign_pow(idx.n);
        r.mul_i_pow(idx.n);
        return r.value();
    }
    if (top_pole)
        throw PoleError("complex_field_gamma: Gamma(alpha) pole");
    if (bottom_pole) return cplx(0, 0);
    const cplx d = log_gamma(idx.alpha) - log_gamma(bottom);
    LogComplex r;
    r.log_mag = d.real();
    r.phase = d.imag();
    r.mul_i_pow(idx.n);
    return r.value();
}

cplx power_bi(cplx z, const BiIndex& idx) {
    if (z == cplx(0, 0)) {
        if (idx.sum().real() > 0.0) return cplx(0, 0);
        throw SingularityError("power_bi: [0]^alpha with Re(alpha+alpha_bar) <= 0");
    }
    return PowerEval(idx)(z);
}

cplx i_pow(std::int64_t k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return cplx(1, 0);
        case 1: return cplx(0, 1);
        case 2: return cplx(-1, 0);
        default: return cplx(0, -1);
    }
}

// ---------------------------------------------------------------------------
// Bessel J_n
// ---------------------------------------------------------------------------

namespace {

double bessel_series(int n, double x) {
    // ascending series at the origin; n >= 0
    const double hx = 0.5 * x;
    double lead;
    if (n <= 20) {
        double fact = 1.0;
        for (int k = 2; k <= n; ++k) fact *= k;
        lead = std::pow(hx, n) / fact;
    } else {
        lead = std::exp(n * std::log(hx) - std::lgamma(double(n) + 1.0));
    }
    double term = lead, sum = lead;
    const double q = hx * hx;
    for (int k = 1; k < 400; ++k) {
        term *= -q / (double(k) * double(n + k));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30)) break;
    }
    return sum;
}

double bessel_miller(int n, double x) {
    // backward recurrence with even-order normalization; n >= 0, x > 0
    int m = int(x + 1.5 * std::cbrt(x) * 12.0 + 30.0);
    if (m < n + 20) m = n + 20;
    if (m % 2 != 0) ++m;
    double jp = 0.0, jc = 1e-300, jn_val = 0.0, norm = 0.0;
    for (int k = m; k >= 1; --k) {
        double jm = (2.0 * k / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (k - 1 == n) jn_val = jc;
        if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? jc : 2.0 * jc;
        if (std::abs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            jn_val *= 1e-250;
            norm *= 1e-250;
        }
    }
    return jn_val / norm;
}

} // namespace

double bessel_j(int n, double x) {
    const bool flip = (n < 0) && (n % 2 != 0);
    const int m = std::abs(n);
    double v;
    if (x <= 0.0) {
        v = (m == 0) ? 1.0 : 0.0;
    } else if (x < 14.0) {
        v = bessel_series(m, x);
    } else {
        v = bessel_miller(m, x);
    }
    return flip ? -v : v;
}

double bessel_zero(int n, int k) {
    const int m = std::abs(n);
    // scan upward from the turning point with steps below the minimal zero
    // spacing (pi), counting sign changes, then bisect the k-th bracket
    double x = (m == 0) ? 1e-9 : double(m);
    double fx = bessel_j(m, x);
    if (fx == 0.0) {
        x += 1e-6;
        fx = bessel_j(m, x);
    }
    const double step = 3.0;
    int crossings = 0;
    double lo = x, hi = x;
    for (int it = 0; it < 100000; ++it) {
        const double xn = x + step;
        const double fn = bessel_j(m, xn);
        if (fn == 0.0) {
            x = xn + 1e-9;
            fx = bessel_j(m, x);
            continue;
        }
        if ((fx > 0.0) != (fn > 0.0)) {
            ++crossings;
            if (crossings == k) {
                lo = x;
                hi = xn;
                break;
            }
        }
        x = xn;
        fx = fn;
    }
    double flo = bessel_j(m, lo);
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = bessel_j(m, mid);
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace sovc
