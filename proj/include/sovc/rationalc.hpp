#pragma once

// Exact rational-complex scalars for the symbolic layer. Arguments of the
// gamma-ratio calculus are Q + Q*i combinations of parameters; exact
// arithmetic keeps canonical forms reproducible.

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace sovc {

using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
    return double(r.numerator()) / double(r.denominator());
}

struct RatComplex {
    Rat re{0}, im{0};

    RatComplex() = default;
    RatComplex(Rat r) : re(r) {}
    RatComplex(Rat r, Rat i) : re(r), im(i) {}
    RatComplex(long long r) : re(r) {}
    RatComplex(long long r, long long i) : re(r), im(i) {}

    static RatComplex i_unit() { return RatComplex(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    std::complex<double> value() const { return {to_double(re), to_double(im)}; }

    RatComplex& operator+=(const RatComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    RatComplex& operator-=(const RatComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    RatComplex& operator*=(const RatComplex& o) {
        const Rat r = re * o.re - im * o.im;
        const Rat i = re * o.im + im * o.re;
        re = r;
        im = i;
        return *this;
    }
    friend RatComplex operator+(RatComplex a, const RatComplex& b) { return a += b; }
    friend RatComplex operator-(RatComplex a, const RatComplex& b) { return a -= b; }
    friend RatComplex operator*(RatComplex a, const RatComplex& b) { return a *= b; }
    friend RatComplex operator-(const RatComplex& a) { return RatComplex(-a.re, -a.im); }
    friend bool operator==(const RatComplex& a, const RatComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const RatComplex& a, const RatComplex& b) { return !(a == b); }

    // lexicographic order for canonical sorting
    friend bool operator<(const RatComplex& a, const RatComplex& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

inline std::string to_string(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

inline std::string to_string(const RatComplex& c) {
    if (c.im == 0) return to_string(c.re);
    if (c.re == 0) return to_string(c.im) + "i";
    return "(" + to_string(c.re) + (c.im > 0 ? "+" : "") + to_string(c.im) + "i)";
}

// non-negative remainder of r modulo the positive integer m
inline Rat rat_mod(const Rat& r, long long m) {
    // r - m*floor(r/m)
    const Rat q = r / m;
    long long fl = q.numerator() / q.denominator();
    if (q.numerator() % q.denominator() != 0 && q < 0) --fl;
    return r - Rat(m) * fl;
}

inline long long rat_floor(const Rat& r) {
    long long fl = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r < 0) --fl;
    return fl;
}

} // namespace sovc
