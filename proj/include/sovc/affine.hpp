#pragma once

// Two-slot affine expressions over named parameters with exact
// rational-complex coefficients. An AffineExpr evaluates to a BiIndex: the
// holomorphic slot collects parameter values x / s, the antiholomorphic slot
// the barred values x_bar / s_bar. The integer gap of the result is computed
// exactly from the parameters' integer parts, never from floats.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sovc/complexfn.hpp"
#include "sovc/rationalc.hpp"

namespace sovc {

enum class ParamKind { separated_point, spin };

struct AffineTerm {
    RatComplex coeff;             // common coefficient of both slots
    ParamKind kind = ParamKind::separated_point;
    bool swapped = false;         // hol slot gets the barred value and vice versa

    friend bool operator==(const AffineTerm&, const AffineTerm&) = default;
    friend bool operator<(const AffineTerm& a, const AffineTerm& b) {
        if (a.coeff != b.coeff) return a.coeff < b.coeff;
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.swapped < b.swapped;
    }
};

using Binding = std::variant<SeparatedPoint, Spin>;
using Bindings = std::map<std::string, Binding>;

class AffineExpr {
public:
    RatComplex const_h, const_a;              // per-slot constants
    std::map<std::string, AffineTerm> terms;  // one term per parameter

    AffineExpr() = default;

    static AffineExpr constant(RatComplex c) {
        AffineExpr e;
        e.const_h = c;
        e.const_a = c;
        return e;
    }
    static AffineExpr constant(long long c) { return constant(RatComplex(c)); }
    // constant with independent slots
    static AffineExpr constant2(RatComplex h, RatComplex a) {
        AffineExpr e;
        e.const_h = h;
        e.const_a = a;
        return e;
    }
    static AffineExpr param(const std::string& name, ParamKind kind,
                            RatComplex coeff = RatComplex(1), bool swapped = false) {
        AffineExpr e;
        e.terms[name] = AffineTerm{coeff, kind, swapped};
        return e;
    }

    bool is_constant() const { return terms.empty(); }

    AffineExpr& operator+=(const AffineExpr& o);
    AffineExpr& operator-=(const AffineExpr& o) {
        *this += -o;
        return *this;
    }
    friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
    friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
    friend AffineExpr operator-(const AffineExpr& e);

    AffineExpr& operator*=(const RatComplex& c);
    friend AffineExpr operator*(AffineExpr e, const RatComplex& c) { return e *= c; }
    friend AffineExpr operator*(const RatComplex& c, AffineExpr e) { return e *= c; }

    // shift both slots by an integer (the canonicalization move)
    AffineExpr& shift(long long k) {
        const_h += RatComplex(k);
        const_a += RatComplex(k);
        return *this;
    }

    // slot swap: the expression whose value is the barred value of this one
    AffineExpr swapped() const;

    friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
    friend bool operator<(const AffineExpr& a, const AffineExpr& b);

    // exact integer gap of the evaluation, as a function of the bindings'
    // integer parts; throws ConstraintError if the gap is not an integer
    long long exact_gap(const Bindings& b) const;

    // numeric evaluation; the BiIndex gap is set from exact_gap
    BiIndex eval(const Bindings& b) const;

    std::string str() const;
};

} // namespace sovc
