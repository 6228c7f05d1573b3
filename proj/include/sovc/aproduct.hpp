#pragma once

// Symbolic products of a-factors a(expr) = Gamma(1 - expr_bar)/Gamma(expr)
// with affine arguments, together with exact sign/phase monomials, integer
// powers of pi, rational scalars and auxiliary power factors. This is the
// closed-form side of every identity: builders assemble these products and
// verification code evaluates them against quadrature.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sovc/affine.hpp"
#include "sovc/complexfn.hpp"

namespace sovc {

// [base]^exponent with a named complex base bound at evaluation time;
// abs_only evaluates |base|^(hol constant) instead (used for |p|^(-N-1))
struct ExtraPower {
    std::string base;
    AffineExpr exponent;
    bool abs_only = false;

    friend bool operator==(const ExtraPower&, const ExtraPower&) = default;
    friend bool operator<(const ExtraPower& a, const ExtraPower& b) {
        if (a.base != b.base) return a.base < b.base;
        if (a.abs_only != b.abs_only) return a.abs_only < b.abs_only;
        return a.exponent < b.exponent;
    }
};

// (hol(arg) * antihol(arg))^power; produced by the a(1+alpha) shift rule
struct LinearPower {
    AffineExpr arg;
    long long power = 1;

    friend bool operator==(const LinearPower&, const LinearPower&) = default;
    friend bool operator<(const LinearPower& a, const LinearPower& b) {
        if (a.arg != b.arg) return a.arg < b.arg;
        return a.power < b.power;
    }
};

struct AFactorProduct {
    std::vector<AffineExpr> numer;  // a(expr) factors upstairs
    std::vector<AffineExpr> denom;  // and downstairs
    AffineExpr sign_power;          // exponent of (-1)^[.]; only its gap matters
    AffineExpr phase_power;         // exponent of i^[.]; only its gap matters
    RatComplex scalar{1};
    int pi_power = 0;
    std::vector<LinearPower> linear;
    std::vector<ExtraPower> extra;

    // default evaluation context (builders fill these in)
    Bindings bindings;
    std::map<std::string, cplx> bases;

    AFactorProduct& mul_a(const AffineExpr& e) {
        numer.push_back(e);
        return *this;
    }
    AFactorProduct& div_a(const AffineExpr& e) {
        denom.push_back(e);
        return *this;
    }
    AFactorProduct& operator*=(const AFactorProduct& o);
    friend AFactorProduct operator*(AFactorProduct a, const AFactorProduct& b) { return a *= b; }

    // structural equality of the symbolic part (bindings excluded)
    bool same_form(const AFactorProduct& o) const;

    LogComplex eval_log() const { return eval_log(bindings, bases); }
    LogComplex eval_log(const Bindings& b, const std::map<std::string, cplx>& bs) const;
    cplx eval() const { return eval_log().value(); }
    cplx eval(const Bindings& b, const std::map<std::string, cplx>& bs) const {
        return eval_log(b, bs).value();
    }

    nlohmann::json to_json() const;
};

// Normal form: a(alpha) a(1-alpha_bar) pairs cancelled, arguments flipped to
// the lexicographically smaller slot order via a(alpha) = (-1)^n a(alpha_bar),
// holomorphic constants shifted into the strip 0 <= Re < 1 via
// a(1+alpha) = -a(alpha)/(alpha alpha_bar), factor lists sorted. Evaluation is
// unchanged. Idempotent.
AFactorProduct canonicalize(const AFactorProduct& p);

} // namespace sovc
