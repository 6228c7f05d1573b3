#include "sovc/aproduct.hpp"

#include <algorithm>

namespace sovc {

AFactorProduct& AFactorProduct::operator*=(const AFactorProduct& o) {
    numer.insert(numer.end(), o.numer.begin(), o.numer.end());
    denom.insert(denom.end(), o.denom.begin(), o.denom.end());
    sign_power += o.sign_power;
    phase_power += o.phase_power;
    scalar *= o.scalar;
    pi_power += o.pi_power;
    linear.insert(linear.end(), o.linear.begin(), o.linear.end());
    extra.insert(extra.end(), o.extra.begin(), o.extra.end());
    for (const auto& [k, v] : o.bindings) bindings.insert_or_assign(k, v);
    for (const auto& [k, v] : o.bases) bases.insert_or_assign(k, v);
    return *this;
}

bool AFactorProduct::same_form(const AFactorProduct& o) const {
    return numer == o.numer && denom == o.denom && sign_power == o.sign_power &&
           phase_power == o.phase_power && scalar == o.scalar && pi_power == o.pi_power &&
           linear == o.linear && extra == o.extra;
}

LogComplex AFactorProduct::eval_log(const Bindings& b, const std::map<std::string, cplx>& bs) const {
    LogComplex acc = LogComplex::from(scalar.value());
    if (acc.is_zero) return acc;
    acc.log_mag += pi_power * std::log(pi);
    acc.mul_sign_pow(sign_power.exact_gap(b));
    acc.mul_i_pow(phase_power.exact_gap(b));
    for (const auto& e : numer) acc *= a_factor_log(e.eval(b));
    for (const auto& e : denom) {
        const LogComplex d = a_factor_log(e.eval(b));
        if (d.is_zero) throw PoleError("AFactorProduct: zero a-factor in the denominator");
        acc /= d;
    }
    for (const auto& lp : linear) {
        const BiIndex v = lp.arg.eval(b);
        const cplx prod = v.alpha * v.alpha_bar;
        if (prod == cplx(0, 0)) {
            if (lp.power > 0) {
                acc = LogComplex::zero();
                return acc;
            }
            throw PoleError("AFactorProduct: zero linear factor in the denominator");
        }
        LogComplex f = LogComplex::from(prod);
        f.log_mag *= lp.power;
        f.phase *= lp.power;
        acc *= f;
    }
    for (const auto& ep : extra) {
        auto it = bs.find(ep.base);
        if (it == bs.end())
            throw ConstraintError("AFactorProduct: unbound base '" + ep.base + "'");
        const cplx z = it->second;
        const BiIndex ex = ep.exponent.eval(b);
        if (ep.abs_only) {
            acc.log_mag += to_double(ep.exponent.const_h.re) * std::log(std::abs(z));
            continue;
        }
        if (z == cplx(0, 0))
            throw SingularityError("AFactorProduct: power of zero base '" + ep.base + "'");
        const double L = std::log(std::abs(z));
        const double th = std::arg(z);
        const cplx s = ex.sum();
        acc.log_mag += s.real() * L;
        acc.phase += s.imag() * L + double(ex.n) * th;
    }
    return acc;
}

nlohmann::json AFactorProduct::to_json() const {
    auto rat_j = [](const Rat& r) {
        return nlohmann::json::array({r.numerator(), r.denominator()});
    };
    auto rc_j = [&](const RatComplex& c) {
        return nlohmann::json{{"re", rat_j(c.re)}, {"im", rat_j(c.im)}};
    };
    auto expr_j = [&](const AffineExpr& e) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [name, t] : e.terms) {
            terms.push_back({{"param", name},
                             {"coeff", rc_j(t.coeff)},
                             {"kind", t.kind == ParamKind::spin ? "spin" : "point"},
                             {"swapped", t.swapped}});
        }
        return nlohmann::json{
            {"const_h", rc_j(e.const_h)}, {"const_a", rc_j(e.const_a)}, {"terms", terms}};
    };
    nlohmann::json j;
    j["numer"] = nlohmann::json::array();
    for (const auto& e : numer) j["numer"].push_back(expr_j(e));
    j["denom"] = nlohmann::json::array();
    for (const auto& e : denom) j["denom"].push_back(expr_j(e));
    j["sign_power"] = expr_j(sign_power);
    j["phase_power"] = expr_j(phase_power);
    j["scalar"] = rc_j(scalar);
    j["pi_power"] = pi_power;
    j["linear"] = nlohmann::json::array();
    for (const auto& lp : linear)
        j["linear"].push_back({{"arg", expr_j(lp.arg)}, {"power", lp.power}});
    j["extra"] = nlohmann::json::array();
    for (const auto& ep : extra)
        j["extra"].push_back(
            {{"base", ep.base}, {"exponent", expr_j(ep.exponent)}, {"abs_only", ep.abs_only}});
    return j;
}

namespace {

// the cancellation partner of a(e) under a(alpha) a(1-alpha_bar) = 1
AffineExpr partner(const AffineExpr& e) { return AffineExpr::constant(1) - e.swapped(); }

// Normal form of a sign/phase monomial: only the gap of the exponent matters,
// reduced modulo m. Rebuild as an expression whose gap functional is
// term-by-term reduced: constant part in const_h, one unswapped term per
// parameter encoding the per-unit-n multiplier.
AffineExpr normalize_gap_monomial(const AffineExpr& e, long long m) {
    const RatComplex cgap = e.const_h - e.const_a;
    if (cgap.im != 0)
        throw ConstraintError("sign/phase exponent has non-real constant gap");
    AffineExpr out;
    out.const_h = RatComplex(rat_mod(cgap.re, m));
    for (const auto& [name, t] : e.terms) {
        // per-unit integer-part multiplier of this parameter in the gap
        RatComplex mult;
        if (t.kind == ParamKind::separated_point) {
            // value_h - value_a = -i n (swapped: +i n)
            const RatComplex mi = t.swapped ? RatComplex(0, 1) : RatComplex(0, -1);
            mult = t.coeff * mi;
        } else {
            mult = t.swapped ? -t.coeff : t.coeff;
        }
        if (mult.im != 0)
            throw ConstraintError("sign/phase exponent has non-real gap multiplier for '" +
                                  name + "'");
        const Rat r = rat_mod(mult.re, m);
        if (r == 0) continue;
        AffineTerm nt;
        nt.kind = t.kind;
        nt.swapped = false;
        nt.coeff = (t.kind == ParamKind::separated_point) ? RatComplex(Rat(0), r)
                                                          : RatComplex(r);
        out.terms[name] = nt;
    }
    return out;
}

// remove a(e) a(partner(e)) pairs and numer/denom duplicates; value-preserving
void cancel_pairs(AFactorProduct& p) {
    auto drop_partner_pairs = [](std::vector<AffineExpr>& v) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < v.size() && !changed; ++i) {
                const AffineExpr want = partner(v[i]);
                for (std::size_t j = 0; j < v.size(); ++j) {
                    if (j == i) continue;
                    if (v[j] == want) {
                        v.erase(v.begin() + std::max(i, j));
                        v.erase(v.begin() + std::min(i, j));
                        changed = true;
                        break;
                    }
                }
            }
        }
    };
    drop_partner_pairs(p.numer);
    drop_partner_pairs(p.denom);
    // a(e)/a(e) = 1
    for (std::size_t i = 0; i < p.numer.size();) {
        auto it = std::find(p.denom.begin(), p.denom.end(), p.numer[i]);
        if (it != p.denom.end()) {
            p.denom.erase(it);
            p.numer.erase(p.numer.begin() + i);
        } else {
            ++i;
        }
    }
}

// flip + strip normalization of one a-factor argument. Appends bookkeeping to
// the product: sign_power for flips, scalar sign and linear factors for
// shifts (numerator orientation; invert is true for denominator factors).
struct FactorNormalization {
    AffineExpr expr;
    AffineExpr sign_add;              // accumulate into sign_power
    int scalar_sign = 1;              // +-1
    std::vector<LinearPower> linear;  // extra linear factors
};

FactorNormalization strip_only(AffineExpr e, bool invert) {
    FactorNormalization out;
    // shift Re(const_h) into [0, 1)
    const long long k = rat_floor(e.const_h.re);
    if (k > 0) {
        // a(e) = (-1)^k a(e-k) / prod_{j=1..k} ((e-j)(e-j)_bar)
        for (long long j = 1; j <= k; ++j) {
            AffineExpr arg = e;
            arg.shift(-j);
            out.linear.push_back({arg, invert ? 1 : -1});
            out.scalar_sign = -out.scalar_sign;
        }
        e.shift(-k);
    } else if (k < 0) {
        // a(e) = (-1)^k prod_{j=0..|k|-1} ((e+j)(e+j)_bar) a(e+|k|)
        for (long long j = 0; j < -k; ++j) {
            AffineExpr arg = e;
            arg.shift(j);
            out.linear.push_back({arg, invert ? -1 : 1});
            out.scalar_sign = -out.scalar_sign;
        }
        e.shift(-k);
    }
    out.expr = e;
    return out;
}

FactorNormalization normalize_factor(const AffineExpr& e, bool invert) {
    FactorNormalization plain = strip_only(e, invert);
    FactorNormalization flipped = strip_only(e.swapped(), invert);
    // a(alpha) = (-1)^n a(alpha_bar): flipping costs the gap of e in the sign
    if (flipped.expr < plain.expr) {
        flipped.sign_add = e; // only the gap of this expression matters
        return flipped;
    }
    return plain;
}

} // namespace

AFactorProduct canonicalize(const AFactorProduct& p) {
    AFactorProduct out = p;
    cancel_pairs(out);

    AFactorProduct result;
    result.sign_power = out.sign_power;
    result.phase_power = out.phase_power;
    result.scalar = out.scalar;
    result.pi_power = out.pi_power;
    result.linear = out.linear;
    result.extra = out.extra;
    result.bindings = out.bindings;
    result.bases = out.bases;

    for (const auto& e : out.numer) {
        FactorNormalization fn = normalize_factor(e, false);
        result.numer.push_back(fn.expr);
        result.sign_power += fn.sign_add;
        if (fn.scalar_sign < 0) result.scalar *= RatComplex(-1);
        result.linear.insert(result.linear.end(), fn.linear.begin(), fn.linear.end());
    }
    for (const auto& e : out.denom) {
        FactorNormalization fn = normalize_factor(e, true);
        result.denom.push_back(fn.expr);
        // 1/a(alpha) = (-1)^n / a(alpha_bar); plus-orientation keeps the
        // mod-2 normal form route-independent
        result.sign_power += fn.sign_add;
        if (fn.scalar_sign < 0) result.scalar *= RatComplex(-1);
        result.linear.insert(result.linear.end(), fn.linear.begin(), fn.linear.end());
    }

    // second cancellation pass on the stripped factors (safe: each removed
    // pair multiplies to exactly 1)
    cancel_pairs(result);

    // merge linear factors with identical arguments
    std::sort(result.linear.begin(), result.linear.end(),
              [](const LinearPower& a, const LinearPower& b) { return a.arg < b.arg; });
    std::vector<LinearPower> merged;
    for (const auto& lp : result.linear) {
        if (!merged.empty() && merged.back().arg == lp.arg)
            merged.back().power += lp.power;
        else
            merged.push_back(lp);
    }
    std::erase_if(merged, [](const LinearPower& lp) { return lp.power == 0; });
    result.linear = std::move(merged);

    std::sort(result.numer.begin(), result.numer.end());
    std::sort(result.denom.begin(), result.denom.end());
    std::sort(result.extra.begin(), result.extra.end());

    // normalize the sign/phase monomials (gap functionals mod 2 / mod 4)
    result.sign_power = normalize_gap_monomial(result.sign_power, 2);
    result.phase_power = normalize_gap_monomial(result.phase_power, 4);
    return result;
}

} // namespace sovc
