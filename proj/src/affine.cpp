#include "sovc/affine.hpp"

namespace sovc {

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
    const_h += o.const_h;
    const_a += o.const_a;
    for (const auto& [name, t] : o.terms) {
        auto it = terms.find(name);
        if (it == terms.end()) {
            terms.emplace(name, t);
            continue;
        }
        if (it->second.kind != t.kind || it->second.swapped != t.swapped)
            throw ConstraintError("AffineExpr: parameter '" + name +
                                  "' used with inconsistent kind/orientation");
        it->second.coeff += t.coeff;
        if (it->second.coeff.is_zero()) terms.erase(it);
    }
    return *this;
}

AffineExpr operator-(const AffineExpr& e) {
    AffineExpr r = e;
    r.const_h = -r.const_h;
    r.const_a = -r.const_a;
    for (auto& [name, t] : r.terms) t.coeff = -t.coeff;
    return r;
}

AffineExpr& AffineExpr::operator*=(const RatComplex& c) {
    if (c.is_zero()) {
        *this = AffineExpr();
        return *this;
    }
    const_h *= c;
    const_a *= c;
    for (auto& [name, t] : terms) t.coeff *= c;
    return *this;
}

AffineExpr AffineExpr::swapped() const {
    AffineExpr r;
    r.const_h = const_a;
    r.const_a = const_h;
    r.terms = terms;
    for (auto& [name, t] : r.terms) t.swapped = !t.swapped;
    return r;
}

bool operator<(const AffineExpr& a, const AffineExpr& b) {
    if (a.const_h != b.const_h) return a.const_h < b.const_h;
    if (a.const_a != b.const_a) return a.const_a < b.const_a;
    return a.terms < b.terms;
}

long long AffineExpr::exact_gap(const Bindings& b) const {
    // gap = (const_h - const_a) + sum_p coeff * (value_h - value_a), with
    // value_h - value_a = -i n  (separated point, unswapped)
    //                   = +i n  (separated point, swapped)
    //                   = n_s   (spin, unswapped; -n_s swapped)
    RatComplex gap = const_h - const_a;
    for (const auto& [name, t] : terms) {
        auto it = b.find(name);
        if (it == b.end())
            throw ConstraintError("AffineExpr: unbound parameter '" + name + "'");
        RatComplex delta;
        if (std::holds_alternative<SeparatedPoint>(it->second)) {
            if (t.kind != ParamKind::separated_point)
                throw ConstraintError("AffineExpr: '" + name + "' bound to a separated point");
            const auto& sp = std::get<SeparatedPoint>(it->second);
            delta = RatComplex(0, t.swapped ? sp.n : -sp.n);
        } else {
            if (t.kind != ParamKind::spin)
                throw ConstraintError("AffineExpr: '" + name + "' bound to a spin");
            const auto& s = std::get<Spin>(it->second);
            delta = RatComplex(t.swapped ? -s.n : s.n, 0);
        }
        gap += t.coeff * delta;
    }
    if (gap.im != 0 || gap.re.denominator() != 1)
        throw ConstraintError("AffineExpr: evaluation gap " + to_string(gap) +
                              " is not an integer (" + str() + ")");
    return gap.re.numerator();
}

BiIndex AffineExpr::eval(const Bindings& b) const {
    cplx vh = const_h.value();
    cplx va = const_a.value();
    for (const auto& [name, t] : terms) {
        auto it = b.find(name);
        if (it == b.end())
            throw ConstraintError("AffineExpr: unbound parameter '" + name + "'");
        cplx h, a;
        if (std::holds_alternative<SeparatedPoint>(it->second)) {
            const auto& sp = std::get<SeparatedPoint>(it->second);
            h = sp.x();
            a = sp.x_bar();
        } else {
            const auto& s = std::get<Spin>(it->second);
            h = s.s();
            a = s.s_bar();
        }
        if (t.swapped) std::swap(h, a);
        const cplx c = t.coeff.value();
        vh += c * h;
        va += c * a;
    }
    BiIndex out;
    out.alpha = vh;
    out.alpha_bar = va;
    out.n = exact_gap(b);
    return out;
}

std::string AffineExpr::str() const {
    std::string s = "(" + to_string(const_h) + "|" + to_string(const_a) + ")";
    for (const auto& [name, t] : terms) {
        s += " + " + to_string(t.coeff) + "*" + name;
        if (t.swapped) s += "~";
    }
    return s;
}

} // namespace sovc
