#include "sovc/closedforms.hpp"

namespace sovc {

namespace expr {

AffineExpr i_point(const std::string& name) {
    return AffineExpr::param(name, ParamKind::separated_point, RatComplex::i_unit());
}

AffineExpr one_plus_i_diff(const std::string& xname, const std::string& yname) {
    return AffineExpr::constant(1) + i_point(xname) - i_point(yname);
}

AffineExpr spin_minus_i_point(const std::string& sname, const std::string& xname) {
    return AffineExpr::param(sname, ParamKind::spin) - i_point(xname);
}

AffineExpr spinbar_minus_i_pointbar(const std::string& sname, const std::string& xname) {
    return AffineExpr::param(sname, ParamKind::spin, RatComplex(1), true) -
           AffineExpr::param(xname, ParamKind::separated_point, RatComplex::i_unit(), true);
}

} // namespace expr

namespace {

// q-factor over named parameters, without bindings
AFactorProduct q_factor_sym(const std::string& x, const std::string& y, const std::string& s) {
    AFactorProduct q;
    q.pi_power = 1;
    q.mul_a(expr::one_plus_i_diff(x, y));
    q.mul_a(expr::spinbar_minus_i_pointbar(s, x));
    q.div_a(expr::spin_minus_i_point(s, y));
    return q;
}

std::string idx_name(const std::string& stem, std::size_t k) {
    return stem + std::to_string(k + 1);
}

} // namespace

AFactorProduct q_factor(const SeparatedPoint& x, const SeparatedPoint& xp, const Spin& s) {
    AFactorProduct q = q_factor_sym("x", "y", "s");
    q.bindings["x"] = x;
    q.bindings["y"] = xp;
    q.bindings["s"] = s;
    return q;
}

AFactorProduct txx_closed_form(const std::vector<SeparatedPoint>& x,
                               const std::vector<SeparatedPoint>& xp, const Spin& s) {
    if (x.empty() || x.size() != xp.size())
        throw ConstraintError("txx_closed_form: lists must have equal length N >= 1");
    const std::size_t N = x.size();
    AFactorProduct out;
    for (std::size_t k = 0; k < N; ++k)
        out.sign_power += expr::spin_minus_i_point("s", idx_name("x", k));
    AffineExpr z0_exp;
    for (std::size_t k = 0; k < N; ++k) z0_exp += expr::i_point(idx_name("x", k));
    for (std::size_t j = 0; j < N; ++j) z0_exp -= expr::i_point(idx_name("y", j));
    out.extra.push_back(ExtraPower{"z0", z0_exp, false});
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t j = 0; j < N; ++j)
            out *= q_factor_sym(idx_name("x", k), idx_name("y", j), "s");
    for (std::size_t k = 0; k < N; ++k) {
        out.bindings[idx_name("x", k)] = x[k];
        out.bindings[idx_name("y", k)] = xp[k];
    }
    out.bindings["s"] = s;
    return out;
}

AFactorProduct ba_closed_form(cplx p, const std::vector<SeparatedPoint>& u,
                              const std::vector<SeparatedPoint>& x, const Spin& s) {
    if (x.empty() || u.size() + 1 != x.size())
        throw ConstraintError("ba_closed_form: need length(u) = length(x) - 1");
    const std::size_t N = x.size();
    AFactorProduct out;
    AffineExpr ax;
    for (std::size_t k = 0; k < N; ++k) ax += expr::spin_minus_i_point("s", idx_name("x", k));
    out.phase_power = ax;
    out.pi_power = int(N);
    out.extra.push_back(ExtraPower{"p", ax, false});
    {
        ExtraPower norm;
        norm.base = "p";
        norm.abs_only = true;
        norm.exponent = AffineExpr::constant(-(long long)(N) - 1);
        out.extra.push_back(norm);
    }
    for (std::size_t k = 0; k < N; ++k) {
        out.mul_a(expr::spinbar_minus_i_pointbar("s", idx_name("x", k)));
        for (std::size_t j = 0; j + 1 < N; ++j)
            out *= q_factor_sym(idx_name("x", k), idx_name("u", j), "s");
    }
    for (std::size_t k = 0; k < N; ++k) out.bindings[idx_name("x", k)] = x[k];
    for (std::size_t j = 0; j + 1 < N; ++j) out.bindings[idx_name("u", j)] = u[j];
    out.bindings["s"] = s;
    out.bases["p"] = p;
    return out;
}

} // namespace sovc
