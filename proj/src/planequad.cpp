#include "sovc/planequad.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace sovc {

namespace {

// C-infinity step: 1 for t <= 0, 0 for t >= 1
double bump(double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const double ha = std::exp(-1.0 / (1.0 - t));
    const double hb = std::exp(-1.0 / t);
    return ha / (ha + hb);
}

struct DiskChart {
    cplx center;
    double radius; // window radius; weight is 1 inside radius/2
    double q;      // radial substitution r = t^q
    double tmax;   // radius^(1/q)
};

struct Geometry {
    std::vector<DiskChart> disks;
    double r1 = 4.0, r2 = 8.0; // far window: 0 until r1, 1 from r2 on
    double qfar = 1.0, tfar = 0.25;

    double disk_weight(std::size_t k, double dist) const {
        const double h = 0.5 * disks[k].radius;
        return bump((dist - h) / h);
    }
    double far_weight(double absz) const { return 1.0 - bump((absz - r1) / (r2 - r1)); }
    double middle_weight(cplx z) const {
        double w = 1.0 - far_weight(std::abs(z));
        for (std::size_t k = 0; k < disks.size(); ++k) {
            if (w <= 0.0) return 0.0;
            w -= disk_weight(k, std::abs(z - disks[k].center));
        }
        return std::max(w, 0.0);
    }
};

double substitution_exponent(double sigma) {
    if (sigma <= 0.0) return 1.0;
    return std::clamp(2.0 / (2.0 - sigma), 1.0, 10.0);
}

Geometry make_geometry(const QuadPlan& plan) {
    Geometry g;
    // merge coincident singular points
    std::vector<Singularity> sing;
    for (const auto& s : plan.singularities) {
        bool merged = false;
        for (auto& t : sing) {
            if (std::abs(t.location - s.location) < 1e-12) {
                t.strength += s.strength;
                merged = true;
                break;
            }
        }
        if (!merged) sing.push_back(s);
    }
    double rmax = 0.0;
    for (const auto& s : sing) rmax = std::max(rmax, std::abs(s.location));
    g.r1 = std::max(4.0, 2.0 * rmax + 2.0);
    g.r2 = 2.0 * g.r1;
    const double sigma_far = 4.0 - plan.decay_at_infinity.sum().real();
    g.qfar = substitution_exponent(sigma_far);
    g.tfar = std::pow(1.0 / g.r1, 1.0 / g.qfar);
    for (std::size_t i = 0; i < sing.size(); ++i) {
        double dmin = 2.0;
        for (std::size_t j = 0; j < sing.size(); ++j)
            if (j != i) dmin = std::min(dmin, std::abs(sing[i].location - sing[j].location));
        DiskChart d;
        d.center = sing[i].location;
        d.radius = std::min(1.0, 0.45 * dmin);
        d.q = substitution_exponent(sing[i].strength.sum().real());
        d.tmax = std::pow(d.radius, 1.0 / d.q);
        g.disks.push_back(d);
    }
    return g;
}

} // namespace

void QuadPlan::validate() const {
    for (const auto& s : singularities) {
        const double sig = s.strength.sum().real();
        if (!(sig < 2.0 - 1e-12))
            throw PlanError("QuadPlan: non-integrable singularity (Re strength sum = " +
                            std::to_string(sig) + ")");
    }
    if (!oscillation) {
        const double dec = decay_at_infinity.sum().real();
        if (!(dec > 2.0 + 1e-12))
            throw PlanError("QuadPlan: integrand does not decay at infinity (Re decay sum = " +
                            std::to_string(dec) + ")");
    }
}

IntegralEstimate integrate_plane(const PlaneFn& f, const QuadPlan& plan) {
    plan.validate();
    if (plan.oscillation)
        throw PlanError("integrate_plane: oscillatory plans must use the radial Bessel route");
    const Geometry geo = make_geometry(plan);

    // chart-local integrands; chart 0..K-1 = disks, K = middle, K+1 = far
    const std::size_t K = geo.disks.size();
    auto chart_eval = [&](std::size_t chart, double u, double v) -> cplx {
        if (chart < K) {
            const DiskChart& d = geo.disks[chart];
            const double r = std::pow(u, d.q);
            const double w = geo.disk_weight(chart, r);
            if (w <= 0.0 || r == 0.0) return cplx(0, 0);
            const cplx z = d.center + std::polar(r, v);
            return f(z) * (w * d.q * std::pow(u, 2.0 * d.q - 1.0));
        }
        if (chart == K) {
            const cplx z(u, v);
            const double w = geo.middle_weight(z);
            if (w <= 0.0) return cplx(0, 0);
            return f(z) * w;
        }
        // far field: zeta = t^qfar e^{i v}, z = 1/zeta, d^2z = |zeta|^-4 d^2zeta
        const double uu = std::pow(u, geo.qfar);
        if (uu == 0.0) return cplx(0, 0);
        const double absz = 1.0 / uu;
        const double w = geo.far_weight(absz);
        if (w <= 0.0) return cplx(0, 0);
        const cplx z = std::polar(absz, -v);
        const double jac = geo.qfar * std::pow(u, -2.0 * geo.qfar - 1.0);
        return f(z) * (w * jac);
    };

    struct Cell {
        std::size_t chart;
        double cx, cy, hx, hy;
        cplx val;
        double err;
        int split;
        std::uint64_t id;
    };
    struct Less {
        bool operator()(const Cell& a, const Cell& b) const {
            if (a.err != b.err) return a.err < b.err;
            return a.id > b.id;
        }
    };
    std::priority_queue<Cell, std::vector<Cell>, Less> heap;
    std::vector<Cell> frozen;
    std::uint64_t next_id = 0;
    long evals = 0;
    cplx total(0, 0);
    double toterr = 0.0;

    auto push = [&](std::size_t chart, double cx, double cy, double hx, double hy) {
        auto f2 = [&](double x, double y) { return chart_eval(chart, x, y); };
        const GMSample s = quad_detail::gm_rule(f2, cx, cy, hx, hy);
        evals += kGMPointsPerCell;
        heap.push(Cell{chart, cx, cy, hx, hy, s.value, s.error, s.split_dim, next_id++});
        total += s.value;
        toterr += s.error;
    };
    auto push_grid = [&](std::size_t chart, double ax, double bx, double ay, double by, int gx,
                         int gy) {
        const double hx = 0.5 * (bx - ax) / gx, hy = 0.5 * (by - ay) / gy;
        for (int i = 0; i < gx; ++i)
            for (int j = 0; j < gy; ++j)
                push(chart, ax + (2 * i + 1) * hx, ay + (2 * j + 1) * hy, hx, hy);
    };

    for (std::size_t k = 0; k < K; ++k)
        push_grid(k, 0.0, geo.disks[k].tmax, 0.0, two_pi, 2, 4);
    push_grid(K, -geo.r2, geo.r2, -geo.r2, geo.r2, 4, 4);
    push_grid(K + 1, 0.0, geo.tfar, 0.0, two_pi, 2, 4);

    auto tol_now = [&] {
        return std::max(plan.target_abs_error, plan.target_rel_error * std::abs(total));
    };
    while (toterr > tol_now() && evals + 2 * kGMPointsPerCell <= plan.max_evaluations &&
           !heap.empty()) {
        Cell w = heap.top();
        heap.pop();
        const double sc = std::abs(w.cx) + std::abs(w.cy) + 1.0;
        if (w.err <= 0.0 || std::min(w.hx, w.hy) < 1e-14 * sc) {
            frozen.push_back(w);
            continue;
        }
        total -= w.val;
        toterr -= w.err;
        if (w.split == 0) {
            push(w.chart, w.cx - 0.5 * w.hx, w.cy, 0.5 * w.hx, w.hy);
            push(w.chart, w.cx + 0.5 * w.hx, w.cy, 0.5 * w.hx, w.hy);
        } else {
            push(w.chart, w.cx, w.cy - 0.5 * w.hy, w.hx, 0.5 * w.hy);
            push(w.chart, w.cx, w.cy + 0.5 * w.hy, w.hx, 0.5 * w.hy);
        }
    }

    std::vector<Cell> all = std::move(frozen);
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Cell& a, const Cell& b) { return a.id < b.id; });
    total = cplx(0, 0);
    toterr = 0.0;
    for (const auto& c : all) {
        total += c.val;
        toterr += c.err;
    }
    IntegralEstimate out;
    out.value = total;
    out.abs_error_estimate = toterr;
    out.evaluations = evals;
    out.converged =
        toterr <= std::max(plan.target_abs_error, plan.target_rel_error * std::abs(total));
    return out;
}

IntegralEstimate integrate_plane_strict(const PlaneFn& f, const QuadPlan& plan) {
    IntegralEstimate e = integrate_plane(f, plan);
    if (!e.converged)
        throw NonConvergence("integrate_plane: budget of " + std::to_string(plan.max_evaluations) +
                             " evaluations exhausted (error " +
                             std::to_string(e.abs_error_estimate) + ")");
    return e;
}

IntegralEstimate integrate_exterior(const PlaneFn& f, double radius, const BiIndex& decay,
                                    double rel_tol, double abs_tol, long max_evals) {
    const double sigma_far = 4.0 - decay.sum().real();
    if (!(sigma_far < 2.0 - 1e-12))
        throw PlanError("integrate_exterior: decay too weak");
    const double q = substitution_exponent(sigma_far);
    const double tmax = std::pow(1.0 / radius, 1.0 / q);
    auto f2 = [&](double u, double v) -> cplx {
        const double uu = std::pow(u, q);
        if (uu == 0.0) return cplx(0, 0);
        const cplx z = std::polar(1.0 / uu, -v);
        return f(z) * (q * std::pow(uu, -2.0) * std::pow(u, q - 1.0) / uu);
    };
    QuadResult r = integrate_rect(f2, 0.0, tmax, 0.0, two_pi, rel_tol, abs_tol, max_evals, 2);
    return IntegralEstimate{r.value, r.error, r.evaluations, r.converged};
}

IntegralEstimate integrate_radial_oscillatory(const RadialFn& f_radial, int n, double p_mag,
                                              const QuadPlan& plan) {
    if (!(p_mag > 0.0))
        throw PlanError("integrate_radial_oscillatory: momentum magnitude must be positive");
    double sigma0 = 0.0;
    for (const auto& s : plan.singularities)
        if (std::abs(s.location) < 1e-12) sigma0 = s.strength.sum().real();
    if (!(sigma0 < 2.0 - 1e-12))
        throw PlanError("integrate_radial_oscillatory: non-integrable origin");
    // the weight r f(r) behaves like r^(1-sigma0) at the origin; r = t^qeff
    // with qeff = 2/(2-sigma0) flattens it to t^1
    const double qeff = substitution_exponent(sigma0);

    const int m = std::abs(n);
    const int max_segments = 96;
    std::vector<cplx> partial;
    partial.reserve(max_segments);
    long evals = 0;
    double seg_err_sum = 0.0;
    const double seg_rel = 0.1 * plan.target_rel_error;

    auto weight = [&](double r) -> cplx {
        return r * f_radial(r) * bessel_j(m, 2.0 * p_mag * r);
    };

    // first segment [0, z1] with the endpoint substitution r = t^qeff
    const double z1 = bessel_zero(m, 1) / (2.0 * p_mag);
    {
        auto g = [&](double t) -> cplx {
            const double r = std::pow(t, qeff);
            if (r == 0.0) return cplx(0, 0);
            return weight(r) * qeff * std::pow(t, qeff - 1.0);
        };
        QuadResult s = integrate_1d(g, 0.0, std::pow(z1, 1.0 / qeff), seg_rel, 0.0, 400'000);
        evals += s.evaluations;
        seg_err_sum += s.error;
        partial.push_back(s.value);
    }

    cplx best(0, 0);
    double best_err = 1e300;
    double prev_zero = z1;
    AccelResult acc;
    for (int k = 2; k <= max_segments + 1; ++k) {
        const double zk = bessel_zero(m, k) / (2.0 * p_mag);
        QuadResult s = integrate_1d(weight, prev_zero, zk, seg_rel, 0.0, 200'000);
        evals += s.evaluations;
        seg_err_sum += s.error;
        partial.push_back(partial.back() + s.value);
        prev_zero = zk;
        if (k >= 8 && (k % 8 == 0 || k == max_segments + 1)) {
            acc = wynn_epsilon(partial);
            const double err = acc.error + seg_err_sum;
            if (err < best_err) {
                best = acc.value;
                best_err = err;
            }
            if (best_err <=
                std::max(plan.target_abs_error, plan.target_rel_error * std::abs(best)))
                break;
        }
        if (evals > plan.max_evaluations) break;
    }

    IntegralEstimate out;
    out.value = best;
    out.abs_error_estimate = best_err;
    out.evaluations = evals;
    out.converged =
        best_err <= std::max(plan.target_abs_error, plan.target_rel_error * std::abs(best));
    if (!out.converged && best_err > 1e3 * std::max(plan.target_abs_error,
                                                    plan.target_rel_error * std::abs(best)))
        throw NonConvergence("integrate_radial_oscillatory: acceleration stagnated (error " +
                             std::to_string(best_err) + ")");
    return out;
}

} // namespace sovc
