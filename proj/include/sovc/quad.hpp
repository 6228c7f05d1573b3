#pragma once

// Low-level quadrature building blocks: adaptive complex-valued Gauss-Kronrod
// in 1D, an adaptive Genz-Malik degree-7 rule in 2D, and Wynn's epsilon
// algorithm for accelerating oscillatory segment sums. All drivers are
// deterministic: cells are refined worst-error-first with creation-order tie
// breaking and the final reduction runs in creation order.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <queue>
#include <vector>

#include "sovc/complexfn.hpp"
#include "sovc/errors.hpp"

namespace sovc {

struct QuadResult {
    cplx value{};
    double error = 0.0;
    long evaluations = 0;
    bool converged = false;
};

namespace quad_detail {

// 15-point Kronrod nodes on [-1,1] (positive half) with Kronrod weights and
// the embedded 7-point Gauss weights
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class F>
inline void gk15(F&& f, double a, double b, cplx& val, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cplx sk(0, 0), sg(0, 0);
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kXgk[i];
        cplx fv = f(c + dx);
        if (i < 7) fv += f(c - dx);
        if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) fv = cplx(0, 0);
        sk += kWgk[i] * fv;
        if (i % 2 == 1) sg += kWg[i / 2] * fv;
    }
    val = sk * h;
    err = std::abs((sk - sg) * h);
    // sharpen the raw difference the way QUADPACK does
    const double scale = std::abs(val) + 1e-300;
    const double r = err / scale;
    if (r < 1.0) err = scale * std::pow(r, 1.5);
}

struct Cell1 {
    double a, b;
    cplx val;
    double err;
    std::uint64_t id;
};

struct Cell1Less {
    bool operator()(const Cell1& x, const Cell1& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.id > y.id;
    }
};

} // namespace quad_detail

// Adaptive GK15 over [a, b]. Stops when total error <= max(abs_tol,
// rel_tol * |value|) or the evaluation budget is exhausted.
template <class F>
QuadResult integrate_1d(F&& f, double a, double b, double rel_tol, double abs_tol,
                        long max_evals = 2'000'000) {
    using namespace quad_detail;
    std::priority_queue<Cell1, std::vector<Cell1>, Cell1Less> heap;
    std::vector<Cell1> frozen; // cells too small to split further
    std::uint64_t next_id = 0;
    long evals = 0;
    cplx total(0, 0);
    double toterr = 0.0;

    auto push = [&](double lo, double hi) {
        Cell1 c{lo, hi, cplx(0, 0), 0.0, next_id++};
        gk15(f, lo, hi, c.val, c.err);
        evals += 15;
        total += c.val;
        toterr += c.err;
        heap.push(c);
    };
    push(a, b);

    while (toterr > std::max(abs_tol, rel_tol * std::abs(total)) && evals + 30 <= max_evals &&
           !heap.empty()) {
        Cell1 worst = heap.top();
        heap.pop();
        if (worst.err <= 0.0 || worst.b - worst.a < 1e-14 * (std::abs(worst.a) + 1.0)) {
            frozen.push_back(worst);
            continue;
        }
        total -= worst.val;
        toterr -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        push(worst.a, mid);
        push(mid, worst.b);
    }

    // deterministic final reduction in creation order
    std::vector<Cell1> all = std::move(frozen);
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Cell1& x, const Cell1& y) { return x.id < y.id; });
    total = cplx(0, 0);
    toterr = 0.0;
    for (const auto& c : all) {
        total += c.val;
        toterr += c.err;
    }
    QuadResult r;
    r.value = total;
    r.error = toterr;
    r.evaluations = evals;
    r.converged = toterr <= std::max(abs_tol, rel_tol * std::abs(total));
    return r;
}

// ---------------------------------------------------------------------------
// Genz-Malik degree-7 rule (2D) with embedded degree-5 error estimate
// ---------------------------------------------------------------------------

struct GMSample {
    cplx value{};
    double error = 0.0;
    int split_dim = 0;
};

namespace quad_detail {

inline constexpr double kLambda2 = 0.3585685828003180919906451539079374954541;
inline constexpr double kLambda4 = 0.9486832980505137995996680633298155601159;
inline constexpr double kLambda5 = 0.6882472016116852977216287342936235251269;
// D = 2 weights, normalized per unit volume
inline constexpr double kW1 = (12824.0 - (9120.0 - 400.0 * 2.0) * 2.0) / 19683.0;
inline constexpr double kW2 = 980.0 / 6561.0;
inline constexpr double kW3 = (1820.0 - 400.0 * 2.0) / 19683.0;
inline constexpr double kW4 = 200.0 / 19683.0;
inline constexpr double kW5 = 6859.0 / 19683.0 / 4.0;
inline constexpr double kE1 = (729.0 - 50.0 * (19.0 - 2.0) * 2.0) / 729.0;
inline constexpr double kE2 = 245.0 / 486.0;
inline constexpr double kE3 = (265.0 - 100.0 * 2.0) / 1458.0;
inline constexpr double kE4 = 25.0 / 729.0;

template <class F2>
inline GMSample gm_rule(F2&& f, double cx, double cy, double hx, double hy) {
    auto ev = [&](double x, double y) {
        cplx v = f(x, y);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return cplx(0, 0);
        return v;
    };
    const cplx f0 = ev(cx, cy);
    const cplx f2xm = ev(cx - kLambda2 * hx, cy), f2xp = ev(cx + kLambda2 * hx, cy);
    const cplx f2ym = ev(cx, cy - kLambda2 * hy), f2yp = ev(cx, cy + kLambda2 * hy);
    const cplx f4xm = ev(cx - kLambda4 * hx, cy), f4xp = ev(cx + kLambda4 * hx, cy);
    const cplx f4ym = ev(cx, cy - kLambda4 * hy), f4yp = ev(cx, cy + kLambda4 * hy);
    const cplx sum2 = f2xm + f2xp + f2ym + f2yp;
    const cplx sum3 = f4xm + f4xp + f4ym + f4yp;
    cplx sum4(0, 0);
    for (int sx = -1; sx <= 1; sx += 2)
        for (int sy = -1; sy <= 1; sy += 2)
            sum4 += ev(cx + sx * kLambda4 * hx, cy + sy * kLambda4 * hy);
    cplx sum5(0, 0);
    for (int sx = -1; sx <= 1; sx += 2)
        for (int sy = -1; sy <= 1; sy += 2)
            sum5 += ev(cx + sx * kLambda5 * hx, cy + sy * kLambda5 * hy);

    const double vol = 4.0 * hx * hy;
    GMSample out;
    out.value = vol * (kW1 * f0 + kW2 * sum2 + kW3 * sum3 + kW4 * sum4 + kW5 * sum5);
    const cplx deg5 = vol * (kE1 * f0 + kE2 * sum2 + kE3 * sum3 + kE4 * sum4);
    out.error = std::abs(out.value - deg5);

    const double ratio = (kLambda2 * kLambda2) / (kLambda4 * kLambda4);
    const double dx = std::abs(f2xm + f2xp - 2.0 * f0 - ratio * (f4xm + f4xp - 2.0 * f0));
    const double dy = std::abs(f2ym + f2yp - 2.0 * f0 - ratio * (f4ym + f4yp - 2.0 * f0));
    out.split_dim = (dy > dx) ? 1 : 0;
    return out;
}

} // namespace quad_detail

inline constexpr int kGMPointsPerCell = 17;

// Adaptive Genz-Malik over the rectangle [ax,bx] x [ay,by].
template <class F2>
QuadResult integrate_rect(F2&& f, double ax, double bx, double ay, double by, double rel_tol,
                          double abs_tol, long max_evals = 20'000'000, int initial_split = 1) {
    struct Cell {
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

    auto push = [&](double cx, double cy, double hx, double hy) {
        const GMSample s = quad_detail::gm_rule(f, cx, cy, hx, hy);
        evals += kGMPointsPerCell;
        heap.push(Cell{cx, cy, hx, hy, s.value, s.error, s.split_dim, next_id++});
        total += s.value;
        toterr += s.error;
    };

    const int g = std::max(1, initial_split);
    const double hx0 = 0.5 * (bx - ax) / g, hy0 = 0.5 * (by - ay) / g;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            push(ax + (2 * i + 1) * hx0, ay + (2 * j + 1) * hy0, hx0, hy0);

    while (toterr > std::max(abs_tol, rel_tol * std::abs(total)) &&
           evals + 2 * kGMPointsPerCell <= max_evals && !heap.empty()) {
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
            push(w.cx - 0.5 * w.hx, w.cy, 0.5 * w.hx, w.hy);
            push(w.cx + 0.5 * w.hx, w.cy, 0.5 * w.hx, w.hy);
        } else {
            push(w.cx, w.cy - 0.5 * w.hy, w.hx, 0.5 * w.hy);
            push(w.cx, w.cy + 0.5 * w.hy, w.hx, 0.5 * w.hy);
        }
    }

    // deterministic final reduction in creation order
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
    QuadResult r;
    r.value = total;
    r.error = toterr;
    r.evaluations = evals;
    r.converged = toterr <= std::max(abs_tol, rel_tol * std::abs(total));
    return r;
}

// ---------------------------------------------------------------------------
// Wynn epsilon algorithm on a sequence of partial sums
// ---------------------------------------------------------------------------

struct AccelResult {
    cplx value{};
    double error = 0.0; // change between the last two even-column estimates
    bool converged = false;
};

inline AccelResult wynn_epsilon(const std::vector<cplx>& partial_sums) {
    AccelResult out;
    if (partial_sums.empty()) return out;
    std::vector<cplx> cur = partial_sums, prev;
    cplx best = partial_sums.back();
    cplx prev_best = best;
    bool have_prev = false;
    const double scale = std::abs(best) + 1e-300;
    for (std::size_t k = 1; k < partial_sums.size(); ++k) {
        std::vector<cplx> next;
        next.reserve(cur.size());
        bool degenerate = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const cplx d = cur[i + 1] - cur[i];
            if (std::abs(d) < 1e-15 * scale) {
                degenerate = true;
                break;
            }
            const cplx base = prev.empty() ? cplx(0, 0) : prev[i + 1];
            next.push_back(base + 1.0 / d);
        }
        if (degenerate || next.empty()) break;
        prev = std::move(cur);
        cur = std::move(next);
        if (k % 2 == 0) {
            prev_best = best;
            have_prev = true;
            best = cur.front();
        }
    }
    out.value = best;
    out.error = have_prev ? std::abs(best - prev_best)
                          : std::abs(best - partial_sums.back());
    out.converged = true;
    return out;
}

} // namespace sovc
