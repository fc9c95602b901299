#pragma once

// Double-exponential (tanh-sinh) quadrature with trapezoid level doubling,
// plus the Laplace-transform and one-sided-derivative helpers built on it.
//
// The substitution x = tanh((pi/2) sinh t) turns endpoint singularities of
// log or mild power type into doubly-exponentially decaying tails, so a
// plain trapezoid rule in t converges at machine precision.  Abscissae are
// generated from their distance to the nearer endpoint, which keeps that
// distance accurate for singular integrands; the closed endpoints are never
// sampled.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace oloa {

struct EvalResult {
    double value = 0.0;
    double err = 0.0;           // conservative absolute error bound
    std::int64_t evaluations = 0;
    bool converged = true;
};

// Handling of the upper limit in integrate_laplace when it is infinite:
// substitute u = exp(-a t) and integrate over (0, 1], or truncate the
// half-line where the damping factor is below working precision.
enum class LaplaceRule { ExpSubstitution, Truncate };

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_levels = 12;        // trapezoid halvings, valid range [3, 16]
    LaplaceRule laplace_rule = LaplaceRule::ExpSubstitution;
};

// Thrown when an integrand comes back non-finite at an interior abscissa.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double abscissa)
        : std::runtime_error(what + " at x = " + std::to_string(abscissa)),
          abscissa_(abscissa) {}

    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

namespace detail {

// Compensated accumulator (Kahan); the level sums run over thousands of
// terms and the error floor below assumes they do not drift.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

inline void check_quad_config(const QuadConfig& cfg) {
    if (cfg.max_levels < 3 || cfg.max_levels > 16)
        throw std::invalid_argument("QuadConfig: max_levels must lie in [3, 16]");
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
        throw std::invalid_argument("QuadConfig: tolerances must be positive");
}

// Truncation point of the transformed axis.  6 keeps x^(-a) endpoint
// singularities honest up to a ~ 0.95: the transformed tail decays like
// exp(-(1-a) pi sinh(t) / 2), which at t = 6 is below 1e-13 even for a = 0.9.
constexpr double kTanhSinhTmax = 6.0;

// Abscissae closer to a nonzero endpoint than one ulp round onto it and are
// dropped, so the strip between the innermost sampled distance d and the
// endpoint is never seen.  For an integrable singularity f ~ C dist^-alpha
// that strip holds f(d) d / (1 - alpha); charging 20 |f(d)| d per affected
// side covers alpha <= 0.95, matching the truncation comment above.
constexpr double kDroppedStripFactor = 20.0;

} // namespace detail

// Integral of f over the finite interval [lo, hi].
template <class F>
EvalResult integrate(F&& f, double lo, double hi, const QuadConfig& cfg = {}) {
    detail::check_quad_config(cfg);
    if (!(lo < hi)) throw std::domain_error("integrate: requires lo < hi");
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::domain_error("integrate: endpoints must be finite");

    constexpr double half_pi = 1.5707963267948966;
    const double s = 0.5 * (hi - lo);   // half-length, folded into the weights

    EvalResult out;
    auto sample = [&](double x) {
        double v = f(x);
        ++out.evaluations;
        if (!std::isfinite(v))
            throw EvaluationError("integrate: integrand is not finite", x);
        return v;
    };

    // Innermost sampled distance to each endpoint and |f| there, plus
    // whether any node rounded onto that endpoint and was dropped; the
    // dropped strip is charged to the error bound on exit.
    struct SideWatch {
        bool dropped = false;
        double dist = std::numeric_limits<double>::infinity();
        double mag = 0.0;
    };
    SideWatch watch_lo, watch_hi;

    // One tanh-sinh node pair at |t| = t.  Accumulates the weighted samples
    // (one for t = 0), skipping nodes that round into an endpoint.
    auto node_pair = [&](double t, detail::KahanSum& acc, detail::KahanSum& accAbs) {
        double u = half_pi * std::sinh(t);
        double q = 2.0 / (1.0 + std::exp(2.0 * u));   // 1 - tanh(u)
        double w = s * half_pi * std::cosh(t) * q * (2.0 - q);
        if (t == 0.0) {
            double v = w * sample(lo + s);
            acc.add(v);
            accAbs.add(std::fabs(v));
            return;
        }
        double x_hi = hi - s * q;
        if (x_hi < hi) {
            double fv = sample(x_hi);
            double v = w * fv;
            acc.add(v);
            accAbs.add(std::fabs(v));
            if (s * q < watch_hi.dist) {
                watch_hi.dist = s * q;
                watch_hi.mag = std::fabs(fv);
            }
        } else {
            watch_hi.dropped = true;
        }
        double x_lo = lo + s * q;
        if (x_lo > lo) {
            double fv = sample(x_lo);
            double v = w * fv;
            acc.add(v);
            accAbs.add(std::fabs(v));
            if (s * q < watch_lo.dist) {
                watch_lo.dist = s * q;
                watch_lo.mag = std::fabs(fv);
            }
        } else {
            watch_lo.dropped = true;
        }
    };

    auto dropped_strip = [&]() {
        double d = 0.0;
        if (watch_lo.dropped) d += watch_lo.mag * watch_lo.dist;
        if (watch_hi.dropped) d += watch_hi.mag * watch_hi.dist;
        return detail::kDroppedStripFactor * d;
    };

    detail::KahanSum total, totalAbs;
    double h = 1.0;
    node_pair(0.0, total, totalAbs);
    for (int k = 1; k * h <= detail::kTanhSinhTmax; ++k)
        node_pair(k * h, total, totalAbs);

    double value = h * total.sum;
    double prev = value;
    double delta = std::numeric_limits<double>::infinity();
    out.converged = false;

    for (int level = 1; level <= cfg.max_levels; ++level) {
        h *= 0.5;
        for (int k = 1; k * h <= detail::kTanhSinhTmax; k += 2)
            node_pair(k * h, total, totalAbs);
        value = h * total.sum;
        delta = std::fabs(value - prev);
        prev = value;
        double floor = 8.0 * std::numeric_limits<double>::epsilon() * h * totalAbs.sum;
        if (level >= 2 && delta <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value))) {
            out.converged = true;
            out.value = value;
            out.err = std::max(delta, floor) + dropped_strip();
            return out;
        }
        out.err = std::max(delta, floor);
    }
    out.value = value;
    out.err += dropped_strip();
    return out;
}

// Integral of exp(-a t) g(t) over (0, upper); upper may be infinite.
template <class G>
EvalResult integrate_laplace(G&& g, double a, double upper, const QuadConfig& cfg = {}) {
    if (!(a > 0.0)) throw std::domain_error("integrate_laplace: requires a > 0");
    if (std::isfinite(upper)) {
        if (!(upper > 0.0))
            throw std::domain_error("integrate_laplace: requires upper > 0");
        return integrate([&](double t) { return std::exp(-a * t) * g(t); },
                         0.0, upper, cfg);
    }
    if (cfg.laplace_rule == LaplaceRule::Truncate) {
        // exp(-a t) < 9e-27 beyond the cut; charge the discarded tail to err.
        double cut = 60.0 / a;
        EvalResult r = integrate([&](double t) { return std::exp(-a * t) * g(t); },
                                 0.0, cut, cfg);
        double edge = std::fabs(g(cut)) + std::fabs(g(cut + 1.0 / a)) + 1.0;
        r.err += 2.0 * std::exp(-a * cut) * edge / a;
        r.evaluations += 2;
        return r;
    }
    // u = exp(-a t):  integral = (1/a) * int_0^1 g(-ln u / a) du
    EvalResult r = integrate([&](double u) { return g(-std::log(u) / a); },
                             0.0, 1.0, cfg);
    r.value /= a;
    r.err /= a;
    return r;
}

enum class Side { Left, Right };

// One-sided first derivative of f at x0 by Richardson extrapolation of
// one-sided differences with steps h0 * 2^-k, k = 0..6.  Two extrapolation
// columns remove the O(h) and O(h^2) terms; the error estimate is the
// level-to-level agreement of the last column.
template <class F>
EvalResult one_sided_derivative(F&& f, double x0, Side side, const QuadConfig& cfg = {}) {
    (void)cfg;
    constexpr int kSteps = 7;
    const double h0 = 1e-2;
    const double sgn = (side == Side::Right) ? 1.0 : -1.0;

    EvalResult out;
    double f0 = f(x0);
    ++out.evaluations;
    if (!std::isfinite(f0))
        throw EvaluationError("one_sided_derivative: f is not finite", x0);

    double r0[kSteps], r1[kSteps], r2[kSteps];
    double h = h0;
    for (int k = 0; k < kSteps; ++k, h *= 0.5) {
        double x = x0 + sgn * h;
        double fx = f(x);
        ++out.evaluations;
        if (!std::isfinite(fx))
            throw EvaluationError("one_sided_derivative: f is not finite", x);
        r0[k] = sgn * (fx - f0) / h;
        if (k >= 1) r1[k] = 2.0 * r0[k] - r0[k - 1];
        if (k >= 2) r2[k] = (4.0 * r1[k] - r1[k - 1]) / 3.0;
    }
    out.value = r2[kSteps - 1];
    double noise = std::numeric_limits<double>::epsilon() *
                   (std::fabs(f0) / (h0 / 64.0) + std::fabs(out.value));
    out.err = std::fabs(r2[kSteps - 1] - r2[kSteps - 2]) +
              0.25 * std::fabs(r2[kSteps - 2] - r2[kSteps - 3]) + 4.0 * noise;
    out.converged = true;
    return out;
}

} // namespace oloa
