#pragma once

// The Glasser-Manna-Oloa integral
//
//     M(a) = (4/pi) int_0^{pi/2} x^2 / (x^2 + ln^2(2 e^-a cos x)) dx
//
// by direct quadrature and by its closed forms, the Laplace transform
// L(a) of psi(s+1), the Laplace moments of ln Gamma, and the slope jump
// of M at the cusp a = ln 2.  M has one closed form above the cusp,
//
//     M(a) = gamma/a - gamma - ln a + a int_0^inf e^-at ln Gamma(t) dt,
//
// and two equivalent ones below it, built from the unit-interval moment
// int_0^1 e^-at ln Gamma(t) dt or from psi plus Gamma(0, a).

#include <cmath>
#include <stdexcept>

#include "oloa/constants.hpp"
#include "oloa/quadrature.hpp"
#include "oloa/series.hpp"
#include "oloa/special_functions.hpp"

namespace oloa {

constexpr double kLnTwo = 0.6931471805599453;
constexpr double kBranchTieTol = 1e-14;

enum class Branch { Below, At, Above };
enum class MMethod { DirectQuadrature, ClosedForm, SeriesForm };
enum class ForcedBranch { Automatic, Below, Above };

inline Branch branch_of(double a) {
    if (a < kLnTwo - kBranchTieTol) return Branch::Below;
    if (std::fabs(a - kLnTwo) <= kBranchTieTol) return Branch::At;
    return Branch::Above;
}

inline const char* branch_name(Branch b) {
    switch (b) {
    case Branch::Below: return "below";
    case Branch::At: return "at";
    case Branch::Above: return "above";
    }
    return "?";
}

struct BranchContext {
    double a;
    double b;       // e^a - 1
    double c;       // 1 - e^-a
    double big_a;   // ln 2pi + gamma
    Branch branch;
};

inline BranchContext branch_context(double a) {
    if (!(a > 0.0)) throw std::domain_error("branch_context: requires a > 0");
    return {a, std::expm1(a), -std::expm1(-a), constant(Constant::BigA), branch_of(a)};
}

struct MResult {
    double value = 0.0;
    double err = 0.0;
    Branch branch = Branch::Below;
    MMethod method = MMethod::DirectQuadrature;
};

// M(a) straight from the defining integral.  The integrand is written
// against ln(2 e^-a cos x) = (ln 2 - a) + ln cos x, in the ratio form
// 1 / (1 + (L/x)^2): x^2 underflows at the deepest abscissae, and at
// a = ln 2 that would turn the removable x -> 0 limit into 0/0.  The
// ratio form gives 1 when L rounds to 0 and 0 when (L/x)^2 overflows,
// both the correct limits.
inline MResult m_direct(double a, const QuadConfig& cfg = {}) {
    if (!(a >= 0.0)) throw std::domain_error("m_direct: requires a >= 0");
    const double lp = kLnTwo - a;
    const double half_pi = 1.5707963267948966;
    EvalResult q = integrate(
        [lp](double x) {
            double L = lp + std::log(std::cos(x));
            double r = L / x;
            return 1.0 / (1.0 + r * r);
        },
        0.0, half_pi, cfg);
    MResult r;
    r.value = 4.0 / 3.141592653589793 * q.value;
    r.err = 4.0 / 3.141592653589793 * q.err;
    r.branch = branch_of(a);
    r.method = MMethod::DirectQuadrature;
    return r;
}

// Closed forms of M(a).  Above the cusp (and at it, by continuity):
//   M(a) = gamma/a - gamma - ln a + a int_0^inf e^-at ln Gamma(t) dt.
// Below it:
//   M(a) = gamma/a + (a + ln c - gamma - ln a)/c + (a/c) int_0^1 e^-at ln Gamma(t) dt.
// Both branches blow up term-by-term as a -> 0, so tiny a falls back to
// the direct quadrature.
inline MResult m_closed(double a, const QuadConfig& cfg = {},
                        ForcedBranch forced = ForcedBranch::Automatic) {
    if (!(a > 0.0)) throw std::domain_error("m_closed: requires a > 0");
    if (a < 1e-3 && forced == ForcedBranch::Automatic) return m_direct(a, cfg);

    BranchContext ctx = branch_context(a);
    const double gamma = constant(Constant::Gamma);
    bool below = (forced == ForcedBranch::Automatic)
                     ? ctx.branch == Branch::Below
                     : forced == ForcedBranch::Below;
    MResult r;
    r.branch = ctx.branch;
    r.method = MMethod::ClosedForm;
    if (below) {
        EvalResult q = integrate_laplace([](double t) { return ln_gamma(t); },
                                         a, 1.0, cfg);
        double head = gamma / a;
        double mid = (a + std::log(ctx.c) - gamma - std::log(a)) / ctx.c;
        r.value = head + mid + a / ctx.c * q.value;
        r.err = a / ctx.c * q.err +
                4e-16 * (std::fabs(head) + std::fabs(mid) + std::fabs(r.value));
    } else {
        EvalResult q = integrate_laplace(
            [](double t) { return ln_gamma(t); }, a,
            std::numeric_limits<double>::infinity(), cfg);
        double head = gamma / a - gamma - std::log(a);
        r.value = head + a * q.value;
        r.err = a * q.err + 4e-16 * (std::fabs(head) + std::fabs(r.value));
    }
    return r;
}

// The digamma-based closed form on (0, ln 2]:
//   M(a) = gamma/a + (a + ln c + Gamma(0,a))/c + (1/c) int_0^1 e^-at psi(t+1) dt.
// Differs from the Below branch of m_closed by one integration by parts.
inline MResult m_psi_form(double a, const QuadConfig& cfg = {}) {
    if (!(a > 0.0) || a > kLnTwo + kBranchTieTol)
        throw std::domain_error("m_psi_form: requires 0 < a <= ln 2");
    BranchContext ctx = branch_context(a);
    const double gamma = constant(Constant::Gamma);
    EvalResult q = integrate_laplace([](double t) { return digamma(t + 1.0); },
                                     a, 1.0, cfg);
    double head = gamma / a;
    double mid = (a + std::log(ctx.c) + incomplete_gamma0(a)) / ctx.c;
    MResult r;
    r.value = head + mid + q.value / ctx.c;
    r.err = q.err / ctx.c +
            4e-16 * (std::fabs(head) + std::fabs(mid) + std::fabs(r.value));
    r.branch = ctx.branch;
    r.method = MMethod::SeriesForm;
    return r;
}

// L(a) = int_0^inf e^-as psi(s+1) ds.
inline EvalResult l_direct(double a, const QuadConfig& cfg = {}) {
    if (!(a > 0.0)) throw std::domain_error("l_direct: requires a > 0");
    return integrate_laplace([](double s) { return digamma(s + 1.0); }, a,
                             std::numeric_limits<double>::infinity(), cfg);
}

// int_0^1 e^-at ln Gamma(t) dt in closed form:
//   A(a-c)/a^2 - (c/2a) Lambda(a/2pi) + 2c sum_j ln j/(a^2 + 4 pi^2 j^2).
inline EvalResult laplace_lngamma_unit(double a, const SeriesConfig& cfg = {}) {
    if (!(a > 0.0)) throw std::domain_error("laplace_lngamma_unit: requires a > 0");
    const double two_pi = 6.283185307179586;
    double c = -std::expm1(-a);
    double big_a = constant(Constant::BigA);
    EvalResult lam = lambda_euler(a / two_pi, cfg);
    EvalResult ks = log_kernel_sum(a, cfg);
    EvalResult out;
    out.value = big_a * (a - c) / (a * a) - c / (2.0 * a) * lam.value +
                2.0 * c * ks.value;
    out.err = c / (2.0 * a) * lam.err + 2.0 * c * ks.err +
              4e-16 * (1.0 + std::fabs(out.value));
    out.evaluations = lam.evaluations + ks.evaluations;
    out.converged = lam.converged && ks.converged;
    return out;
}

// int_0^inf e^-at ln Gamma(t) dt in closed form, valid on 0 < a < ln 2:
//   -(gamma + ln a)/(a c e^a) + A(a-c)/(a^2 c) - (1/2a) Lambda(a/2pi)
//   + 2 sum_j ln j/(a^2 + 4 pi^2 j^2).
inline EvalResult laplace_lngamma_full(double a, const SeriesConfig& cfg = {}) {
    if (!(a > 0.0) || !(a < kLnTwo))
        throw std::domain_error("laplace_lngamma_full: requires 0 < a < ln 2");
    const double two_pi = 6.283185307179586;
    double b = std::expm1(a);       // = c e^a
    double c = -std::expm1(-a);
    double gamma = constant(Constant::Gamma);
    double big_a = constant(Constant::BigA);
    EvalResult lam = lambda_euler(a / two_pi, cfg);
    EvalResult ks = log_kernel_sum(a, cfg);
    EvalResult out;
    out.value = -(gamma + std::log(a)) / (a * b) + big_a * (a - c) / (a * a * c) -
                lam.value / (2.0 * a) + 2.0 * ks.value;
    out.err = lam.err / (2.0 * a) + 2.0 * ks.err +
              4e-16 * (1.0 + std::fabs(out.value) + std::fabs(gamma + std::log(a)) / (a * b));
    out.evaluations = lam.evaluations + ks.evaluations;
    out.converged = lam.converged && ks.converged;
    return out;
}

// int_0^1 t^n ln Gamma(t) dt for 0 <= n <= 8, by the Espinosa-Moll moment
// formula: with A = ln 2pi + gamma,
//   (1/(n+1)) [ sum_{k=1}^{floor((n+1)/2)} (-1)^k binom(n+1, 2k-1)
//                 (2k)!/(k (2pi)^2k) (A zeta(2k) - zeta'(2k))
//             - sum_{k=1}^{floor(n/2)} (-1)^k binom(n+1, 2k)
//                 (2k)!/(2 (2pi)^2k) zeta(2k+1)
//             + ln sqrt(2pi) ].
inline double moment_lngamma(int n) {
    if (n < 0 || n > 8) throw std::out_of_range("moment_lngamma: n outside [0, 8]");
    const double two_pi = 6.283185307179586;
    double big_a = constant(Constant::BigA);
    double v = 0.5 * constant(Constant::LnTwoPi);
    double fact = 1.0;   // (2k)!
    double pw = 1.0;     // (2pi)^2k
    for (int k = 1; 2 * k <= n + 1; ++k) {
        fact *= (2.0 * k - 1.0) * (2.0 * k);
        pw *= two_pi * two_pi;
        double sign = (k & 1) ? -1.0 : 1.0;
        v += sign * gen_binomial(n + 1.0, 2 * k - 1) * fact / (k * pw) *
             (big_a * zeta(2.0 * k) - zeta_prime_even(k));
        if (2 * k <= n)
            v -= sign * gen_binomial(n + 1.0, 2 * k) * fact / (2.0 * pw) *
                 zeta(2.0 * k + 1.0);
    }
    return v / (n + 1.0);
}

struct CuspSlopes {
    EvalResult left;    // d/da of the Below closed form at ln 2
    EvalResult right;   // d/da of the Above closed form at ln 2
};

inline CuspSlopes mprime_slopes(const QuadConfig& cfg = {}) {
    CuspSlopes s;
    s.left = one_sided_derivative(
        [&cfg](double x) { return m_closed(x, cfg, ForcedBranch::Below).value; },
        kLnTwo, Side::Left, cfg);
    s.right = one_sided_derivative(
        [&cfg](double x) { return m_closed(x, cfg, ForcedBranch::Above).value; },
        kLnTwo, Side::Right, cfg);
    return s;
}

// Slope jump of M at the cusp: M'(ln2^-) - M'(ln2^+), which the closed
// forms put at exactly 4.
inline EvalResult mprime_jump(const QuadConfig& cfg = {}) {
    CuspSlopes s = mprime_slopes(cfg);
    EvalResult out;
    out.value = s.left.value - s.right.value;
    out.err = s.left.err + s.right.err;
    out.evaluations = s.left.evaluations + s.right.evaluations;
    out.converged = s.left.converged && s.right.converged;
    return out;
}

} // namespace oloa
