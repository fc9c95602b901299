#pragma once

// Series-defined quantities: the Euler-constant window function Lambda, the
// logarithmic pole-kernel sum, the Stirling-average coefficients a_n and the
// rational functions p_n, the reduced imaginary-pole antiderivative, the
// unit-argument 3F2 that reproduces the a_n generating integral, one-sided
// binomial tail sums, and the Stirling-number generating function.

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "oloa/constants.hpp"
#include "oloa/quadrature.hpp"
#include "oloa/special_functions.hpp"

namespace oloa {

enum class TailRule { IntegralBound, GeometricBound, AlternatingBound };

struct SeriesConfig {
    double target_abs_err = 1e-10;
    std::int64_t max_terms = 10'000'000;
    TailRule tail_rule = TailRule::IntegralBound;   // ops pick per their contracts
};

// Lambda(z) = gamma - z^2 sum_{j>=1} 1 / (j (j^2 + z^2)); even in z, equals
// gamma at z = 0.  Partial sum to N with an Euler-Maclaurin tail in 1/N.
inline EvalResult lambda_euler(double z, const SeriesConfig& cfg = {}) {
    EvalResult out;
    if (z == 0.0) {
        out.value = constant(Constant::Gamma);
        out.err = 1e-16;
        return out;
    }
    const double z2 = z * z;
    double n_need = std::pow(2.0 * z2 * (2.0 + z2) / cfg.target_abs_err, 0.2);
    std::int64_t n = std::max<std::int64_t>(
        {1000, static_cast<std::int64_t>(10.0 * std::fabs(z)) + 1,
         static_cast<std::int64_t>(n_need) + 1});
    if (n > cfg.max_terms) n = cfg.max_terms;

    detail::KahanSum sum;
    for (std::int64_t j = 1; j <= n; ++j) {
        double jd = static_cast<double>(j);
        sum.add(1.0 / (jd * (jd * jd + z2)));
    }
    double nd = static_cast<double>(n);
    double tail = 0.5 / (nd * nd) - 0.5 / (nd * nd * nd) +
                  0.25 * (1.0 - z2) / (nd * nd * nd * nd);
    out.value = constant(Constant::Gamma) - z2 * (sum.sum + tail);
    out.err = z2 * (2.0 + z2) / std::pow(nd, 5) +
              4e-16 * (1.0 + z2 * std::fabs(sum.sum));
    out.evaluations = n;
    return out;
}

// sum_{j>=1} ln j / (a^2 + 4 pi^2 j^2), partial sum plus Euler-Maclaurin
// tail; the tail keeps the result accurate to ~1e-20 absolute.
inline EvalResult log_kernel_sum(double a, const SeriesConfig& cfg = {}) {
    const double four_pi2 = 39.47841760435743;   // 4 pi^2
    std::int64_t n = 50'000;
    if (n > cfg.max_terms) n = cfg.max_terms;

    detail::KahanSum sum, sum_abs;
    for (std::int64_t j = 2; j < n; ++j) {
        double jd = static_cast<double>(j);
        double term = std::log(jd) / (a * a + four_pi2 * jd * jd);
        sum.add(term);
        sum_abs.add(term);
    }
    double nd = static_cast<double>(n);
    double logn = std::log(nd);
    double den = a * a + four_pi2 * nd * nd;
    double fn = logn / den;
    double fpn = (den / nd - logn * 2.0 * four_pi2 * nd) / (den * den);
    double tail = (logn + 1.0) / (four_pi2 * nd) -
                  a * a / (4.0 * four_pi2 * four_pi2) *
                      (logn / (3.0 * nd * nd * nd) + 1.0 / (9.0 * nd * nd * nd));
    EvalResult out;
    out.value = sum.sum + tail + 0.5 * fn - fpn / 12.0;
    out.err = (1.0 + a * a * a * a) * (logn + 1.0) / std::pow(nd, 5) +
              4e-16 * sum_abs.sum;
    out.evaluations = n;
    return out;
}

namespace detail {

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

} // namespace detail

// a_n = sum_k |s(n, k)| / (k + 1) = int_0^1 (t)_n dt, evaluated as an exact
// rational over lcm(2..n+1) and rounded once at the end.
inline double oloa_coefficient(int n) {
    if (n < 0 || n > detail::kStirlingMaxN)
        throw std::out_of_range("oloa_coefficient: n outside [0, 20]");
    long long den = 1;
    for (int k = 2; k <= n + 1; ++k) den = std::lcm(den, static_cast<long long>(k));
    __int128 num = 0;
    for (int k = 0; k <= n; ++k)
        num += static_cast<__int128>(stirling1_unsigned(n, k)) * (den / (k + 1));
    __int128 g = detail::gcd128(num, den);
    return static_cast<double>(static_cast<long double>(num / g) /
                               static_cast<long double>(den / g));
}

// p_n(x) = sum_{j=1}^n c_j x / (1 + x^2)^j with c_1 = 1 and
// c_{j+1} = c_j * 2j / (2j + 1);  p_0 = 0.
inline double p_value(int n, double x) {
    if (n < 0 || n > 64) throw std::out_of_range("p_value: n outside [0, 64]");
    double base = 1.0 / (1.0 + x * x);
    double c = 1.0;
    double pw = base;
    double sum = 0.0;
    for (int j = 1; j <= n; ++j) {
        sum += c * pw;
        c *= 2.0 * j / (2.0 * j + 1.0);
        pw *= base;
    }
    return x * sum;
}

// Closed form of int_0^x ln t / (1 + t^2)^(n+1) dt:
//   binom(2n,n) 4^-n [ g0(x) + p_n(x) ln x - sum_{k<n} (arctan x + p_k(x)) / (2k+1) ]
// with g0(x) = ln x arctan x - Ti2(x).
inline EvalResult imag_pole_integral(int n, double x, const SeriesConfig& cfg = {}) {
    if (!(x > 0.0)) throw std::domain_error("imag_pole_integral: requires x > 0");
    if (n < 0 || n > 30) throw std::out_of_range("imag_pole_integral: n outside [0, 30]");
    double ti_tol = std::max(cfg.target_abs_err * 0.01, 1e-15);
    double lx = std::log(x);
    double at = std::atan(x);
    double v = lx * at - ti2(x, ti_tol) + p_value(n, x) * lx;
    for (int k = 0; k < n; ++k)
        v -= (at + p_value(k, x)) / (2.0 * k + 1.0);
    v *= gen_binomial(2.0 * n, n) / std::pow(4.0, n);
    EvalResult out;
    out.value = v;
    out.err = 2.0 * ti_tol + 1e-15 * (1.0 + std::fabs(v));
    return out;
}

// 3F2(1, 1, 2-t; 2, 3; 1) = sum_{k>=0} 2 (2-t)_k / ((k+1) (k+2)!).
// Terms fall off like k^-(2+t); the integral-rule tail term_k * k / (1+t)
// is added and the stop rule targets the residual after that correction.
inline EvalResult hyp3f2_unit(double t, const SeriesConfig& cfg = {}) {
    if (!(t > -1.0) || !(t < 2.0))
        throw std::domain_error("hyp3f2_unit: requires -1 < t < 2");
    detail::KahanSum sum;
    double term = 1.0;
    sum.add(term);
    EvalResult out;
    std::int64_t k = 0;
    for (k = 1; k < cfg.max_terms; ++k) {
        double kd = static_cast<double>(k);
        term *= (kd + 1.0 - t) * kd / ((kd + 1.0) * (kd + 2.0));
        sum.add(term);
        if (k < 8) continue;
        double corr = term * kd / (1.0 + t);
        double resid = 3.0 * std::fabs(term) +
                       4.0 * std::fabs(corr) * (2.0 + t) / kd;
        if (resid <= cfg.target_abs_err) {
            out.value = sum.sum + corr;
            out.err = resid + 4e-16 * std::fabs(sum.sum);
            out.evaluations = k + 1;
            out.converged = true;
            return out;
        }
    }
    double corr = term * static_cast<double>(k - 1) / (1.0 + t);
    out.value = sum.sum + corr;
    out.err = 3.0 * std::fabs(term) + std::fabs(corr);
    out.evaluations = k;
    out.converged = false;
    return out;
}

// sum_{nu>=1} (-1)^nu binom(t, nu+j) / nu for t > 0, j >= 0.  The terms are
// one-signed once nu + j > t + 1 and fall off like nu^-(t+2), so a partial
// sum plus the integral-rule correction term_N * N / (t+1) meets an absolute
// error of max(target, 1e-6) cheaply.
inline EvalResult alt_binomial_tail(double t, int j, const SeriesConfig& cfg = {}) {
    if (!(t > 0.0)) throw std::domain_error("alt_binomial_tail: requires t > 0");
    if (j < 0) throw std::domain_error("alt_binomial_tail: requires j >= 0");
    const double tol = std::max(cfg.target_abs_err, 1e-6);
    const std::int64_t nu_min = static_cast<std::int64_t>(std::ceil(t)) + 5;

    detail::KahanSum sum;
    double binom = gen_binomial(t, j + 1);   // binom(t, nu + j) at nu = 1
    EvalResult out;
    for (std::int64_t nu = 1; nu < cfg.max_terms; ++nu) {
        double nud = static_cast<double>(nu);
        double term = ((nu & 1) ? -binom : binom) / nud;
        sum.add(term);
        if (binom == 0.0) {   // integer t: the series terminates
            out.value = sum.sum;
            out.err = 4e-16 * (1.0 + std::fabs(sum.sum));
            out.evaluations = nu;
            out.converged = true;
            return out;
        }
        if (nu >= nu_min) {
            double corr = term * nud / (t + 1.0);
            double resid = 3.0 * std::fabs(term) +
                           4.0 * std::fabs(corr) * (2.0 + t) / nud;
            if (resid <= 0.5 * tol) {
                out.value = sum.sum + corr;
                out.err = resid + std::fabs(corr) * (2.0 + t) / nud +
                          4e-16 * (1.0 + std::fabs(sum.sum));
                out.evaluations = nu;
                out.converged = true;
                return out;
            }
        }
        double m = nud + static_cast<double>(j);
        binom *= (t - m) / (m + 1.0);
        out.evaluations = nu;
    }
    out.value = sum.sum;
    out.err = tol;
    out.converged = false;
    return out;
}

// ln^k(1+b) / k! = sum_{j>=k} (-1)^(j-k) |s(j, k)| b^j / j! for 0 < b < 1.
// The normalized rows tau(j, k) = |s(j, k)| / j! follow
// tau(j+1, k) = (j tau(j, k) + tau(j, k-1)) / (j + 1), which reaches far
// beyond the exact integer table without overflow.  Alternating-series
// stopping once the terms decrease.
inline EvalResult stirling_genfunc(int k, double b, const SeriesConfig& cfg = {}) {
    if (k < 0 || k > 8) throw std::out_of_range("stirling_genfunc: k outside [0, 8]");
    if (!(b > 0.0 && b < 1.0))
        throw std::domain_error("stirling_genfunc: requires 0 < b < 1");

    std::array<double, 9> tau{};
    tau[0] = 1.0;
    detail::KahanSum sum;
    double bp = 1.0;   // b^j
    double prev_mag = std::numeric_limits<double>::infinity();
    int decreasing = 0;
    EvalResult out;
    for (std::int64_t j = 0; j < cfg.max_terms; ++j) {
        double mag = tau[k] * bp;
        double term = (((j - k) & 1) ? -mag : mag);
        sum.add(term);
        out.evaluations = j + 1;

        // an exactly zero tail (k = 0 past the first term) counts as decay
        decreasing = (mag < prev_mag || mag == 0.0) ? decreasing + 1 : 0;
        prev_mag = mag;

        std::array<double, 9> next{};
        for (int i = 0; i <= k; ++i) {
            double carry = (i > 0) ? tau[i - 1] : 0.0;
            next[i] = (static_cast<double>(j) * tau[i] + carry) /
                      (static_cast<double>(j) + 1.0);
        }
        tau = next;
        bp *= b;

        double next_mag = tau[k] * bp;
        if (j >= k + 3 && decreasing >= 2 && next_mag <= 0.5 * cfg.target_abs_err) {
            out.value = sum.sum;
            out.err = next_mag + 4e-16 * (1.0 + std::fabs(sum.sum));
            out.converged = true;
            return out;
        }
    }
    out.value = sum.sum;
    out.err = std::fabs(prev_mag);
    out.converged = false;
    return out;
}

} // namespace oloa
