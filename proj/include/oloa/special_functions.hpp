#pragma once

// Scalar special functions needed by the integral family: digamma and
// log-gamma (recurrence shift + Stirling/Bernoulli tail), the exponential
// integral Gamma(0, a), Riemann zeta and its derivative at even integers
// (Euler-Maclaurin), the inverse tangent integral Ti2, binomial coefficients
// with real upper argument, Pochhammer symbols, unsigned Stirling numbers of
// the first kind, and harmonic numbers.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace oloa {

namespace detail {

// B_2, B_4, ..., B_16
constexpr std::array<double, 8> kBernoulli2k = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};

// B_2k / (2k)! for k = 1..5
constexpr std::array<double, 5> kBernoulliOverFact = {
    1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0, 1.0 / 47900160.0};

constexpr double kLogTwoPi = 1.8378770664093454836;

} // namespace detail

// psi(x) for x > 0: shift to x >= 10, then the asymptotic series
// psi(x) ~ ln x - 1/(2x) - sum B_2k / (2k x^2k), truncation < 1e-17.
inline double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");
    double shift = 0.0;
    while (x < 10.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    double v = std::log(x) - 0.5 * inv;
    double p = inv2;
    for (std::size_t k = 0; k < detail::kBernoulli2k.size(); ++k) {
        v -= detail::kBernoulli2k[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    return v + shift;
}

// ln Gamma(x) for x > 0 by the same shift plus Stirling's series.
inline double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
    if (x == 1.0 || x == 2.0) return 0.0;   // keep the classical zeros exact
    double shift = 0.0;
    while (x < 10.0) {
        shift += std::log(x);
        x += 1.0;
    }
    double v = (x - 0.5) * std::log(x) - x + 0.5 * detail::kLogTwoPi;
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    double p = inv;
    for (std::size_t k = 0; k < detail::kBernoulli2k.size(); ++k) {
        v += detail::kBernoulli2k[k] / ((2.0 * (k + 1)) * (2.0 * (k + 1) - 1.0)) * p;
        p *= inv2;
    }
    return v - shift;
}

namespace detail {

// Euler's constant via Euler-Maclaurin on H_N - ln N at N = 40;
// the k <= 6 Bernoulli tail leaves < 1e-23.
inline double euler_gamma_impl() {
    const int n = 40;
    double h = 0.0;
    for (int m = n; m >= 1; --m) h += 1.0 / m;
    double v = h - std::log(static_cast<double>(n)) - 0.5 / n;
    double n2 = static_cast<double>(n) * n;
    double p = 1.0 / n2;
    for (int k = 1; k <= 6; ++k) {
        v += kBernoulli2k[k - 1] / (2.0 * k) * p;
        p /= n2;
    }
    return v;
}

inline double euler_gamma() {
    static const double g = euler_gamma_impl();
    return g;
}

} // namespace detail

using detail::euler_gamma;

// Gamma(0, a) = E1(a) = int_a^inf exp(-t)/t dt for a > 0.
// Power series below a = 1, modified Lentz continued fraction above.
inline double incomplete_gamma0(double a) {
    if (!(a > 0.0)) throw std::domain_error("incomplete_gamma0: requires a > 0");
    if (a <= 1.0) {
        double sum = 0.0;
        double term = 1.0;           // a^k / k! carried without the 1/k factor
        for (int k = 1; k <= 60; ++k) {
            term *= a / k;
            double add = ((k & 1) ? term : -term) / k;
            sum += add;
            if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
        }
        return -detail::euler_gamma() - std::log(a) + sum;
    }
    const double tiny = 1e-300;
    double b = a + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 4e-17) break;
    }
    return h * std::exp(-a);
}

// Binomial coefficient binom(t, k) with real t and integer k >= 0.
inline double gen_binomial(double t, int k) {
    if (k < 0) throw std::domain_error("gen_binomial: requires k >= 0");
    double r = 1.0;
    for (int m = 0; m < k; ++m) r *= (t - m) / (m + 1.0);
    return r;
}

// Rising factorial (t)_n = t (t+1) ... (t+n-1).
inline double pochhammer(double t, int n) {
    if (n < 0) throw std::domain_error("pochhammer: requires n >= 0");
    double r = 1.0;
    for (int m = 0; m < n; ++m) r *= t + m;
    return r;
}

namespace detail {

constexpr int kStirlingMaxN = 20;

// |s(n, k)| from |s(n+1, k)| = n |s(n, k)| + |s(n, k-1)|; the row n = 20
// tops out at 19! H_19 < 2^63, so the table is exact in 64-bit integers.
constexpr auto make_stirling_table() {
    std::array<std::array<long long, kStirlingMaxN + 1>, kStirlingMaxN + 1> s{};
    s[0][0] = 1;
    for (int n = 0; n < kStirlingMaxN; ++n)
        for (int k = 0; k <= n; ++k) {
            s[n + 1][k] += static_cast<long long>(n) * s[n][k];
            s[n + 1][k + 1] += s[n][k];
        }
    return s;
}

inline constexpr auto kStirling1 = make_stirling_table();

} // namespace detail

// Unsigned Stirling number of the first kind, exact for 0 <= k <= n <= 20.
inline long long stirling1_unsigned(int n, int k) {
    if (n < 0 || n > detail::kStirlingMaxN)
        throw std::out_of_range("stirling1_unsigned: n outside [0, 20]");
    if (k < 0 || k > n) return 0;
    return detail::kStirling1[n][k];
}

// zeta(s) for s > 1 by Euler-Maclaurin at N = 50; good to ~1e-15 relative
// for s >= 1.1 (the library uses it at s >= 2).
inline double zeta(double s) {
    if (!(s > 1.0)) throw std::domain_error("zeta: requires s > 1");
    const int n = 50;
    double sum = 0.0;
    for (int m = n - 1; m >= 1; --m) sum += std::pow(static_cast<double>(m), -s);
    double ns = std::pow(static_cast<double>(n), -s);
    double v = sum + n * ns / (s - 1.0) + 0.5 * ns;
    double poch = s;                 // (s)_(2k-1), built incrementally
    double npow = ns / n;            // N^(-s-2k+1)
    for (std::size_t k = 0; k < detail::kBernoulliOverFact.size(); ++k) {
        v += detail::kBernoulliOverFact[k] * poch * npow;
        poch *= (s + 2.0 * k + 1.0) * (s + 2.0 * k + 2.0);
        npow /= static_cast<double>(n) * n;
    }
    return v;
}

// zeta'(2k) for k = 1..4, from d/ds sum n^-s = -sum ln n * n^-s with an
// Euler-Maclaurin tail at N = 100.  Derivatives of f(x) = ln x * x^-s obey
// f^(m)(x) = x^(-s-m) (alpha_m + beta_m ln x) with
// alpha_{m+1} = -(s+m) alpha_m + beta_m,  beta_{m+1} = -(s+m) beta_m.
inline double zeta_prime_even(int k) {
    if (k < 1 || k > 4) throw std::out_of_range("zeta_prime_even: k outside [1, 4]");
    const double s = 2.0 * k;
    const int n = 100;
    double sum = 0.0;
    for (int m = n - 1; m >= 2; --m) sum += std::log(static_cast<double>(m)) * std::pow(static_cast<double>(m), -s);
    const double logn = std::log(static_cast<double>(n));
    const double ns = std::pow(static_cast<double>(n), -s);
    // int_N^inf ln x * x^-s dx
    double v = sum + (logn / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0))) * ns * n;
    v += 0.5 * logn * ns;
    double alpha = 0.0, beta = 1.0;  // coefficients at derivative order m
    int m = 0;
    for (std::size_t j = 1; j <= detail::kBernoulliOverFact.size(); ++j) {
        while (m < 2 * static_cast<int>(j) - 1) {
            double na = -(s + m) * alpha + beta;
            beta = -(s + m) * beta;
            alpha = na;
            ++m;
        }
        double fm = std::pow(static_cast<double>(n), -s - m) * (alpha + beta * logn);
        v -= detail::kBernoulliOverFact[j - 1] * fm;
    }
    return -v;
}

// Inverse tangent integral Ti2(x) = int_0^x arctan(t)/t dt for x >= 0.
// Alternating series sum (-1)^k x^(2k+1) / (2k+1)^2 on [0, 1], and the
// reflection Ti2(x) = Ti2(1/x) + (pi/2) ln x above 1.
inline double ti2(double x, double abs_tol = 1e-14) {
    if (x < 0.0) throw std::domain_error("ti2: requires x >= 0");
    if (x == 0.0) return 0.0;
    if (x > 1.0)
        return ti2(1.0 / x, abs_tol) + 1.5707963267948966 * std::log(x);
    double sum = 0.0, carry = 0.0;
    double xp = x;
    double x2 = x * x;
    for (std::int64_t k = 0; k < 40'000'000; ++k) {
        double den = 2.0 * k + 1.0;
        double term = ((k & 1) ? -xp : xp) / (den * den);
        double y = term - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        xp *= x2;
        // alternating, monotone: the tail is below the next term
        if (xp / ((den + 2.0) * (den + 2.0)) < abs_tol) break;
    }
    return sum;
}

// H_n = 1 + 1/2 + ... + 1/n.
inline double harmonic(int n) {
    if (n < 0) throw std::domain_error("harmonic: requires n >= 0");
    double h = 0.0;
    for (int m = n; m >= 1; --m) h += 1.0 / m;
    return h;
}

} // namespace oloa
