#pragma once

// Mathematical constants the closed forms lean on, each computed once from
// a rapidly convergent representation and cached behind a magic static.

#include <cmath>
#include <stdexcept>

#include "oloa/special_functions.hpp"

namespace oloa {

enum class Constant {
    Gamma,        // Euler's constant
    LnTwoPi,      // ln(2 pi)
    Catalan,      // G = sum (-1)^k / (2k+1)^2
    Zeta3,        // zeta(3)
    ZetaPrime2,   // zeta'(2)
    BigA,         // ln(2 pi) + gamma
};

namespace detail {

// Catalan's constant by Bradley's central-binomial acceleration:
// G = (pi/8) ln(2 + sqrt 3) + (3/8) sum 1 / (binom(2n,n) (2n+1)^2).
inline double catalan_impl() {
    double sum = 0.0;
    double term = 1.0;   // 1 / (binom(2n,n) (2n+1)^2) at n = 0
    for (int n = 0; n < 40; ++n) {
        sum += term;
        double k = 2.0 * n + 1.0;
        term *= (n + 1.0) * k / (2.0 * (k + 2.0) * (k + 2.0));
        if (term < 1e-18) {
            sum += term;
            break;
        }
    }
    const double pi = 3.141592653589793;
    return pi / 8.0 * std::log(2.0 + std::sqrt(3.0)) + 3.0 / 8.0 * sum;
}

} // namespace detail

inline double constant(Constant c) {
    switch (c) {
    case Constant::Gamma:
        return detail::euler_gamma();
    case Constant::LnTwoPi:
        return detail::kLogTwoPi;
    case Constant::Catalan: {
        static const double g = detail::catalan_impl();
        return g;
    }
    case Constant::Zeta3: {
        static const double z = zeta(3.0);
        return z;
    }
    case Constant::ZetaPrime2: {
        static const double z = zeta_prime_even(1);
        return z;
    }
    case Constant::BigA:
        return detail::kLogTwoPi + detail::euler_gamma();
    }
    throw std::invalid_argument("constant: unknown enumerator");
}

} // namespace oloa
