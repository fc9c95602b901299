#pragma once

// Deterministic 12-significant-digit number formatting for all CLI output:
// plain decimal when the magnitude sits in [1e-4, 1e6), scientific
// otherwise.  Same value in, same bytes out.

#include <cmath>
#include <cstdio>
#include <string>

namespace oloa {

inline std::string format_significant(double v) {
    char buf[48];
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0.00000000000";
    double av = std::fabs(v);
    if (av >= 1e-4 && av < 1e6) {
        int e = static_cast<int>(std::floor(std::log10(av)));
        std::snprintf(buf, sizeof buf, "%.*f", 11 - e, v);
    } else {
        std::snprintf(buf, sizeof buf, "%.11e", v);
    }
    return buf;
}

} // namespace oloa
