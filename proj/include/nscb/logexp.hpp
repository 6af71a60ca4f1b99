#pragma once

#include <cmath>
#include <limits>

namespace nscb {

// Positive quantity carried with its iterated logarithms. The theorem bounds
// overflow double precision routinely; log2/log3 stay representable and
// comparisons against ordinary doubles only ever need log1 when it is finite
// (any finite double x has ln x < 710, so an overflowed log1 wins outright).
struct IteratedExp {
    double value = 0.0;  // may be +inf
    double log1 = -std::numeric_limits<double>::infinity();
    double log2 = -std::numeric_limits<double>::infinity();
    double log3 = -std::numeric_limits<double>::infinity();

    static IteratedExp from_log1(double l1) {
        IteratedExp e;
        e.log1 = l1;
        e.value = safe_exp(l1);
        e.log2 = l1 > 0.0 ? std::log(l1) : -std::numeric_limits<double>::infinity();
        e.log3 = e.log2 > 0.0 ? std::log(e.log2) : -std::numeric_limits<double>::infinity();
        return e;
    }

    // l2 = ln ln of the quantity; l3_hint supplies ln l2 when l2 overflowed.
    static IteratedExp from_log2(double l2, double l3_hint) {
        IteratedExp e;
        e.log2 = l2;
        e.log1 = safe_exp(l2);
        e.value = safe_exp(e.log1);
        e.log3 = std::isfinite(l2) && l2 > 0.0 ? std::log(l2) : l3_hint;
        return e;
    }

    static double safe_exp(double x) {
        if (x > 709.0) return std::numeric_limits<double>::infinity();
        return std::exp(x);
    }

    // x <= this, exact for positive finite x.
    bool bounds(double x) const {
        if (!(x > 0.0)) return true;
        if (std::isfinite(log1)) return std::log(x) <= log1;
        return true;  // log1 overflowed: exceeds every finite double
    }

    // e^{log_x} <= this; lets callers compare quantities whose value itself
    // overflows double.
    bool bounds_log(double log_x) const {
        if (std::isfinite(log1)) return log_x <= log1;
        if (std::isfinite(log2)) return log_x <= 0.0 || std::log(log_x) <= log2;
        return true;
    }
};

}  // namespace nscb
