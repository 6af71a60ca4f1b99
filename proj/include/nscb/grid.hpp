#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace nscb {

// Periodic-box discretization: n collocation points per axis on [0, L)^3,
// spectral coefficients indexed by integer wavevectors with the usual signed
// FFT layout. Modes with any |index| above dealias_fraction * n/2 are dropped.
struct Grid {
    std::size_t n = 0;
    double box_length = 0.0;
    double dealias_fraction = 0.0;

    std::size_t size() const { return n * n * n; }

    // Physical wavenumber unit: the smallest nonzero |k| per axis.
    double k_unit() const { return 2.0 * M_PI / box_length; }

    // Signed integer index of array position m on one axis.
    long signed_index(std::size_t m) const {
        return m <= n / 2 ? static_cast<long>(m) : static_cast<long>(m) - static_cast<long>(n);
    }

    // Largest retained |index| per axis.
    long max_index() const {
        const double cap = dealias_fraction * static_cast<double>(n) / 2.0;
        long m = static_cast<long>(cap + 1e-9);
        if (m > static_cast<long>(n / 2)) m = static_cast<long>(n / 2);
        return m;
    }

    // Largest retained wavenumber magnitude per axis.
    double max_wavenumber() const { return dealias_fraction * (static_cast<double>(n) / 2.0) * k_unit(); }

    bool keep_index(long s) const { return s >= -max_index() && s <= max_index(); }

    bool operator==(const Grid& other) const {
        return n == other.n && box_length == other.box_length &&
               dealias_fraction == other.dealias_fraction;
    }

    double cell_volume() const {
        const double h = box_length / static_cast<double>(n);
        return h * h * h;
    }
};

Grid make_grid(std::size_t n, double box_length = 2.0 * M_PI, double dealias_fraction = 2.0 / 3.0);

}  // namespace nscb
