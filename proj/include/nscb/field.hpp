#pragma once

#include <complex>
#include <vector>

#include "nscb/grid.hpp"

namespace nscb {

using cplx = std::complex<double>;

// Real field on the periodic box, stored as full-cube complex spectral
// coefficients per component (Hermitian symmetric, zero outside the dealias
// band). Components: 1 scalar, 3 vector, 9 rank-2 tensor (row-major, T_ij at
// component 3*i+j).
class Field {
public:
    Field() = default;
    Field(const Grid& grid, std::size_t ncomp);

    static Field from_physical(const Grid& grid, const std::vector<std::vector<double>>& samples);

    const Grid& grid() const { return grid_; }
    std::size_t ncomp() const { return ncomp_; }
    std::size_t size() const { return grid_.size(); }

    std::vector<cplx>& comp(std::size_t c) { return comps_[c]; }
    const std::vector<cplx>& comp(std::size_t c) const { return comps_[c]; }

    // Loop over retained modes of one component: f(sx, sy, sz, idx).
    template <typename F>
    void for_each_mode(F&& f) const {
        const long mmax = grid_.max_index();
        const std::size_t n = grid_.n;
        for (std::size_t z = 0; z < n; ++z) {
            const long sz = grid_.signed_index(z);
            if (sz < -mmax || sz > mmax) continue;
            for (std::size_t y = 0; y < n; ++y) {
                const long sy = grid_.signed_index(y);
                if (sy < -mmax || sy > mmax) continue;
                for (std::size_t x = 0; x < n; ++x) {
                    const long sx = grid_.signed_index(x);
                    if (sx < -mmax || sx > mmax) continue;
                    f(sx, sy, sz, x + n * (y + n * z));
                }
            }
        }
    }

    // Zero coefficients outside the dealias band.
    void apply_dealias_mask();
    // Make c(-k) = conj(c(k)) exact.
    void hermitian_symmetrize();

    std::vector<double> to_physical(std::size_t c) const;
    // Physical samples on a pad-times finer grid (band-limited interpolation).
    std::vector<double> to_physical_padded(std::size_t c, std::size_t pad = 2) const;

    // Pointwise Euclidean magnitude over components, on the native grid.
    std::vector<double> magnitude_physical() const;
    // Max of the pointwise magnitude over the pad-times collocation grid.
    double sup_magnitude(std::size_t pad = 2) const;

    // L2 norm over the box via Plancherel.
    double l2_norm() const;

    bool all_finite() const;
    double hermitian_defect() const;  // max |c(k) - conj(c(-k))| over modes
    void validate() const;            // throws on invariant violations

    Field& operator+=(const Field& other);
    Field& operator-=(const Field& other);
    Field& operator*=(double s);
    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }
    friend Field operator*(double s, Field a) { return a *= s; }

private:
    Grid grid_;
    std::size_t ncomp_ = 0;
    std::vector<std::vector<cplx>> comps_;
};

// Dealiased pointwise product of two scalar physical sample sets, returned as
// a band-limited scalar Field.
Field product_field(const Grid& grid, const std::vector<double>& a, const std::vector<double>& b);

// Symmetric rank-2 tensor from its six physical components, ordered
// T00, T01, T02, T11, T12, T22; only six transforms are taken.
Field symmetric_tensor_field(const Grid& grid, const std::vector<std::vector<double>>& six);

// Dealiased outer product a (x) b of two vector fields: T_ij = a_i b_j.
Field outer_product(const Field& a, const Field& b);

// Symmetric combination a (x) b + b (x) a.
Field symmetric_outer_product(const Field& a, const Field& b);

}  // namespace nscb
