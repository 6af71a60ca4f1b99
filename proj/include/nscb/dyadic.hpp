#pragma once

#include <vector>

#include "nscb/field.hpp"

namespace nscb {

// Dyadic partition of the resolvable band. The radial profile is built from
// a C-infinity step:
//   s(t) = e^{-1/t} / (e^{-1/t} + e^{-1/(1-t)}),
//   psi(r) = 1 for r <= 1, 1 - s(3(r-1)) on (1, 4/3), 0 for r >= 4/3,
//   phi(xi) = psi(|xi|/2) - psi(|xi|),
// so supp phi(2^{-j}.) is the annulus (2^j, (8/3) 2^j) and the shifted
// profiles telescope to a partition of unity. The lowest block absorbs the
// low-frequency tail (its symbol is psi(2^{-(j_min+1)} |xi|) with the zero
// mode excluded); modes above the band are removed by dealiasing.
class DyadicPartition {
public:
    static double profile_step(double t);
    static double profile_psi(double r);
    static double profile_phi(double r);  // radial, r = |xi|

    const Grid& grid() const { return grid_; }
    long j_min() const { return j_min_; }
    long j_max() const { return j_max_; }
    std::size_t num_scales() const { return static_cast<std::size_t>(j_max_ - j_min_ + 1); }
    bool in_range(long j) const { return j >= j_min_ && j <= j_max_; }

    // Raw profile value phi(2^{-j}|xi|), no boundary lumping.
    double raw_symbol(long j, double kmag) const;
    // Block symbol actually applied by dyadic_block (lumped at j_min).
    double block_symbol(long j, double kmag) const;
    // Low-pass symbol of the partial sum S_j (blocks strictly below j).
    double lowpass_symbol(long j, double kmag) const;

    // Cached per-j block weights over the coefficient cube.
    const std::vector<double>& block_weights(long j) const;

private:
    friend DyadicPartition build_partition(const Grid& grid);
    Grid grid_;
    long j_min_ = 0, j_max_ = -1;
    std::vector<std::vector<double>> weights_;  // per j, cube layout
};

DyadicPartition build_partition(const Grid& grid);

Field dyadic_block(const Field& f, const DyadicPartition& part, long j);
// S_j f = sum of blocks strictly below j; zero for j <= j_min.
Field partial_sum(const Field& f, const DyadicPartition& part, long j);
// Tilde block: sum of blocks j-1, j, j+1 (clipped to range).
Field tilde_block(const Field& f, const DyadicPartition& part, long j);

struct BonyDecomposition {
    Field low_high;   // T_f g
    Field high_low;   // T_g f
    Field remainder;  // R(f, g)
};

// Paraproduct split of the dealiased product fg, scalar fields.
BonyDecomposition bony_decompose(const Field& f, const Field& g, const DyadicPartition& part);

}  // namespace nscb
