#pragma once

#include <cmath>
#include <cstdint>

#include "nscb/dyadic.hpp"
#include "nscb/field.hpp"
#include "nscb/rng.hpp"

namespace nscb::testing {

// Random zero-mean scalar field, spectrum |k|^{-beta}.
inline Field random_scalar(const Grid& grid, std::uint64_t seed, double beta = 0.5) {
    CounterRng rng(seed);
    Field f(grid, 1);
    f.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        if (sx == 0 && sy == 0 && sz == 0) return;
        const double kmag = std::sqrt(static_cast<double>(sx * sx + sy * sy + sz * sz));
        const std::uint64_t key =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(sx + 512)) << 40) ^
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(sy + 512)) << 20) ^
            static_cast<std::uint64_t>(static_cast<std::uint32_t>(sz + 512));
        f.comp(0)[idx] =
            std::pow(kmag, -beta) * cplx(rng.gaussian(2 * key), rng.gaussian(2 * key + 1));
    });
    f.hermitian_symmetrize();
    return f;
}

inline Field random_vector(const Grid& grid, std::uint64_t seed, double beta = 0.5) {
    Field f(grid, 3);
    for (std::size_t c = 0; c < 3; ++c)
        f.comp(c) = random_scalar(grid, seed * 3 + c + 1, beta).comp(0);
    return f;
}

// White noise restricted to the raw annulus of block j.
inline Field in_annulus(const Grid& grid, const DyadicPartition& part, long j,
                        std::uint64_t seed) {
    Field white = random_scalar(grid, seed, 0.0);
    Field out(grid, 1);
    const double ku = grid.k_unit();
    white.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const double kmag = ku * std::sqrt(static_cast<double>(sx * sx + sy * sy + sz * sz));
        out.comp(0)[idx] = part.raw_symbol(j, kmag) * white.comp(0)[idx];
    });
    return out;
}

// White noise on the core of block j (4/3 < |k| 2^{-j} <= 2), where the block
// symbol is exactly 1 and both neighbors vanish.
inline Field in_block_core(const Grid& grid, long j, std::uint64_t seed) {
    Field white = random_scalar(grid, seed, 0.0);
    Field out(grid, 1);
    const double ku = grid.k_unit();
    white.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const double kmag = ku * std::sqrt(static_cast<double>(sx * sx + sy * sy + sz * sz));
        const double r = std::ldexp(kmag, static_cast<int>(-j));
        if (r > 4.0 / 3.0 && r <= 2.0) out.comp(0)[idx] = white.comp(0)[idx];
    });
    return out;
}

inline double rel_diff(const Field& a, const Field& b) {
    Field d = a;
    d -= b;
    const double ref = std::max(b.l2_norm(), 1e-300);
    return d.l2_norm() / ref;
}

// Single-mode scalar field c e^{i k.x} + conjugate.
inline Field single_mode_scalar(const Grid& grid, long kx, long ky, long kz, cplx amp) {
    Field f(grid, 1);
    const std::size_t n = grid.n;
    auto wrap = [n](long s) { return s >= 0 ? static_cast<std::size_t>(s) : n - static_cast<std::size_t>(-s); };
    f.comp(0)[wrap(kx) + n * (wrap(ky) + n * wrap(kz))] = amp;
    f.comp(0)[wrap(-kx) + n * (wrap(-ky) + n * wrap(-kz))] = std::conj(amp);
    return f;
}

}  // namespace nscb::testing
