#include "nscb/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace nscb {

double DyadicPartition::profile_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

double DyadicPartition::profile_psi(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 4.0 / 3.0) return 0.0;
    return 1.0 - profile_step(3.0 * (r - 1.0));
}

double DyadicPartition::profile_phi(double r) {
    return profile_psi(r * 0.5) - profile_psi(r);
}

double DyadicPartition::raw_symbol(long j, double kmag) const {
    return profile_phi(std::ldexp(kmag, static_cast<int>(-j)));
}

double DyadicPartition::block_symbol(long j, double kmag) const {
    if (kmag == 0.0) return 0.0;
    if (j == j_min_) return profile_psi(std::ldexp(kmag, static_cast<int>(-(j_min_ + 1))));
    return raw_symbol(j, kmag);
}

double DyadicPartition::lowpass_symbol(long j, double kmag) const {
    if (j <= j_min_ || kmag == 0.0) return 0.0;
    return profile_psi(std::ldexp(kmag, static_cast<int>(-j)));
}

const std::vector<double>& DyadicPartition::block_weights(long j) const {
    if (!in_range(j)) throw std::out_of_range("DyadicPartition: block index outside range");
    return weights_[static_cast<std::size_t>(j - j_min_)];
}

DyadicPartition build_partition(const Grid& grid) {
    DyadicPartition part;
    part.grid_ = grid;
    const double k_lo = grid.k_unit();
    const double k_hi = std::sqrt(3.0) * static_cast<double>(grid.max_index()) * grid.k_unit();
    long j_min = 0, j_max = -1;
    bool found = false;
    for (long j = -60; j <= 60; ++j) {
        const double lo = std::ldexp(1.0, static_cast<int>(j));
        const bool intersects = lo < k_hi && (8.0 / 3.0) * lo > k_lo;
        if (intersects) {
            if (!found) j_min = j;
            j_max = j;
            found = true;
        }
    }
    if (!found || j_max - j_min + 1 < 3)
        throw std::invalid_argument("build_partition: band supports fewer than 3 dyadic scales");
    part.j_min_ = j_min;
    part.j_max_ = j_max;

    part.weights_.assign(part.num_scales(), std::vector<double>(grid.size(), 0.0));
    const double ku = grid.k_unit();
    Field probe(grid, 1);  // mode iteration only
    probe.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const double kmag = ku * std::sqrt(static_cast<double>(sx * sx + sy * sy + sz * sz));
        for (long j = j_min; j <= j_max; ++j)
            part.weights_[static_cast<std::size_t>(j - j_min)][idx] = part.block_symbol(j, kmag);
    });
    return part;
}

namespace {
Field apply_weights(const Field& f, const Grid& grid, const std::vector<double>& w) {
    if (!(f.grid() == grid)) throw std::invalid_argument("dyadic: partition/grid mismatch");
    Field out(grid, f.ncomp());
    for (std::size_t c = 0; c < f.ncomp(); ++c)
        for (std::size_t i = 0; i < f.size(); ++i) out.comp(c)[i] = w[i] * f.comp(c)[i];
    return out;
}
}  // namespace

Field dyadic_block(const Field& f, const DyadicPartition& part, long j) {
    return apply_weights(f, part.grid(), part.block_weights(j));
}

Field partial_sum(const Field& f, const DyadicPartition& part, long j) {
    if (!(f.grid() == part.grid())) throw std::invalid_argument("partial_sum: grid mismatch");
    if (j > part.j_max() + 1) j = part.j_max() + 1;
    Field out(part.grid(), f.ncomp());
    if (j <= part.j_min()) return out;
    const double ku = part.grid().k_unit();
    f.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const double kmag = ku * std::sqrt(static_cast<double>(sx * sx + sy * sy + sz * sz));
        const double w = part.lowpass_symbol(j, kmag);
        if (w == 0.0) return;
        for (std::size_t c = 0; c < f.ncomp(); ++c) out.comp(c)[idx] = w * f.comp(c)[idx];
    });
    return out;
}

Field tilde_block(const Field& f, const DyadicPartition& part, long j) {
    Field out(part.grid(), f.ncomp());
    for (long jj = j - 1; jj <= j + 1; ++jj)
        if (part.in_range(jj)) out += dyadic_block(f, part, jj);
    return out;
}

BonyDecomposition bony_decompose(const Field& f, const Field& g, const DyadicPartition& part) {
    if (!(f.grid() == g.grid()) || !(f.grid() == part.grid()))
        throw std::invalid_argument("bony_decompose: grid mismatch");
    if (f.ncomp() != 1 || g.ncomp() != 1)
        throw std::invalid_argument("bony_decompose: scalar fields required");
    const Grid& grid = part.grid();
    BonyDecomposition out{Field(grid, 1), Field(grid, 1), Field(grid, 1)};
    for (long j = part.j_min(); j <= part.j_max(); ++j) {
        const auto block_f = dyadic_block(f, part, j).to_physical(0);
        const auto block_g = dyadic_block(g, part, j).to_physical(0);
        if (j > part.j_min() + 1) {
            const auto low_f = partial_sum(f, part, j - 1).to_physical(0);
            const auto low_g = partial_sum(g, part, j - 1).to_physical(0);
            out.low_high += product_field(grid, low_f, block_g);
            out.high_low += product_field(grid, low_g, block_f);
        }
        const auto tilde_g = tilde_block(g, part, j).to_physical(0);
        out.remainder += product_field(grid, block_f, tilde_g);
    }
    return out;
}

}  // namespace nscb
