#include "nscb/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nscb/fft.hpp"
#include "nscb/util.hpp"

namespace nscb {

Field::Field(const Grid& grid, std::size_t ncomp) : grid_(grid), ncomp_(ncomp) {
    if (ncomp != 1 && ncomp != 3 && ncomp != 9)
        throw std::invalid_argument("Field: component count must be 1, 3 or 9");
    comps_.assign(ncomp, std::vector<cplx>(grid.size(), cplx(0.0, 0.0)));
}

Field Field::from_physical(const Grid& grid, const std::vector<std::vector<double>>& samples) {
    Field f(grid, samples.size());
    const std::size_t total = grid.size();
    for (const auto& comp : samples)
        if (comp.size() != total)
            throw std::invalid_argument("from_physical: sample count mismatch");
    parallel_for(0, samples.size(), [&](std::size_t lo, std::size_t hi) {
        std::vector<cplx> buf(total);
        for (std::size_t c = lo; c < hi; ++c) {
            for (std::size_t i = 0; i < total; ++i) buf[i] = cplx(samples[c][i], 0.0);
            fft::forward3(grid.n, buf.data(), f.comps_[c].data());
        }
    });
    f.apply_dealias_mask();
    f.hermitian_symmetrize();
    return f;
}

void Field::apply_dealias_mask() {
    const long mmax = grid_.max_index();
    const std::size_t n = grid_.n;
    for (auto& comp : comps_) {
        parallel_for(0, n, [&](std::size_t zlo, std::size_t zhi) {
            for (std::size_t z = zlo; z < zhi; ++z) {
                const bool zout = std::labs(grid_.signed_index(z)) > mmax;
                for (std::size_t y = 0; y < n; ++y) {
                    const bool yout = std::labs(grid_.signed_index(y)) > mmax;
                    cplx* row = comp.data() + n * (y + n * z);
                    if (zout || yout) {
                        std::fill(row, row + n, cplx(0.0, 0.0));
                        continue;
                    }
                    for (std::size_t x = 0; x < n; ++x)
                        if (std::labs(grid_.signed_index(x)) > mmax) row[x] = cplx(0.0, 0.0);
                }
            }
        });
    }
}

void Field::hermitian_symmetrize() {
    const std::size_t n = grid_.n;
    auto neg = [n](std::size_t m) { return m == 0 ? 0 : n - m; };
    for (auto& comp : comps_) {
        for (std::size_t z = 0; z < n; ++z) {
            const std::size_t nz = neg(z);
            for (std::size_t y = 0; y < n; ++y) {
                const std::size_t ny = neg(y);
                for (std::size_t x = 0; x < n; ++x) {
                    const std::size_t nx = neg(x);
                    const std::size_t i = x + n * (y + n * z);
                    const std::size_t j = nx + n * (ny + n * nz);
                    if (j < i) continue;
                    if (i == j) {
                        comp[i] = cplx(comp[i].real(), 0.0);
                    } else {
                        const cplx avg = 0.5 * (comp[i] + std::conj(comp[j]));
                        comp[i] = avg;
                        comp[j] = std::conj(avg);
                    }
                }
            }
        }
    }
}

std::vector<double> Field::to_physical(std::size_t c) const {
    std::vector<cplx> buf(grid_.size());
    fft::backward3(grid_.n, comps_[c].data(), buf.data());
    std::vector<double> out(grid_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf[i].real();
    return out;
}

std::vector<double> Field::to_physical_padded(std::size_t c, std::size_t pad) const {
    if (pad <= 1) return to_physical(c);
    const std::size_t n = grid_.n, N = n * pad;
    std::vector<cplx> big(N * N * N, cplx(0.0, 0.0));
    for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const std::size_t bx = sx >= 0 ? static_cast<std::size_t>(sx) : N - static_cast<std::size_t>(-sx);
        const std::size_t by = sy >= 0 ? static_cast<std::size_t>(sy) : N - static_cast<std::size_t>(-sy);
        const std::size_t bz = sz >= 0 ? static_cast<std::size_t>(sz) : N - static_cast<std::size_t>(-sz);
        big[bx + N * (by + N * bz)] = comps_[c][idx];
    });
    std::vector<cplx> buf(big.size());
    fft::backward3(N, big.data(), buf.data());
    std::vector<double> out(big.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf[i].real();
    return out;
}

std::vector<double> Field::magnitude_physical() const {
    std::vector<double> mag(grid_.size(), 0.0);
    for (std::size_t c = 0; c < ncomp_; ++c) {
        const auto phys = to_physical(c);
        for (std::size_t i = 0; i < mag.size(); ++i) mag[i] += phys[i] * phys[i];
    }
    for (double& v : mag) v = std::sqrt(v);
    return mag;
}

double Field::sup_magnitude(std::size_t pad) const {
    const std::size_t n = grid_.n * (pad > 1 ? pad : 1);
    std::vector<double> mag(n * n * n, 0.0);
    for (std::size_t c = 0; c < ncomp_; ++c) {
        const auto phys = to_physical_padded(c, pad);
        for (std::size_t i = 0; i < mag.size(); ++i) mag[i] += phys[i] * phys[i];
    }
    double m2 = 0.0;
    for (double v : mag) m2 = std::max(m2, v);
    return std::sqrt(m2);
}

double Field::l2_norm() const {
    const double vol = grid_.box_length * grid_.box_length * grid_.box_length;
    double sum = 0.0;
    for (const auto& comp : comps_)
        sum += parallel_sum(0, comp.size(), [&](std::size_t lo, std::size_t hi) {
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += std::norm(comp[i]);
            return s;
        });
    return std::sqrt(vol * sum);
}

bool Field::all_finite() const {
    for (const auto& comp : comps_)
        for (const cplx& v : comp)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double Field::hermitian_defect() const {
    const std::size_t n = grid_.n;
    auto neg = [n](std::size_t m) { return m == 0 ? 0 : n - m; };
    double worst = 0.0;
    for (const auto& comp : comps_) {
        for (std::size_t z = 0; z < n; ++z)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t x = 0; x < n; ++x) {
                    const std::size_t i = x + n * (y + n * z);
                    const std::size_t j = neg(x) + n * (neg(y) + n * neg(z));
                    worst = std::max(worst, std::abs(comp[i] - std::conj(comp[j])));
                }
    }
    return worst;
}

void Field::validate() const {
    if (!all_finite()) throw std::runtime_error("Field: non-finite coefficient");
    const long mmax = grid_.max_index();
    const std::size_t n = grid_.n;
    for (const auto& comp : comps_)
        for (std::size_t z = 0; z < n; ++z)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t x = 0; x < n; ++x) {
                    const bool out = std::labs(grid_.signed_index(x)) > mmax ||
                                     std::labs(grid_.signed_index(y)) > mmax ||
                                     std::labs(grid_.signed_index(z)) > mmax;
                    if (out && comp[x + n * (y + n * z)] != cplx(0.0, 0.0))
                        throw std::runtime_error("Field: coefficient outside dealias band");
                }
    double scale = 0.0;
    for (const auto& comp : comps_)
        for (const cplx& v : comp) scale = std::max(scale, std::abs(v));
    if (hermitian_defect() > 1e-12 * std::max(scale, 1e-300))
        throw std::runtime_error("Field: Hermitian symmetry violated");
}

Field& Field::operator+=(const Field& other) {
    if (!(grid_ == other.grid_) || ncomp_ != other.ncomp_)
        throw std::invalid_argument("Field: shape mismatch");
    for (std::size_t c = 0; c < ncomp_; ++c)
        for (std::size_t i = 0; i < comps_[c].size(); ++i) comps_[c][i] += other.comps_[c][i];
    return *this;
}

Field& Field::operator-=(const Field& other) {
    if (!(grid_ == other.grid_) || ncomp_ != other.ncomp_)
        throw std::invalid_argument("Field: shape mismatch");
    for (std::size_t c = 0; c < ncomp_; ++c)
        for (std::size_t i = 0; i < comps_[c].size(); ++i) comps_[c][i] -= other.comps_[c][i];
    return *this;
}

Field& Field::operator*=(double s) {
    for (auto& comp : comps_)
        for (cplx& v : comp) v *= s;
    return *this;
}

Field product_field(const Grid& grid, const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> prod(grid.size());
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = a[i] * b[i];
    return Field::from_physical(grid, {prod});
}

Field outer_product(const Field& a, const Field& b) {
    if (a.ncomp() != 3 || b.ncomp() != 3)
        throw std::invalid_argument("outer_product: vector fields required");
    const Grid& grid = a.grid();
    std::vector<std::vector<double>> pa(3), pb(3);
    for (std::size_t c = 0; c < 3; ++c) {
        pa[c] = a.to_physical(c);
        pb[c] = b.to_physical(c);
    }
    std::vector<std::vector<double>> t(9, std::vector<double>(grid.size()));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            auto& out = t[3 * i + j];
            for (std::size_t q = 0; q < out.size(); ++q) out[q] = pa[i][q] * pb[j][q];
        }
    return Field::from_physical(grid, t);
}

Field symmetric_tensor_field(const Grid& grid, const std::vector<std::vector<double>>& six) {
    if (six.size() != 6) throw std::invalid_argument("symmetric_tensor_field: six components");
    Field t(grid, 9);
    // unique slots (i, j, packed index): 00, 01, 02, 11, 12, 22
    static constexpr std::size_t dest[6] = {0, 1, 2, 4, 5, 8};
    static constexpr std::size_t mirror[6] = {0, 3, 6, 4, 7, 8};
    const std::size_t total = grid.size();
    for (const auto& comp : six)
        if (comp.size() != total)
            throw std::invalid_argument("symmetric_tensor_field: sample count mismatch");
    parallel_for(0, 6, [&](std::size_t lo, std::size_t hi) {
        std::vector<cplx> buf(total);
        for (std::size_t c = lo; c < hi; ++c) {
            for (std::size_t i = 0; i < total; ++i) buf[i] = cplx(six[c][i], 0.0);
            fft::forward3(grid.n, buf.data(), t.comp(dest[c]).data());
        }
    });
    for (std::size_t c = 0; c < 6; ++c)
        if (mirror[c] != dest[c]) t.comp(mirror[c]) = t.comp(dest[c]);
    t.apply_dealias_mask();
    t.hermitian_symmetrize();
    return t;
}

Field symmetric_outer_product(const Field& a, const Field& b) {
    if (a.ncomp() != 3 || b.ncomp() != 3)
        throw std::invalid_argument("symmetric_outer_product: vector fields required");
    const Grid& grid = a.grid();
    std::vector<std::vector<double>> pa(3), pb(3);
    for (std::size_t c = 0; c < 3; ++c) {
        pa[c] = a.to_physical(c);
        pb[c] = b.to_physical(c);
    }
    std::vector<std::vector<double>> t(9, std::vector<double>(grid.size()));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            auto& out = t[3 * i + j];
            for (std::size_t q = 0; q < out.size(); ++q)
                out[q] = pa[i][q] * pb[j][q] + pb[i][q] * pa[j][q];
        }
    return Field::from_physical(grid, t);
}

}  // namespace nscb
