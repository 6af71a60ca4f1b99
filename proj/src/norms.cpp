#include "nscb/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nscb/fft.hpp"
#include "nscb/spectral_ops.hpp"
#include "nscb/util.hpp"

namespace nscb {

double lp_norm(const Field& f, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    if (std::isinf(p)) return f.sup_magnitude(2);
    const auto mag = f.magnitude_physical();
    const double cell = f.grid().cell_volume();
    const double sum = parallel_sum(0, mag.size(), [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += std::pow(mag[i], p);
        return s;
    });
    return std::pow(cell * sum, 1.0 / p);
}

double besov_norm(const Field& f, const BesovParams& bp, const DyadicPartition& part) {
    if (!(f.grid() == part.grid())) throw std::invalid_argument("besov_norm: grid mismatch");
    if (!(bp.p >= 1.0) || !(bp.q >= 1.0))
        throw std::invalid_argument("besov_norm: p, q must be >= 1");
    std::vector<double> summands;
    summands.reserve(part.num_scales());
    for (long j = part.j_min(); j <= part.j_max(); ++j) {
        const double w = lp_norm(dyadic_block(f, part, j), bp.p);
        summands.push_back(w * std::pow(2.0, bp.s * static_cast<double>(j)));
    }
    if (std::isinf(bp.q)) return *std::max_element(summands.begin(), summands.end());
    double acc = 0.0;
    for (double v : summands) acc += std::pow(v, bp.q);
    return std::pow(acc, 1.0 / bp.q);
}

double kato_norm(const Trajectory& traj, double s, double p, double q) {
    if (traj.empty()) throw std::invalid_argument("kato_norm: empty trajectory");
    if (!(s < 0.0)) throw std::invalid_argument("kato_norm: s must be negative");
    std::vector<double> weighted(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.times[i];
        weighted[i] = (t == 0.0 ? 0.0 : std::pow(t, -0.5 * s)) * lp_norm(traj.fields[i], p);
    }
    if (std::isinf(q)) return *std::max_element(weighted.begin(), weighted.end());
    // integrand of the dt/t quadrature; at t = 0 the limit is 0 whenever the
    // exponent -s q / 2 - 1 is positive, otherwise the sample is rejected
    auto integrand = [&](std::size_t i) {
        const double t = traj.times[i];
        if (t == 0.0) {
            if (-0.5 * s * q > 1.0) return 0.0;
            throw std::invalid_argument("kato_norm: divergent integrand at t = 0");
        }
        return std::pow(weighted[i], q) / t;
    };
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < traj.size(); ++i)
        acc += 0.5 * (integrand(i) + integrand(i + 1)) * (traj.times[i + 1] - traj.times[i]);
    return std::pow(acc, 1.0 / q);
}

std::vector<double> heat_flow_times(const Grid& grid) {
    const double h = grid.box_length / static_cast<double>(grid.n);
    const double t_lo = h * h / 64.0;  // below the peak time of the fastest retained block
    const double t_hi = 4.0 / (grid.k_unit() * grid.k_unit());
    std::vector<double> times;
    const double step = std::pow(10.0, 1.0 / 8.0);
    for (double t = t_lo; t < t_hi * step; t *= step) times.push_back(t);
    return times;
}

HeatFlowRatio heat_flow_besov_ratio(const Field& f, const BesovParams& bp,
                                    const DyadicPartition& part) {
    if (!(bp.s < 0.0)) throw std::invalid_argument("heat_flow_besov_ratio: s must be negative");
    Trajectory flow;
    for (double t : heat_flow_times(f.grid())) flow.push(t, heat_semigroup(f, t));
    HeatFlowRatio r;
    r.kato = kato_norm(flow, bp.s, bp.p, bp.q);
    r.besov = besov_norm(f, bp, part);
    r.ratio = r.besov > 0.0 ? r.kato / r.besov : 0.0;
    return r;
}

double weighted_log_functional(const Field& f, double p, double a) {
    if (!(p > 3.0)) throw std::invalid_argument("weighted_log_functional: p must exceed 3");
    if (a < 0.0 || a > 1.0) throw std::invalid_argument("weighted_log_functional: a in [0,1]");
    const Field mag = Field::from_physical(f.grid(), {f.magnitude_physical()});
    const auto eta = riesz_potential(mag, 1.0 - 3.0 / p).to_physical(0);
    const double cell = f.grid().cell_volume();
    return parallel_sum(0, eta.size(), [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            const double m = std::fabs(eta[i]);
            double term = std::pow(m, p);
            if (a > 0.0) term /= std::pow(std::log(M_E + m), a);
            s += term;
        }
        return s;
    }) * cell;
}

namespace {

long gcd3(long a, long b, long c) {
    return std::gcd(std::gcd(std::labs(a), std::labs(b)), std::labs(c));
}

// Primitive lattice vectors sorted by length, one representative per line.
std::vector<std::array<long, 3>> lattice_lines(std::size_t count) {
    std::vector<std::array<long, 3>> lines;
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y)
            for (long z = -3; z <= 3; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (gcd3(x, y, z) != 1) continue;
                // canonical orientation: first nonzero component positive
                if (x < 0 || (x == 0 && (y < 0 || (y == 0 && z < 0)))) continue;
                lines.push_back({x, y, z});
            }
    std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) {
        const long la = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
        const long lb = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
        return la != lb ? la < lb : a < b;
    });
    if (lines.size() > count) lines.resize(count);
    return lines;
}

// periodic Catmull-Rom interpolation, separable in the three axes
void catmull_weights(double a, double w[4]) {
    w[0] = 0.5 * (-a + 2.0 * a * a - a * a * a);
    w[1] = 0.5 * (2.0 - 5.0 * a * a + 3.0 * a * a * a);
    w[2] = 0.5 * (a + 4.0 * a * a - 3.0 * a * a * a);
    w[3] = 0.5 * (-a * a + a * a * a);
}

double tricubic(const std::vector<double>& grid_vals, std::size_t n, double x, double y, double z) {
    auto wrap = [n](double v) {
        double w = std::fmod(v, static_cast<double>(n));
        return w < 0.0 ? w + static_cast<double>(n) : w;
    };
    const double fx = wrap(x), fy = wrap(y), fz = wrap(z);
    const long x0 = static_cast<long>(fx), y0 = static_cast<long>(fy), z0 = static_cast<long>(fz);
    double wx[4], wy[4], wz[4];
    catmull_weights(fx - std::floor(fx), wx);
    catmull_weights(fy - std::floor(fy), wy);
    catmull_weights(fz - std::floor(fz), wz);
    auto idx = [n](long i) {
        const long m = i % static_cast<long>(n);
        return static_cast<std::size_t>(m < 0 ? m + static_cast<long>(n) : m);
    };
    double acc = 0.0;
    for (int dz = -1; dz <= 2; ++dz) {
        const std::size_t kz = idx(z0 + dz);
        double plane = 0.0;
        for (int dy = -1; dy <= 2; ++dy) {
            const std::size_t ky = idx(y0 + dy);
            const double* row = grid_vals.data() + n * (ky + n * kz);
            double line = 0.0;
            for (int dx = -1; dx <= 2; ++dx) line += wx[dx + 1] * row[idx(x0 + dx)];
            plane += wy[dy + 1] * line;
        }
        acc += wz[dz + 1] * plane;
    }
    return acc;
}

}  // namespace

std::vector<std::array<double, 3>> ray_directions(std::size_t n_dirs) {
    if (n_dirs < 6) throw std::invalid_argument("ray_directions: degenerate direction set");
    const auto lines = lattice_lines((n_dirs + 1) / 2);
    std::vector<std::array<double, 3>> dirs;
    for (const auto& v : lines) {
        const double len = std::sqrt(static_cast<double>(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]));
        dirs.push_back({v[0] / len, v[1] / len, v[2] / len});
        if (dirs.size() == n_dirs) break;
        dirs.push_back({-v[0] / len, -v[1] / len, -v[2] / len});
        if (dirs.size() == n_dirs) break;
    }
    return dirs;
}

std::vector<double> ray_functional_per_direction(const Field& f, double p, std::size_t n_dirs) {
    if (!(p > 3.0)) throw std::invalid_argument("ray_functional: p must exceed 3");
    if (n_dirs < 6) throw std::invalid_argument("ray_functional: degenerate direction set");
    const auto lines = lattice_lines((n_dirs + 1) / 2);
    if (lines.size() * 2 < n_dirs)
        throw std::invalid_argument("ray_functional: direction set exhausted");

    const Grid& grid = f.grid();
    const std::size_t pad = 2, npad = grid.n * pad;
    // |f| on the padded grid: exact values of the band-limited components
    std::vector<double> mag(npad * npad * npad, 0.0);
    for (std::size_t c = 0; c < f.ncomp(); ++c) {
        const auto phys = f.to_physical_padded(c, pad);
        for (std::size_t i = 0; i < mag.size(); ++i) mag[i] += phys[i] * phys[i];
    }
    for (double& v : mag) v = std::sqrt(v);

    const double L = grid.box_length;
    const double hpad = L / static_cast<double>(npad);
    const std::size_t samples = 4 * grid.n;
    const double sigma = 1.0 - 1.0 / p;

    std::vector<double> line_values;
    for (const auto& v : lines) {
        const double vlen =
            std::sqrt(static_cast<double>(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]));
        // every ray is sampled over one box width through the center and
        // treated as box-periodic, so directions see a common periodization
        const double period = L;
        const double dlam = period / static_cast<double>(samples);
        const double e[3] = {v[0] / vlen, v[1] / vlen, v[2] / vlen};
        std::vector<cplx> g(samples);
        for (std::size_t i = 0; i < samples; ++i) {
            const double lam = dlam * static_cast<double>(i) - 0.5 * period;
            // box center in padded-grid units
            const double cx = 0.5 * static_cast<double>(npad);
            g[i] = cplx(tricubic(mag, npad, cx + lam * e[0] / hpad, cx + lam * e[1] / hpad,
                                 cx + lam * e[2] / hpad),
                        0.0);
        }
        std::vector<cplx> spec(samples), frac(samples);
        fft::forward1(samples, g.data(), spec.data());
        const double kappa_unit = 2.0 * M_PI / period;
        for (std::size_t m = 0; m < samples; ++m) {
            const long sm = m <= samples / 2 ? static_cast<long>(m)
                                             : static_cast<long>(m) - static_cast<long>(samples);
            spec[m] *= sm == 0 ? 0.0 : std::pow(kappa_unit * std::labs(sm), -sigma);
        }
        fft::backward1(samples, spec.data(), frac.data());
        double acc = 0.0;
        for (std::size_t i = 0; i < samples; ++i) {
            const double lam = dlam * static_cast<double>(i) - 0.5 * period;
            if (lam < -0.5 * L || lam >= 0.5 * L) continue;
            acc += std::pow(std::fabs(frac[i].real()), p);
        }
        line_values.push_back(acc * dlam);
    }

    std::vector<double> out;
    for (std::size_t i = 0; i < n_dirs; ++i) out.push_back(line_values[i / 2]);
    return out;
}

double ray_functional(const Field& f, double p, std::size_t n_dirs) {
    const auto vals = ray_functional_per_direction(f, p, n_dirs);
    return *std::max_element(vals.begin(), vals.end());
}

InterpolationCheck interpolation_check(const Field& w, double p, double r,
                                       const DyadicPartition& part) {
    if (!(r > 2.0) || !(r <= 3.0) || !(p > 3.0))
        throw std::invalid_argument("interpolation_check: need 2 < r <= 3 < p");
    const double denom = p * r + 2.0 * p - 4.0 * r;
    if (!(denom > 0.0)) throw std::logic_error("interpolation_check: degenerate exponents");
    InterpolationCheck out;
    out.exponents = {2.0 * (4.0 * p + r - p * r - 6.0) / denom,
                     6.0 * (p - r) * (r - 2.0) / (r * denom),
                     3.0 * p * (r - 2.0) * (r - 2.0) / (r * denom)};
    out.lhs = lp_norm(w, r);
    Field grad = [&] {
        if (w.ncomp() == 3) return gradient_tensor(w);
        Field g(w.grid(), 3);
        for (std::size_t axis = 0; axis < 3; ++axis) g.comp(axis) = derivative(w, axis).comp(0);
        return g;
    }();
    out.factors = {lp_norm(w, 2.0), lp_norm(grad, 2.0),
                   besov_norm(w, BesovParams{critical_index(p), p, kInfExponent}, part)};
    double prod = 1.0;
    for (std::size_t i = 0; i < 3; ++i) prod *= std::pow(out.factors[i], out.exponents[i]);
    out.constant = prod > 0.0 ? out.lhs / prod : 0.0;
    return out;
}

}  // namespace nscb
