#include "nscb/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "nscb/norms.hpp"
#include "nscb/rng.hpp"
#include "nscb/spectral_ops.hpp"
#include "nscb/util.hpp"

namespace nscb {

namespace {

Field taylor_green(const Grid& grid, double amplitude) {
    const std::size_t n = grid.n;
    const double kappa = grid.k_unit();
    std::vector<std::vector<double>> comps(3, std::vector<double>(grid.size(), 0.0));
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                const std::size_t idx = x + n * (y + n * z);
                const double px = kappa * grid.box_length * static_cast<double>(x) / n;
                const double py = kappa * grid.box_length * static_cast<double>(y) / n;
                comps[0][idx] = amplitude * std::sin(px) * std::cos(py);
                comps[1][idx] = -amplitude * std::cos(px) * std::sin(py);
            }
    return Field::from_physical(grid, comps);
}

Field single_mode(const Grid& grid, double amplitude) {
    const std::size_t n = grid.n;
    std::vector<std::vector<double>> comps(3, std::vector<double>(grid.size(), 0.0));
    const double kappa = grid.k_unit();
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                const double px = kappa * grid.box_length * static_cast<double>(x) / n;
                comps[1][x + n * (y + n * z)] = amplitude * std::cos(px);
            }
    return Field::from_physical(grid, comps);
}

Field random_besov(const InitialData& cfg, const Grid& grid) {
    CounterRng rng(cfg.seed);
    Field noise(grid, 3);
    noise.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        if (sx == 0 && sy == 0 && sz == 0) return;
        const std::uint64_t base =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(sx + 1024)) << 40) ^
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(sy + 1024)) << 20) ^
            static_cast<std::uint64_t>(static_cast<std::uint32_t>(sz + 1024));
        for (std::size_t c = 0; c < 3; ++c)
            noise.comp(c)[idx] =
                cplx(rng.gaussian(6 * base + 2 * c), rng.gaussian(6 * base + 2 * c + 1));
    });
    noise.hermitian_symmetrize();

    // flatten the critical spectrum: give every resolvable block equal
    // critical weight before projecting
    const DyadicPartition part = build_partition(grid);
    const double s = critical_index(cfg.p);
    Field shaped(grid, 3);
    for (long j = part.j_min(); j <= part.j_max(); ++j) {
        Field block = dyadic_block(noise, part, j);
        const double w = std::pow(2.0, s * static_cast<double>(j)) * lp_norm(block, cfg.p);
        if (w < 1e-14) continue;
        block *= 1.0 / w;
        shaped += block;
    }
    Field u = leray_project(shaped);
    u.apply_dealias_mask();
    const double norm = besov_norm(u, BesovParams{s, cfg.p, kInfExponent}, part);
    if (!(norm > 0.0)) throw std::runtime_error("make_initial_data: zero seed field");
    u *= cfg.target_norm / norm;
    return u;
}

}  // namespace

Field make_initial_data(const InitialData& cfg, const Grid& grid) {
    switch (cfg.kind) {
        case InitialKind::taylor_green:
            return taylor_green(grid, cfg.amplitude);
        case InitialKind::single_mode:
            return single_mode(grid, cfg.amplitude);
        case InitialKind::random_besov:
            return random_besov(cfg, grid);
    }
    throw std::logic_error("make_initial_data: unknown kind");
}

Field ns_nonlinear_term(const Field& u) {
    std::vector<std::vector<double>> phys(3);
    parallel_for(0, 3, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t c = lo; c < hi; ++c) phys[c] = u.to_physical(c);
    });
    std::vector<std::vector<double>> six(6, std::vector<double>(u.size()));
    static constexpr std::size_t pair_i[6] = {0, 0, 0, 1, 1, 2};
    static constexpr std::size_t pair_j[6] = {0, 1, 2, 1, 2, 2};
    for (std::size_t c = 0; c < 6; ++c)
        for (std::size_t q = 0; q < u.size(); ++q)
            six[c][q] = phys[pair_i[c]][q] * phys[pair_j[c]][q];
    Field out = leray_project(tensor_divergence(symmetric_tensor_field(u.grid(), six)));
    out *= -1.0;
    return out;
}

SolveResult integrate(const Field& u0, const SolverConfig& cfg) {
    if (u0.ncomp() != 3) throw std::invalid_argument("integrate: vector field required");
    if (!(cfg.dt > 0.0) || !(cfg.horizon > 0.0))
        throw std::invalid_argument("integrate: dt and horizon must be positive");
    const double kmax = cfg.grid.max_wavenumber();
    if (cfg.dt * kmax * kmax > 10.0)
        throw std::invalid_argument("integrate: dt too large for the retained band");
    if (cfg.scheme != "etd_rk2") throw std::invalid_argument("integrate: unknown scheme");
    if (!(u0.grid() == cfg.grid)) throw std::invalid_argument("integrate: grid mismatch");

    const std::size_t steps = static_cast<std::size_t>(std::llround(cfg.horizon / cfg.dt));
    const double dt = cfg.horizon / static_cast<double>(steps);
    const double ku2 = cfg.grid.k_unit() * cfg.grid.k_unit();

    SolveResult res;
    Field u = u0;
    u.apply_dealias_mask();
    res.trajectory.push(0.0, u);

    for (std::size_t step = 0; step < steps; ++step) {
        const Field nu = ns_nonlinear_term(u);
        Field mid(cfg.grid, 3);
        u.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
            const double z = -ku2 * static_cast<double>(sx * sx + sy * sy + sz * sz) * dt;
            const double e = std::exp(z), p1 = phi1(z);
            for (std::size_t c = 0; c < 3; ++c)
                mid.comp(c)[idx] = e * u.comp(c)[idx] + dt * p1 * nu.comp(c)[idx];
        });
        const Field nmid = ns_nonlinear_term(mid);
        Field next(cfg.grid, 3);
        u.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
            const double z = -ku2 * static_cast<double>(sx * sx + sy * sy + sz * sz) * dt;
            const double p2 = phi2(z);
            for (std::size_t c = 0; c < 3; ++c)
                next.comp(c)[idx] =
                    mid.comp(c)[idx] + dt * p2 * (nmid.comp(c)[idx] - nu.comp(c)[idx]);
        });
        if (!next.all_finite()) {
            res.completed = false;
            res.abort_reason = "non-finite state at step " + std::to_string(step + 1);
            break;
        }
        u = std::move(next);
        res.steps_taken = step + 1;
        if ((step + 1) % cfg.save_every == 0 || step + 1 == steps)
            res.trajectory.push(dt * static_cast<double>(step + 1), u);
    }
    return res;
}

Trajectory vorticity_traj(const Trajectory& traj) {
    Trajectory out;
    for (std::size_t i = 0; i < traj.size(); ++i) out.push(traj.times[i], curl(traj.fields[i]));
    return out;
}

}  // namespace nscb
