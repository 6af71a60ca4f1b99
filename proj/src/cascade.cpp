#include "nscb/cascade.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "nscb/spectral_ops.hpp"
#include "nscb/util.hpp"

namespace nscb {

std::size_t cascade_layer_count(double p) {
    if (!(p > 3.0)) throw std::invalid_argument("cascade: p must exceed 3");
    return static_cast<std::size_t>(std::floor(p)) + 3;
}

Field CascadeState::v1_at(std::size_t i) const {
    Field out = layers.at(0).fields.at(i);
    for (std::size_t k = 1; k < m; ++k) out += layers[k].fields[i];
    return out;
}

Field CascadeState::v2_at(std::size_t i) const {
    Field out = layers.at(0).fields.at(i);
    for (std::size_t k = 1; k + 1 < m; ++k) out += layers[k].fields[i];
    return out;
}

Field CascadeState::v3_at(std::size_t i) const { return layers.at(m - 1).fields.at(i); }

namespace {

// One step of the exponentially weighted trapezoid: the forcing is taken
// piecewise linear in s and the heat factor integrated exactly, so
// I(b) = E I(a) + dt [ (phi1(-z) - phi2(-z)) G(a) + phi2(-z) G(b) ]
// with z = |k|^2 dt. Exact for forcing constant or linear in time.
void duhamel_step(Field& acc, const Field& g_a, const Field& g_b, double dt) {
    const double ku2 = acc.grid().k_unit() * acc.grid().k_unit();
    acc.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const double z = ku2 * static_cast<double>(sx * sx + sy * sy + sz * sz) * dt;
        const double e = std::exp(-z);
        const double w_b = phi2(-z);
        const double w_a = phi1(-z) - w_b;
        for (std::size_t c = 0; c < acc.ncomp(); ++c)
            acc.comp(c)[idx] = e * acc.comp(c)[idx] +
                               dt * (w_a * g_a.comp(c)[idx] + w_b * g_b.comp(c)[idx]);
    });
}

Field projected_divergence(const Field& tensor) {
    Field g = leray_project(tensor_divergence(tensor));
    g *= -1.0;
    return g;
}

// Sweep the Duhamel recursion over sample times, emitting I(t_i) for each i.
// make_g(i) returns -P div F(t_i); emit(i, field) receives the integral.
void duhamel_sweep(const std::vector<double>& times, const Grid& grid,
                   const std::function<Field(std::size_t)>& make_g,
                   const std::function<void(std::size_t, const Field&)>& emit) {
    Field acc(grid, 3);
    emit(0, acc);
    if (times.size() < 2) return;
    Field g_prev = make_g(0);
    for (std::size_t i = 1; i < times.size(); ++i) {
        Field g_next = make_g(i);
        duhamel_step(acc, g_prev, g_next, times[i] - times[i - 1]);
        emit(i, acc);
        g_prev = std::move(g_next);
    }
}

}  // namespace

Field duhamel_integral(const Trajectory& forcing, double t) {
    if (forcing.empty()) throw std::invalid_argument("duhamel_integral: empty forcing");
    if (forcing.fields.front().ncomp() != 9)
        throw std::invalid_argument("duhamel_integral: tensor trajectory required");
    const auto& times = forcing.times;
    if (t < times.front() - 1e-14 || t > times.back() + 1e-14)
        throw std::invalid_argument("duhamel_integral: t outside trajectory span");

    const Grid& grid = forcing.grid();
    Field acc(grid, 3);
    Field g_prev = projected_divergence(forcing.fields.front());
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (times[i] <= t + 1e-14) {
            Field g_next = projected_divergence(forcing.fields[i]);
            duhamel_step(acc, g_prev, g_next, times[i] - times[i - 1]);
            g_prev = std::move(g_next);
            if (std::fabs(times[i] - t) <= 1e-14) return acc;
        } else {
            // partial last interval: interpolate the forcing linearly at t
            const double theta = (t - times[i - 1]) / (times[i] - times[i - 1]);
            Field f_t = forcing.fields[i - 1];
            f_t *= (1.0 - theta);
            Field f_hi = forcing.fields[i];
            f_hi *= theta;
            f_t += f_hi;
            Field g_t = projected_divergence(f_t);
            duhamel_step(acc, g_prev, g_t, t - times[i - 1]);
            return acc;
        }
    }
    return acc;
}

CascadeState compute_cascade(const Field& u0, double p, double horizon, double dt) {
    if (u0.ncomp() != 3) throw std::invalid_argument("compute_cascade: vector field required");
    if (!(horizon > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("compute_cascade: horizon and dt must be positive");
    const Grid& grid = u0.grid();
    const double kmax = grid.max_wavenumber();
    if (dt * kmax * kmax > 1.0 + 1e-12)
        throw std::invalid_argument("compute_cascade: dt must resolve the stiffest retained mode");
    const double scale = std::max(u0.l2_norm(), 1e-300);
    if (spectral_divergence_sup(u0) > 1e-10 * scale)
        throw std::invalid_argument("compute_cascade: initial data not solenoidal");
    for (std::size_t c = 0; c < 3; ++c)
        if (std::abs(u0.comp(c)[0]) > 1e-12 * scale)
            throw std::invalid_argument("compute_cascade: initial data must be zero-mean");

    CascadeState state;
    state.p = p;
    state.m = cascade_layer_count(p);

    const std::size_t steps = static_cast<std::size_t>(std::llround(horizon / dt));
    std::vector<double> times(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i)
        times[i] = horizon * static_cast<double>(i) / static_cast<double>(steps);

    Trajectory first;
    for (double t : times) first.push(t, heat_semigroup(u0, t));
    state.layers.push_back(std::move(first));

    const std::size_t total = grid.size();
    for (std::size_t k = 1; k < state.m; ++k) {
        // forcing of layer k+1: u_kL (x) u_kL + sum_{i<k} sym(u_iL, u_kL),
        // assembled as one symmetric tensor per sample
        auto make_g = [&](std::size_t i) {
            std::vector<std::vector<double>> phys(3 * k);
            parallel_for(0, 3 * k, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t c = lo; c < hi; ++c)
                    phys[c] = state.layers[c / 3].fields[i].to_physical(c % 3);
            });
            const std::size_t base = 3 * (k - 1);  // components of u_kL
            static constexpr std::size_t pair_i[6] = {0, 0, 0, 1, 1, 2};
            static constexpr std::size_t pair_j[6] = {0, 1, 2, 1, 2, 2};
            std::vector<std::vector<double>> six(6, std::vector<double>(total));
            for (std::size_t c = 0; c < 6; ++c) {
                const auto& ka = phys[base + pair_i[c]];
                const auto& kb = phys[base + pair_j[c]];
                auto& out = six[c];
                for (std::size_t q = 0; q < total; ++q) out[q] = ka[q] * kb[q];
                for (std::size_t lo = 0; lo + 1 < k; ++lo) {
                    const auto& ia = phys[3 * lo + pair_i[c]];
                    const auto& ib = phys[3 * lo + pair_j[c]];
                    for (std::size_t q = 0; q < total; ++q)
                        out[q] += ia[q] * kb[q] + ka[q] * ib[q];
                }
            }
            return projected_divergence(symmetric_tensor_field(grid, six));
        };
        Trajectory next;
        duhamel_sweep(times, grid, make_g, [&](std::size_t i, const Field& f) {
            next.push(times[i], f);
        });
        state.layers.push_back(std::move(next));
    }
    return state;
}

RemainderResult remainder_residual(const Trajectory& u_traj, const CascadeState& state) {
    if (u_traj.empty()) throw std::invalid_argument("remainder_residual: empty trajectory");
    const auto times = state.times();
    if (u_traj.times.size() != times.size())
        throw std::invalid_argument("remainder_residual: sample count mismatch");
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::fabs(u_traj.times[i] - times[i]) > 1e-12 * std::max(1.0, std::fabs(times[i])))
            throw std::invalid_argument("remainder_residual: sample times mismatch");
    const Grid& grid = u_traj.grid();

    RemainderResult out;
    for (std::size_t i = 0; i < times.size(); ++i) {
        Field v = u_traj.fields[i];
        v -= state.v1_at(i);
        out.v.push(times[i], std::move(v));
    }
    out.residual.norm_kind = "remainder_residual";
    out.residual.p = state.p;

    if (times.size() < 3) return out;

    auto laplacian = [&](const Field& f) {
        Field g(grid, 3);
        const double ku2 = grid.k_unit() * grid.k_unit();
        f.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
            const double k2 = ku2 * static_cast<double>(sx * sx + sy * sy + sz * sz);
            for (std::size_t c = 0; c < 3; ++c) g.comp(c)[idx] = -k2 * f.comp(c)[idx];
        });
        return g;
    };

    for (std::size_t i = 1; i + 1 < times.size(); ++i) {
        const double span = times[i + 1] - times[i - 1];
        Field dv = out.v.fields[i + 1];
        dv -= out.v.fields[i - 1];
        dv *= 1.0 / span;

        const Field& v = out.v.fields[i];
        const Field v1 = state.v1_at(i);
        const Field v2 = state.v2_at(i);
        const Field v3 = state.v3_at(i);
        Field tensor = outer_product(v, v);
        tensor += symmetric_outer_product(v1, v);
        tensor += outer_product(v3, v1);
        tensor += outer_product(v2, v3);
        Field nonlinear = leray_project(tensor_divergence(tensor));

        Field r = dv;
        r -= laplacian(v);
        r += nonlinear;

        // driving-equation scale of u at the same instant
        Field du = u_traj.fields[i + 1];
        du -= u_traj.fields[i - 1];
        du *= 1.0 / span;
        const Field& u = u_traj.fields[i];
        Field nlu = leray_project(tensor_divergence(outer_product(u, u)));
        const double denom = du.l2_norm() + laplacian(u).l2_norm() + nlu.l2_norm();

        const double rel = denom > 0.0 ? r.l2_norm() / denom : 0.0;
        out.residual.times.push_back(times[i]);
        out.residual.values.push_back(rel);
        out.max_relative = std::max(out.max_relative, rel);
    }
    return out;
}

namespace {
struct LineFit {
    double slope = 0.0, intercept = 0.0, r2 = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
    return f;
}
}  // namespace

DecayFit fit_block_decay(const Trajectory& traj, std::size_t k, double r,
                         const DyadicPartition& part, bool layer_starts_at_zero) {
    if (traj.size() < 4) throw std::invalid_argument("fit_block_decay: too few samples");
    DecayFit fit;
    fit.k = k;
    fit.r = r;
    const double t_end = traj.times.back();
    const double t_lo = t_end / 8.0;

    // block norms over time, computed once
    const std::size_t nt = traj.size();
    const std::size_t nj = part.num_scales();
    std::vector<std::vector<double>> norms(nj, std::vector<double>(nt));
    for (std::size_t i = 0; i < nt; ++i)
        for (long j = part.j_min(); j <= part.j_max(); ++j)
            norms[static_cast<std::size_t>(j - part.j_min())][i] =
                lp_norm(dyadic_block(traj.fields[i], part, j), r);

    fit.t_star = layer_starts_at_zero ? (nt > 1 ? traj.times[1] : traj.times[0]) : traj.times[0];
    const std::size_t i_star = layer_starts_at_zero && nt > 1 ? 1 : 0;

    std::vector<double> sx, sy;
    for (long j = part.j_min(); j <= part.j_max(); ++j) {
        const auto& series = norms[static_cast<std::size_t>(j - part.j_min())];
        std::vector<double> ts, ys;
        for (std::size_t i = 0; i < nt; ++i) {
            if (traj.times[i] < t_lo) continue;
            if (series[i] <= 1e-12) continue;
            ts.push_back(traj.times[i]);
            ys.push_back(std::log(series[i]));
        }
        if (ts.size() < 3) continue;
        const LineFit lf = least_squares(ts, ys);
        fit.j.push_back(j);
        fit.c_fit.push_back(-lf.slope);
        fit.r2.push_back(lf.r2);
        fit.count.push_back(ts.size());
        if (series[i_star] > 1e-12) {
            sx.push_back(static_cast<double>(j) * std::log(2.0));
            sy.push_back(std::log(series[i_star]));
        }
    }
    if (fit.j.empty()) throw std::runtime_error("fit_block_decay: insufficient signal");
    if (sx.size() >= 2) {
        const LineFit sf = least_squares(sx, sy);
        fit.spatial_slope = sf.slope;
        fit.spatial_r2 = sf.r2;
    }
    return fit;
}

DecayFit fit_dyadic_decay(const CascadeState& state, std::size_t k, double r,
                          const DyadicPartition& part) {
    if (k < 1 || k > state.m) throw std::invalid_argument("fit_dyadic_decay: layer out of range");
    const double r_min = std::max(3.0, state.p / static_cast<double>(k));
    if (r < r_min - 1e-12)
        throw std::invalid_argument("fit_dyadic_decay: r below max{3, p/k}");
    return fit_block_decay(state.layer(k), k, r, part, k >= 2);
}

SmoothingNormReport smoothing_norm(const Trajectory& v_traj, const DyadicPartition& part) {
    SmoothingNormReport out;
    for (std::size_t i = 0; i < v_traj.size(); ++i) {
        double b0 = 0.0, b2 = 0.0;
        for (long j = part.j_min(); j <= part.j_max(); ++j) {
            const double l1 = lp_norm(dyadic_block(v_traj.fields[i], part, j), 1.0);
            b0 = std::max(b0, l1);
            b2 = std::max(b2, std::pow(4.0, static_cast<double>(j)) * l1);
        }
        const double t = v_traj.times[i];
        const double w0 = t > 0.0 ? b0 / t : 0.0;
        out.times.push_back(t);
        out.weighted_b0.push_back(w0);
        out.b2.push_back(b2);
        out.sup = std::max(out.sup, w0 + b2);
    }
    return out;
}

double layer_kato_sup(const Trajectory& traj, double q) {
    double sup = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.times[i];
        if (t <= 0.0) continue;
        sup = std::max(sup, std::pow(t, 0.5 * (1.0 - 3.0 / q)) * lp_norm(traj.fields[i], q));
    }
    return sup;
}

}  // namespace nscb
