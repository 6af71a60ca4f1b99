#include "nscb/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nscb/spectral_ops.hpp"

namespace nscb {

ConstantLadder constant_ladder(double M, double c_p, double d_p) {
    if (!(M >= 2.0)) throw std::invalid_argument("constant_ladder: M must be >= 2");
    if (!(c_p >= 1.0)) throw std::invalid_argument("constant_ladder: c_p must be >= 1");
    if (!(d_p > 1.0)) throw std::invalid_argument("constant_ladder: d_p must exceed 1");
    ConstantLadder lad;
    lad.c_p = c_p;
    lad.d_p = d_p;
    lad.log_m[0] = std::log(M);
    lad.m[0] = M;
    for (std::size_t i = 1; i < 7; ++i) {
        lad.log_m[i] = c_p * lad.log_m[i - 1];
        lad.m[i] = IteratedExp::safe_exp(lad.log_m[i]);
    }
    return lad;
}

RegularityBound regularity_bound(double M, double A, double a, int alpha_order,
                               const ConstantLadder& ladder) {
    if (!(M >= 2.0) || !(A >= 2.0))
        throw std::invalid_argument("regularity_bound: M and A must be >= 2");
    if (a < 0.0 || a > 1.0) throw std::invalid_argument("regularity_bound: a in [0,1]");
    if (alpha_order != 0 && alpha_order != 1)
        throw std::invalid_argument("regularity_bound: alpha order 0 or 1");
    const double mcp = IteratedExp::safe_exp(ladder.c_p * std::log(M));
    const double alog = alpha_order * std::log(2.0);
    RegularityBound out;
    if (a < 1.0) {
        const double inv = 1.0 / (1.0 - a);
        // ln ln bound = |alpha| ln 2 + ln(A)/(1-a) + exp(M^{c_p})/(1-a)
        const double l2 = alog + inv * std::log(A) + inv * IteratedExp::safe_exp(mcp);
        const double l3_hint = mcp + std::log(inv);  // dominant term when l2 overflows
        out.bound = IteratedExp::from_log2(l2, l3_hint);
    } else {
        // ln ln bound = |alpha| ln 2 + exp(A exp(exp(M^{c_p})))
        const double inner = std::log(A) + IteratedExp::safe_exp(mcp);  // ln(A exp(exp(M^cp)))
        const double l2 = alog + IteratedExp::safe_exp(IteratedExp::safe_exp(inner));
        out.bound = IteratedExp::from_log2(l2, IteratedExp::safe_exp(inner));
    }
    return out;
}

BlowupRateQuantity blowup_rate_quantity(double M, double A, double t, double t_star, double b) {
    if (!(t < t_star)) throw std::invalid_argument("blowup_rate_quantity: t must precede t_star");
    if (!(b > 0.0)) throw std::invalid_argument("blowup_rate_quantity: b must be positive");
    BlowupRateQuantity out;
    if (A <= 0.0) {
        out.value = 0.0;
        out.log_value = -std::numeric_limits<double>::infinity();
        return out;
    }
    const double denom = std::fabs(std::log(t_star - t));
    out.log_value = IteratedExp::safe_exp(M) + std::log(A) - b * std::log(denom);
    out.value = IteratedExp::safe_exp(out.log_value);
    return out;
}

std::vector<ConcentrationEvent> concentration_scan(const Trajectory& traj,
                                                   const ConstantLadder& ladder,
                                                   const DyadicPartition& part) {
    std::vector<ConcentrationEvent> events;
    if (traj.empty()) return events;
    const Grid& grid = traj.grid();
    const std::size_t pad = 2, npad = grid.n * pad;
    const double hpad = grid.box_length / static_cast<double>(npad);
    const double inv_m1 = std::exp(-ladder.log_m[1]);

    for (std::size_t i = 0; i < traj.size(); ++i) {
        for (long j = part.j_min(); j <= part.j_max(); ++j) {
            const Field block = dyadic_block(traj.fields[i], part, j);
            const double threshold = inv_m1 * std::ldexp(1.0, static_cast<int>(j));
            std::vector<double> mag(npad * npad * npad, 0.0);
            for (std::size_t c = 0; c < block.ncomp(); ++c) {
                const auto phys = block.to_physical_padded(c, pad);
                for (std::size_t q = 0; q < mag.size(); ++q) mag[q] += phys[q] * phys[q];
            }
            const double thr2 = threshold * threshold;
            for (std::size_t q = 0; q < mag.size(); ++q) {
                if (mag[q] < thr2) continue;
                const std::size_t x = q % npad, y = (q / npad) % npad, z = q / (npad * npad);
                events.push_back({traj.times[i],
                                  {hpad * static_cast<double>(x), hpad * static_cast<double>(y),
                                   hpad * static_cast<double>(z)},
                                  j,
                                  std::sqrt(mag[q]),
                                  threshold});
            }
        }
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const ConcentrationEvent& a, const ConcentrationEvent& b) {
                         if (a.j != b.j) return a.j > b.j;
                         return a.t < b.t;
                     });
    return events;
}

namespace {
double torus_distance(const std::array<double, 3>& a, const std::array<double, 3>& b, double L) {
    double acc = 0.0;
    for (std::size_t c = 0; c < 3; ++c) {
        double d = std::fabs(a[c] - b[c]);
        d = std::fmod(d, L);
        d = std::min(d, L - d);
        acc += d * d;
    }
    return std::sqrt(acc);
}
}  // namespace

std::optional<std::size_t> find_antecedent(const std::vector<ConcentrationEvent>& events,
                                           const ConcentrationEvent& ev,
                                           const ConstantLadder& ladder, double box_length) {
    const double two_mj = std::ldexp(1.0, static_cast<int>(-ev.j));
    const double dt_lo = two_mj * two_mj / ladder.m[3];
    const double dt_hi = two_mj * two_mj * ladder.m[3];
    const double dx_max = ladder.m[4] * two_mj;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto& c = events[i];
        const double dt = ev.t - c.t;
        if (dt < dt_lo || dt > dt_hi) continue;
        const double scale = std::ldexp(1.0, static_cast<int>(c.j - ev.j));
        if (scale < 1.0 / ladder.m[2] || scale > ladder.m[2]) continue;
        if (torus_distance(ev.x, c.x, box_length) > dx_max) continue;
        return i;
    }
    return std::nullopt;
}

TotalSpeed total_speed(const Trajectory& traj, double t_lo, double t_hi,
                       const ConstantLadder& ladder) {
    std::vector<double> ts, sups;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (traj.times[i] < t_lo - 1e-14 || traj.times[i] > t_hi + 1e-14) continue;
        ts.push_back(traj.times[i]);
        sups.push_back(traj.fields[i].sup_magnitude(2));
    }
    if (ts.size() < 2) throw std::invalid_argument("total_speed: empty window");
    TotalSpeed out;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
        out.integral += 0.5 * (sups[i] + sups[i + 1]) * (ts[i + 1] - ts[i]);
    const double denom = ladder.m[1] * std::sqrt(t_hi - t_lo);
    out.ratio = denom > 0.0 ? out.integral / denom : 0.0;
    return out;
}

EpochScan epoch_scan(const Trajectory& traj, double t_lo, double t_hi, std::size_t n_sub) {
    if (n_sub < 4) throw std::invalid_argument("epoch_scan: need at least 4 subintervals");
    const double span = t_hi - t_lo;
    if (!(span > 0.0)) throw std::invalid_argument("epoch_scan: window too small");

    struct SubSup {
        double u0 = 0.0, u1 = 0.0, w0 = 0.0, w1 = 0.0;
        bool populated = false;
    };
    std::vector<SubSup> subs(n_sub);
    std::size_t populated = 0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.times[i];
        if (t < t_lo - 1e-14 || t > t_hi + 1e-14) continue;
        std::size_t s = static_cast<std::size_t>((t - t_lo) / span * static_cast<double>(n_sub));
        if (s >= n_sub) s = n_sub - 1;
        const Field& u = traj.fields[i];
        const Field omega = curl(u);
        if (!subs[s].populated) ++populated;
        subs[s].u0 = std::max(subs[s].u0, u.sup_magnitude(2));
        subs[s].u1 = std::max(subs[s].u1, gradient_tensor(u).sup_magnitude(2));
        subs[s].w0 = std::max(subs[s].w0, omega.sup_magnitude(2));
        subs[s].w1 = std::max(subs[s].w1, gradient_tensor(omega).sup_magnitude(2));
        subs[s].populated = true;
    }
    if (populated == 0) throw std::invalid_argument("epoch_scan: window too small");

    EpochScan best;
    double best_score = std::numeric_limits<double>::infinity();
    const double s1 = std::sqrt(span), s2 = span, s3 = span * s1;
    for (std::size_t s = 0; s < n_sub; ++s) {
        if (!subs[s].populated) continue;
        const double score = std::max(s1 * subs[s].u0, s2 * subs[s].u1);
        if (score < best_score) {
            best_score = score;
            best.best_index = s;
            best.sub_lo = t_lo + span * static_cast<double>(s) / static_cast<double>(n_sub);
            best.sub_hi = t_lo + span * static_cast<double>(s + 1) / static_cast<double>(n_sub);
            best.scaled_u = {s1 * subs[s].u0, s2 * subs[s].u1};
            best.scaled_omega = {s2 * subs[s].w0, s3 * subs[s].w1};
        }
    }
    return best;
}

namespace {
// sup of the pointwise magnitude over padded-grid points inside the shell
double shell_sup(const Field& f, const std::array<double, 3>& x0, double r_in, double r_out,
                 std::size_t pad, bool& nonempty) {
    const Grid& grid = f.grid();
    const std::size_t npad = grid.n * pad;
    const double hpad = grid.box_length / static_cast<double>(npad);
    std::vector<double> mag(npad * npad * npad, 0.0);
    for (std::size_t c = 0; c < f.ncomp(); ++c) {
        const auto phys = f.to_physical_padded(c, pad);
        for (std::size_t q = 0; q < mag.size(); ++q) mag[q] += phys[q] * phys[q];
    }
    double sup2 = 0.0;
    nonempty = false;
    for (std::size_t q = 0; q < mag.size(); ++q) {
        const std::size_t x = q % npad, y = (q / npad) % npad, z = q / (npad * npad);
        const std::array<double, 3> pt{hpad * static_cast<double>(x),
                                       hpad * static_cast<double>(y),
                                       hpad * static_cast<double>(z)};
        const double d = torus_distance(pt, x0, grid.box_length);
        if (d < r_in || d > r_out) continue;
        nonempty = true;
        sup2 = std::max(sup2, mag[q]);
    }
    return std::sqrt(sup2);
}
}  // namespace

AnnulusScan annuli_scan(const Field& u, const Field& grad_u, const Field& omega,
                        const std::array<double, 3>& x0, double r0, double t_prime,
                        const ConstantLadder& ladder) {
    const Grid& grid = u.grid();
    if (!(r0 > 0.0) || r0 >= grid.box_length / 4.0)
        throw std::invalid_argument("annuli_scan: need 0 < R0 < box/4");
    if (!(t_prime > 0.0)) throw std::invalid_argument("annuli_scan: T' must be positive");

    const double max_dist = 0.5 * std::sqrt(3.0) * grid.box_length;
    const double m6 = ladder.m[6];
    const double r_cap =
        r0 * IteratedExp::safe_exp(IteratedExp::safe_exp(ladder.c_p * ladder.log_m[6]));

    const Field grad_omega = gradient_tensor(omega);
    AnnulusScan best;
    best.degenerate = true;
    double best_score = std::numeric_limits<double>::infinity();
    const double su1 = std::sqrt(t_prime), su2 = t_prime;
    const double sw1 = t_prime, sw2 = t_prime * std::sqrt(t_prime);

    for (double r = r0; r <= std::min(r_cap, max_dist); r *= std::pow(2.0, 0.25)) {
        const double outer = std::min(std::isfinite(m6) ? m6 * r : max_dist, max_dist);
        if (outer <= r) break;
        bool ne = false;
        const double u0s = shell_sup(u, x0, r, outer, 2, ne);
        if (!ne) continue;
        const double u1s = shell_sup(grad_u, x0, r, outer, 2, ne);
        const double score = std::max(su1 * u0s, su2 * u1s);
        if (score < best_score) {
            best_score = score;
            best.degenerate = false;
            best.inner = r;
            best.outer = outer;
            best.scaled_u = {su1 * u0s, su2 * u1s};
            best.scaled_omega = {sw1 * shell_sup(omega, x0, r, outer, 2, ne),
                                 sw2 * shell_sup(grad_omega, x0, r, outer, 2, ne)};
        }
    }
    return best;
}

FrequencyCutoffCheck frequency_cutoff_check(double T, long j0, double A, double a,
                              const ConstantLadder& ladder) {
    if (a < 0.0 || a > 1.0) throw std::invalid_argument("frequency_cutoff_check: a in [0,1]");
    if (!(T > 0.0)) throw std::invalid_argument("frequency_cutoff_check: T must be positive");
    FrequencyCutoffCheck out;
    out.log_lhs = std::log(T) + 2.0 * static_cast<double>(j0) * std::log(2.0);
    out.lhs = IteratedExp::safe_exp(out.log_lhs);
    const double m6cp = IteratedExp::safe_exp(ladder.c_p * ladder.log_m[6]);
    if (a < 1.0) {
        const double inv = 1.0 / (1.0 - a);
        const double l2 = inv * std::log(A) + inv * IteratedExp::safe_exp(m6cp);
        out.rhs = IteratedExp::from_log2(l2, m6cp + std::log(inv));
    } else {
        const double inner = std::log(A) + IteratedExp::safe_exp(m6cp);
        const double l2 = IteratedExp::safe_exp(IteratedExp::safe_exp(inner));
        out.rhs = IteratedExp::from_log2(l2, IteratedExp::safe_exp(inner));
    }
    out.satisfied = out.rhs.bounds_log(out.log_lhs);
    return out;
}

MonitorReport monitor(const Trajectory& traj, double p, double a, const ConstantLadder& ladder,
                      const MonitorOptions& opts) {
    if (traj.empty()) throw std::invalid_argument("monitor: empty trajectory");
    MonitorReport rep;
    rep.p = p;
    rep.a = a;
    rep.ladder = ladder;
    const DyadicPartition part = build_partition(traj.grid());
    const BesovParams critical{critical_index(p), p, kInfExponent};
    const double t_star = opts.t_star > 0.0 ? opts.t_star : 1.25 * std::max(traj.times.back(), 1e-12);

    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.times[i];
        const Field& u = traj.fields[i];
        rep.times.push_back(t);
        const double M_t = besov_norm(u, critical, part);
        rep.besov_m.push_back(M_t);
        const Field mag = Field::from_physical(u.grid(), {u.magnitude_physical()});
        const double A_t = lp_norm(riesz_potential(mag, 1.0 - 3.0 / p), p);
        rep.a_plain.push_back(A_t);
        rep.a_log.push_back(weighted_log_functional(u, p, a));
        rep.lhs0.push_back(std::sqrt(t) * u.sup_magnitude(2));
        rep.lhs1.push_back(t * gradient_tensor(u).sup_magnitude(2));
        rep.blowup_quantity.push_back(blowup_rate_quantity(M_t, A_t, t, t_star, opts.b).value);

        for (long j = part.j_min(); j <= part.j_max(); ++j) {
            const double sup = dyadic_block(u, part, j).sup_magnitude(2);
            rep.pointwise_dyadic_sup =
                std::max(rep.pointwise_dyadic_sup, std::ldexp(sup, static_cast<int>(-j)));
        }
    }
    rep.sup_m = *std::max_element(rep.besov_m.begin(), rep.besov_m.end());
    rep.sup_a_plain = *std::max_element(rep.a_plain.begin(), rep.a_plain.end());
    rep.sup_a_log = *std::max_element(rep.a_log.begin(), rep.a_log.end());

    // the hypothesis constants feed the bound clamped to their domain
    const double M_hyp = std::max(rep.sup_m, 2.0);
    const double A_hyp = std::max(rep.sup_a_log, 2.0);
    rep.rhs0 = regularity_bound(M_hyp, A_hyp, a, 0, ladder);
    rep.rhs1 = regularity_bound(M_hyp, A_hyp, a, 1, ladder);
    for (std::size_t i = 0; i < rep.times.size(); ++i) {
        if (!rep.rhs0.bound.bounds(rep.lhs0[i]) || !rep.rhs1.bound.bounds(rep.lhs1[i]))
            rep.lhs_bounded = false;
    }

    if (opts.run_scans && traj.size() >= 2) {
        rep.events = concentration_scan(traj, ladder, part);
        rep.speed = total_speed(traj, traj.times.front(), traj.times.back(), ladder);
        rep.epochs = epoch_scan(traj, traj.times.front(), traj.times.back(),
                                std::max<std::size_t>(4, std::min(opts.epoch_subdivisions,
                                                                  traj.size())));
        const std::size_t last = traj.size() - 1;
        const Field& u_last = traj.fields[last];
        rep.annuli = annuli_scan(u_last, gradient_tensor(u_last), curl(u_last),
                                 {0.5 * traj.grid().box_length, 0.5 * traj.grid().box_length,
                                  0.5 * traj.grid().box_length},
                                 traj.grid().box_length / 16.0,
                                 std::max(traj.times.back() / 2.0, 1e-6), ladder);
    }
    return rep;
}

OseenDecay oseen_kernel_decay(const Grid& grid, double t, double r_lo, double r_hi) {
    const std::size_t n = grid.n;
    // band-limited delta in the (0,0) tensor slot at the box center
    std::vector<std::vector<double>> comps(9, std::vector<double>(grid.size(), 0.0));
    const std::size_t center = (n / 2) + n * ((n / 2) + n * (n / 2));
    comps[0][center] = 1.0 / grid.cell_volume();
    const Field delta_tensor = Field::from_physical(grid, comps);
    const Field kernel = heat_semigroup(leray_project(tensor_divergence(delta_tensor)), t);

    const auto mag = kernel.magnitude_physical();
    const double h = grid.box_length / static_cast<double>(n);
    const double c0 = 0.5 * grid.box_length;

    // shell averages, one bin per grid spacing
    const std::size_t nbins = n;
    std::vector<double> sum(nbins, 0.0);
    std::vector<std::size_t> count(nbins, 0);
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                const double dx = h * static_cast<double>(x) - c0;
                const double dy = h * static_cast<double>(y) - c0;
                const double dz = h * static_cast<double>(z) - c0;
                const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
                const std::size_t bin = static_cast<std::size_t>(r / h);
                if (bin >= nbins) continue;
                sum[bin] += mag[x + n * (y + n * z)];
                count[bin] += 1;
            }

    OseenDecay out;
    std::vector<double> lx, ly, lxs;
    for (std::size_t b = 0; b < nbins; ++b) {
        if (count[b] == 0) continue;
        const double r = (static_cast<double>(b) + 0.5) * h;
        if (r < r_lo || r > r_hi) continue;
        const double mean = sum[b] / static_cast<double>(count[b]);
        if (mean <= 0.0) continue;
        out.radii.push_back(r);
        out.shell_mean.push_back(mean);
        lx.push_back(std::log(r));
        lxs.push_back(std::log(std::sqrt(t) + r));
        ly.push_back(std::log(mean));
    }
    if (lx.size() < 3) throw std::runtime_error("oseen_kernel_decay: too few shells in window");

    auto slope = [](const std::vector<double>& xs, const std::vector<double>& ys) {
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= xs.size();
        my /= ys.size();
        double sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        return sxy / sxx;
    };
    out.exponent = slope(lx, ly);
    out.exponent_shifted = slope(lxs, ly);
    return out;
}

}  // namespace nscb
