#pragma once

#include <vector>

#include "nscb/dyadic.hpp"
#include "nscb/norms.hpp"
#include "nscb/trajectory.hpp"

namespace nscb {

// Iterative linear decomposition u = u_1L + ... + u_mL + v with m = [p] + 3.
// Layer 1 is the free heat flow of u0; layer k+1 solves a projected heat
// system forced by -div(u_kL (x) u_kL + sum_{i<k} (u_iL (x) u_kL +
// u_kL (x) u_iL)). All layers share the driving sample times.
struct CascadeState {
    double p = 4.0;
    std::size_t m = 7;
    std::vector<Trajectory> layers;  // layers[k-1] = u_kL

    const Trajectory& layer(std::size_t k) const { return layers.at(k - 1); }
    std::vector<double> times() const { return layers.at(0).times; }

    // Aggregates, recomputed on demand.
    Field v1_at(std::size_t i) const;  // sum of all layers
    Field v2_at(std::size_t i) const;  // sum of layers 1..m-1
    Field v3_at(std::size_t i) const;  // layer m
};

std::size_t cascade_layer_count(double p);

// -int_0^t e^{(t-s) Laplacian} P div F(s) ds for a 9-component tensor
// trajectory F: per-mode exact heat factor, forcing taken piecewise linear
// in s (exponentially weighted trapezoid, order 2, exact for constant F).
Field duhamel_integral(const Trajectory& forcing, double t);

CascadeState compute_cascade(const Field& u0, double p, double horizon, double dt);

struct RemainderResult {
    Trajectory v;
    NormReport residual;       // per interior time: relative PDE residual
    double max_relative = 0.0;
};

// v := u - sum_k u_kL, plus the discrete residual of the equation v solves,
// evaluated with centered time differences at interior samples and
// normalized by the driving equation's term magnitudes.
RemainderResult remainder_residual(const Trajectory& u_traj, const CascadeState& state);

struct DecayFit {
    std::size_t k = 0;
    double r = 3.0;
    double t_star = 0.0;
    std::vector<long> j;             // blocks with enough signal
    std::vector<double> c_fit;       // temporal rate from ln ||block|| vs t
    std::vector<double> r2;          // goodness of the temporal fits
    std::vector<std::size_t> count;  // time samples used per block
    double spatial_slope = 0.0;      // ln ||block(t*)|| vs j ln 2
    double spatial_r2 = 0.0;
};

// Least-squares decay rates of layer k's dyadic blocks over the late window
// [t_span/8, t_span]; only blocks whose norm stays above 1e-12 with at least
// three samples enter. The spatial slope is fit at the first time the layer
// is nonzero.
DecayFit fit_dyadic_decay(const CascadeState& state, std::size_t k, double r,
                          const DyadicPartition& part);
// Same fit applied directly to a trajectory (used for heat flows).
DecayFit fit_block_decay(const Trajectory& traj, std::size_t k, double r,
                         const DyadicPartition& part, bool layer_starts_at_zero);

struct SmoothingNormReport {
    std::vector<double> times;
    std::vector<double> weighted_b0;  // t^{-1} ||v(t)||_{B^0_{1,inf}} (0 at t = 0)
    std::vector<double> b2;           // ||v(t)||_{B^2_{1,inf}}
    double sup = 0.0;                 // sup_t of the sum
};

SmoothingNormReport smoothing_norm(const Trajectory& v_traj, const DyadicPartition& part);

// sup over positive sample times of t^{(1 - 3/q)/2} ||f(t)||_{L^q}; the Kato
// quantity of the per-layer bounds.
double layer_kato_sup(const Trajectory& traj, double q);

}  // namespace nscb
