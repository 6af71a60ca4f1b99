#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nscb/cascade.hpp"
#include "nscb/dyadic.hpp"
#include "nscb/logexp.hpp"
#include "nscb/norms.hpp"
#include "nscb/trajectory.hpp"

namespace nscb {

// Ladder of large constants M = M_0, M_1, ..., M_6 with M_i = M_{i-1}^{c_p}
// (the lower end of the admissible range). Logarithms carried alongside since
// the upper rungs overflow for large M or c_p.
struct ConstantLadder {
    double c_p = 2.0;
    double d_p = 10.0;
    std::array<double, 7> m{};      // m[0] = M, ..., m[6] = M_6 (may be +inf)
    std::array<double, 7> log_m{};  // exact ln M_i

    double M() const { return m[0]; }
    double M1() const { return m[1]; }
    double M6() const { return m[6]; }
};

ConstantLadder constant_ladder(double M, double c_p = 2.0, double d_p = 10.0);

struct RegularityBound {
    IteratedExp bound;
};

// RHS of the quantitative regularity bound: for 0 <= a < 1 a single
// exponential of A^{1/(1-a)} against a triple exponential of M; for a = 1 a
// double exponential of A against a quadruple exponential of M.
RegularityBound regularity_bound(double M, double A, double a, int alpha_order,
                               const ConstantLadder& ladder);

struct BlowupRateQuantity {
    double log_value = 0.0;
    double value = 0.0;
};

// exp(exp(M)) * A / |ln(T* - t)|^b in log domain.
BlowupRateQuantity blowup_rate_quantity(double M, double A, double t, double t_star, double b);

struct ConcentrationEvent {
    double t = 0.0;
    std::array<double, 3> x{};
    long j = 0;
    double value = 0.0;
    double threshold = 0.0;
};

// All padded-grid points with |block_j u(t, x)| >= 2^j / M_1, sorted by j
// descending.
std::vector<ConcentrationEvent> concentration_scan(const Trajectory& traj,
                                                   const ConstantLadder& ladder,
                                                   const DyadicPartition& part);

// Index into events of an antecedent of ev per the back-propagation window
// (earlier time in [t - M_3 2^{-2j}, t - M_3^{-1} 2^{-2j}], torus distance
// <= M_4 2^{-j}, scale within a factor M_2), or nullopt.
std::optional<std::size_t> find_antecedent(const std::vector<ConcentrationEvent>& events,
                                           const ConcentrationEvent& ev,
                                           const ConstantLadder& ladder, double box_length);

struct TotalSpeed {
    double integral = 0.0;
    double ratio = 0.0;  // integral / (M^{c_p} |I|^{1/2})
};

TotalSpeed total_speed(const Trajectory& traj, double t_lo, double t_hi,
                       const ConstantLadder& ladder);

struct EpochScan {
    std::size_t best_index = 0;
    double sub_lo = 0.0, sub_hi = 0.0;
    std::array<double, 2> scaled_u{};      // |I|^{(|a|+1)/2} sup |grad^a u|
    std::array<double, 2> scaled_omega{};  // |I|^{(|a|+2)/2} sup |grad^a omega|
};

// Among n_sub equal subintervals of [t_lo, t_hi], the one with the smallest
// scaled sup norms.
EpochScan epoch_scan(const Trajectory& traj, double t_lo, double t_hi, std::size_t n_sub);

struct AnnulusScan {
    bool degenerate = false;
    double inner = 0.0, outer = 0.0;
    std::array<double, 2> scaled_u{};      // (T')^{(|a|+1)/2} sup over the shell
    std::array<double, 2> scaled_omega{};  // (T')^{(|a|+2)/2} sup over the shell
};

// Geometric sweep (ratio step 2^{1/4}) of inner radii in
// [R0, exp(M_6^{c_p}) R0], shells wrap on the torus and the outer radius is
// clipped to the torus diameter.
AnnulusScan annuli_scan(const Field& u, const Field& grad_u, const Field& omega,
                        const std::array<double, 3>& x0, double r0, double t_prime,
                        const ConstantLadder& ladder);

struct FrequencyCutoffCheck {
    double lhs = 0.0;      // T 2^{2 j0}, may overflow for extreme j0
    double log_lhs = 0.0;  // ln T + 2 j0 ln 2, always finite
    IteratedExp rhs;
    bool satisfied = false;
};

// T 2^{2 j0} against the admissible frequency-concentration envelope.
FrequencyCutoffCheck frequency_cutoff_check(double T, long j0, double A, double a,
                              const ConstantLadder& ladder);

struct MonitorOptions {
    double t_star = 0.0;  // 0: auto (1.25 x final time)
    double b = 1.0;
    bool run_scans = true;
    std::size_t epoch_subdivisions = 8;
};

struct MonitorReport {
    double p = 4.0, a = 0.0;
    std::vector<double> times;
    std::vector<double> besov_m;     // M(t), critical Besov norm
    std::vector<double> a_plain;     // A(t) = || |D|^{-1+3/p} |u| ||_{L^p}
    std::vector<double> a_log;      // weighted-log functional A_a(t)
    std::vector<double> lhs0;        // t^{1/2} ||u||_inf
    std::vector<double> lhs1;        // t ||grad u||_inf
    std::vector<double> blowup_quantity;       // blowup-rate quantity per time
    double sup_m = 0.0, sup_a_plain = 0.0, sup_a_log = 0.0;
    RegularityBound rhs0, rhs1;
    // sup over t and resolvable j of 2^{-j} sup_x |block_j u(t,x)|
    double pointwise_dyadic_sup = 0.0;
    std::vector<ConcentrationEvent> events;
    TotalSpeed speed;
    EpochScan epochs;
    AnnulusScan annuli;
    ConstantLadder ladder;
    bool lhs_bounded = true;  // regularity-bound lhs <= rhs at every sample
};

MonitorReport monitor(const Trajectory& traj, double p, double a, const ConstantLadder& ladder,
                      const MonitorOptions& opts = {});

struct OseenDecay {
    std::vector<double> radii;
    std::vector<double> shell_mean;  // shell-averaged kernel magnitude
    double exponent = 0.0;           // slope of ln mean vs ln r
    double exponent_shifted = 0.0;   // slope vs ln(sqrt(t) + r)
};

// Radial decay of the kernel of e^{t Laplacian} P div, sampled by applying
// the operator to a band-limited delta tensor, shell-averaged and fitted over
// [r_lo, r_hi].
OseenDecay oseen_kernel_decay(const Grid& grid, double t, double r_lo, double r_hi);

}  // namespace nscb
