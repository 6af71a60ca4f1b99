#pragma once

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "nscb/dyadic.hpp"
#include "nscb/field.hpp"
#include "nscb/trajectory.hpp"

namespace nscb {

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

struct BesovParams {
    double s = 0.0;
    double p = 2.0;
    double q = kInfExponent;
};

inline double critical_index(double p) { return -1.0 + 3.0 / p; }

// L^p over the box: collocation quadrature for p < inf, padded-grid max for
// p = inf. Vector fields use the pointwise Euclidean magnitude.
double lp_norm(const Field& f, double p);

// Homogeneous Besov norm over the resolvable scales:
// || 2^{js} ||block_j f||_{L^p} ||_{l^q}.
double besov_norm(const Field& f, const BesovParams& bp, const DyadicPartition& part);

// Kato norm of a sampled trajectory, s < 0. q = inf: sup over samples of
// t^{-s/2} ||f(t)||_{L^p}; q < inf: trapezoid quadrature of the q-th power
// against dt/t.
double kato_norm(const Trajectory& traj, double s, double p, double q);

// Geometric time grid used for heat-flow Kato sampling: 8 points per decade
// from well below the fastest retained scale up to past the slowest one.
std::vector<double> heat_flow_times(const Grid& grid);

struct HeatFlowRatio {
    double kato = 0.0;
    double besov = 0.0;
    double ratio = 0.0;
};

// Kato norm of t -> e^{t Laplacian} f over the geometric grid, against the
// Besov norm of f. The ratio realizes the heat-flow characterization of
// negative-index Besov norms; only its spread over fields is meaningful.
HeatFlowRatio heat_flow_besov_ratio(const Field& f, const BesovParams& bp,
                                    const DyadicPartition& part);

// integral of (|D|^{-1+3/p} |f|)^p / (ln(e + |D|^{-1+3/p} |f|))^a over the
// box. The Riesz potential annihilates the mean, so its output can dip
// negative on the torus; the magnitude is used in both the power and the log.
double weighted_log_functional(const Field& f, double p, double a);

// Max over sampled directions through the box center of the 1D fractional
// integral functional || |D|_lambda^{-1+1/p} |f| (lambda e) ||_{L^p}^p. Every
// ray is sampled over one box width centered on the box center and treated as
// box-periodic, so all directions share one periodization.
double ray_functional(const Field& f, double p, std::size_t n_dirs);
// Per-direction values (same order as the direction set).
std::vector<double> ray_functional_per_direction(const Field& f, double p, std::size_t n_dirs);
// The direction set: unit vectors from small primitive lattice vectors,
// antipodal pairs adjacent. n_dirs >= 6.
std::vector<std::array<double, 3>> ray_directions(std::size_t n_dirs);

struct InterpolationCheck {
    double lhs = 0.0;                        // ||w||_{L^r}
    std::array<double, 3> factors{};         // ||w||_{L^2}, ||grad w||_{L^2}, ||w||_{B}
    std::array<double, 3> exponents{};       // alpha_1, alpha_2, alpha_3
    double constant = 0.0;                   // lhs / prod factors^alpha
};

// Three-factor interpolation of ||w||_{L^r} between L^2, H^1 and the critical
// Besov norm; 2 < r <= 3 < p.
InterpolationCheck interpolation_check(const Field& w, double p, double r,
                                       const DyadicPartition& part);

struct NormReport {
    std::string norm_kind;
    double s = 0.0, p = 0.0, q = 0.0, a = 0.0;
    std::vector<double> times;
    std::vector<double> values;
};

}  // namespace nscb
