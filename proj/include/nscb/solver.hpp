#pragma once

#include <cstdint>
#include <string>

#include "nscb/dyadic.hpp"
#include "nscb/trajectory.hpp"

namespace nscb {

struct SolverConfig {
    Grid grid;
    double dt = 1e-3;
    double horizon = 0.5;
    std::string scheme = "etd_rk2";
    std::size_t save_every = 1;
};

enum class InitialKind { taylor_green, single_mode, random_besov };

struct InitialData {
    InitialKind kind = InitialKind::taylor_green;
    double amplitude = 1.0;
    std::uint64_t seed = 0;
    // random_besov: target critical Besov norm and its integrability index
    double target_norm = 4.0;
    double p = 4.0;
};

// Divergence-free, zero-mean initial fields. random_besov data is built from
// per-block normalized noise, projected, then rescaled once so the critical
// Besov norm hits the target exactly.
Field make_initial_data(const InitialData& cfg, const Grid& grid);

struct SolveResult {
    Trajectory trajectory;
    bool completed = true;
    std::size_t steps_taken = 0;
    std::string abort_reason;
};

// Pseudospectral integration of incompressible Navier-Stokes (viscosity 1) in
// projection form: exact heat factor per mode, ETD-RK2 for the dealiased
// nonlinear term. On NaN/instability the trajectory up to the last valid
// state is returned with completed = false.
SolveResult integrate(const Field& u0, const SolverConfig& cfg);

Trajectory vorticity_traj(const Trajectory& traj);

// -P div(u (x) u), dealiased; the solver's nonlinear term.
Field ns_nonlinear_term(const Field& u);

}  // namespace nscb
