#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "nscb/grid.hpp"
#include "nscb/solver.hpp"

namespace nscb {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Run configuration, read from a flat key=value file (grid.n=64) or the
// equivalent JSON (flat or nested).
struct RunConfig {
    // grid
    std::size_t n = 32;
    double box_length = 2.0 * M_PI;
    double dealias = 2.0 / 3.0;
    // solver
    double dt = 1e-3;
    double horizon = 0.5;
    std::size_t save_every = 1;
    // physics
    double p = 4.0;
    double a = 0.0;
    double c_p = 2.0;
    double d_p = 10.0;
    double b = 1.0;
    // initial data
    std::string kind = "taylor_green";
    double amplitude = 1.0;
    double target_norm = 4.0;
    std::uint64_t seed = 0;
    // outputs
    std::string directory = "out";
    // decomposition sampling
    std::size_t samples = 64;

    Grid grid() const { return make_grid(n, box_length, dealias); }
    InitialData initial_data() const;
    void validate() const;
};

RunConfig parse_config_file(const std::filesystem::path& path);
RunConfig parse_config_text(const std::string& text);

}  // namespace nscb
