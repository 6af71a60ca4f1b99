#pragma once

#include <filesystem>

#include "nscb/config.hpp"
#include "nscb/diagnostics.hpp"
#include "nscb/trajectory.hpp"

namespace nscb {

// Pipeline stages behind the CLI. Every stage persists its artifacts under
// cfg.directory and can resume from the previous stage's output.

// Integrates the configured initial data and writes
// trajectory/time_######.nscb plus run_manifest.json.
SolveResult stage_simulate(const RunConfig& cfg);

// Reads time_######.nscb files from dir (sorted by index).
Trajectory load_trajectory(const std::filesystem::path& dir, double dealias_fraction);

// Cascade decomposition of the stored trajectory: layer_k/time_######.nscb,
// remainder/time_######.nscb, manifest.json, residual.csv.
CascadeState stage_decompose(const RunConfig& cfg);

// Norm time series of the stored trajectory (critical Besov, L^p, weighted
// log functional) as CSV files under norms/.
void stage_norms(const RunConfig& cfg);

// Monitor report: monitor/monitor.csv and monitor/summary.json.
MonitorReport stage_monitor(const RunConfig& cfg);

}  // namespace nscb
