#include "nscb/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>

#include "nscb/cascade.hpp"
#include "nscb/csv.hpp"
#include "nscb/snapshot_io.hpp"

namespace nscb {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string snapshot_name(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "time_%06zu.nscb", i);
    return buf;
}

json config_echo(const RunConfig& cfg) {
    return json{{"grid", {{"n", cfg.n}, {"box_length", cfg.box_length}, {"dealias", cfg.dealias}}},
                {"solver",
                 {{"dt", cfg.dt}, {"horizon", cfg.horizon}, {"save_every", cfg.save_every}}},
                {"physics",
                 {{"p", cfg.p}, {"a", cfg.a}, {"c_p", cfg.c_p}, {"d_p", cfg.d_p}, {"b", cfg.b}}},
                {"initial_data",
                 {{"kind", cfg.kind},
                  {"amplitude", cfg.amplitude},
                  {"M", cfg.target_norm},
                  {"seed", cfg.seed}}},
                {"outputs", {{"directory", cfg.directory}}},
                {"decompose", {{"samples", cfg.samples}}}};
}

void write_json(const json& j, const fs::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("pipeline: cannot open " + path.string());
    os << j.dump(2) << "\n";
}

}  // namespace

SolveResult stage_simulate(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const Grid grid = cfg.grid();
    const Field u0 = make_initial_data(cfg.initial_data(), grid);
    SolverConfig scfg{grid, cfg.dt, cfg.horizon, "etd_rk2", cfg.save_every};
    SolveResult res = integrate(u0, scfg);

    const fs::path out = fs::path(cfg.directory);
    fs::create_directories(out / "trajectory");
    for (std::size_t i = 0; i < res.trajectory.size(); ++i)
        write_snapshot(res.trajectory.fields[i], res.trajectory.times[i],
                       out / "trajectory" / snapshot_name(i));

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json manifest{{"config", config_echo(cfg)},
                  {"completed", res.completed},
                  {"steps_taken", res.steps_taken},
                  {"wall_time_s", wall},
                  {"snapshots", res.trajectory.size()},
                  {"times", res.trajectory.times}};
    if (!res.completed) manifest["abort_reason"] = res.abort_reason;
    write_json(manifest, out / "run_manifest.json");
    return res;
}

Trajectory load_trajectory(const fs::path& dir, double dealias_fraction) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".nscb") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    Trajectory traj;
    for (const auto& file : files) {
        const Snapshot snap = read_snapshot(file);
        traj.push(snap.time, snap.to_field(dealias_fraction));
    }
    if (traj.empty()) throw std::runtime_error("load_trajectory: no snapshots in " + dir.string());
    return traj;
}

CascadeState stage_decompose(const RunConfig& cfg) {
    const fs::path out = fs::path(cfg.directory);
    Trajectory traj = load_trajectory(out / "trajectory", cfg.dealias);
    if (traj.size() < 2) throw std::runtime_error("decompose: need at least two samples");

    // decompose.samples caps the working sample count; the stride must keep
    // the grid uniform, so use the smallest divisor of (size - 1) that gets
    // at or below the cap
    if (cfg.samples >= 2 && traj.size() > cfg.samples) {
        const std::size_t intervals = traj.size() - 1;
        std::size_t stride = (intervals + cfg.samples - 2) / (cfg.samples - 1);
        while (stride < intervals && intervals % stride != 0) ++stride;
        if (stride > 1 && intervals % stride == 0) {
            Trajectory thinned;
            for (std::size_t i = 0; i < traj.size(); i += stride)
                thinned.push(traj.times[i], std::move(traj.fields[i]));
            traj = std::move(thinned);
        }
    }
    const double horizon = traj.times.back();
    const double dt = horizon / static_cast<double>(traj.size() - 1);
    for (std::size_t i = 0; i < traj.size(); ++i)
        if (std::fabs(traj.times[i] - dt * static_cast<double>(i)) > 1e-9 * std::max(1.0, horizon))
            throw std::runtime_error("decompose: trajectory samples must be uniform");

    CascadeState state = compute_cascade(traj.fields.front(), cfg.p, horizon, dt);

    for (std::size_t k = 1; k <= state.m; ++k) {
        const fs::path layer_dir = out / "cascade" / ("layer_" + std::to_string(k));
        fs::create_directories(layer_dir);
        const Trajectory& layer = state.layer(k);
        for (std::size_t i = 0; i < layer.size(); ++i)
            write_snapshot(layer.fields[i], layer.times[i], layer_dir / snapshot_name(i));
    }

    RemainderResult rem = remainder_residual(traj, state);
    fs::create_directories(out / "cascade" / "remainder");
    for (std::size_t i = 0; i < rem.v.size(); ++i)
        write_snapshot(rem.v.fields[i], rem.v.times[i],
                       out / "cascade" / "remainder" / snapshot_name(i));
    CsvWriter residual_csv({"time", "relative_residual"});
    for (std::size_t i = 0; i < rem.residual.times.size(); ++i)
        residual_csv.add_row({rem.residual.times[i], rem.residual.values[i]});
    residual_csv.write(out / "cascade" / "residual.csv");

    json manifest{{"p", state.p},
                  {"m", state.m},
                  {"times", state.times()},
                  {"grid",
                   {{"n", traj.grid().n},
                    {"box_length", traj.grid().box_length},
                    {"dealias", traj.grid().dealias_fraction}}},
                  {"max_relative_residual", rem.max_relative}};
    write_json(manifest, out / "cascade" / "manifest.json");
    return state;
}

void stage_norms(const RunConfig& cfg) {
    const fs::path out = fs::path(cfg.directory);
    Trajectory traj = load_trajectory(out / "trajectory", cfg.dealias);
    const DyadicPartition part = build_partition(traj.grid());
    fs::create_directories(out / "norms");

    NormReport besov;
    besov.norm_kind = "besov_critical";
    besov.s = critical_index(cfg.p);
    besov.p = cfg.p;
    besov.q = std::numeric_limits<double>::infinity();
    NormReport lp;
    lp.norm_kind = "lp";
    lp.p = cfg.p;
    NormReport wlog;
    wlog.norm_kind = "weighted_log";
    wlog.p = cfg.p;
    wlog.a = cfg.a;
    const BesovParams bp{besov.s, cfg.p, kInfExponent};
    for (std::size_t i = 0; i < traj.size(); ++i) {
        besov.times.push_back(traj.times[i]);
        besov.values.push_back(besov_norm(traj.fields[i], bp, part));
        lp.times.push_back(traj.times[i]);
        lp.values.push_back(lp_norm(traj.fields[i], cfg.p));
        wlog.times.push_back(traj.times[i]);
        wlog.values.push_back(weighted_log_functional(traj.fields[i], cfg.p, cfg.a));
    }
    export_csv(besov, out / "norms" / "besov.csv");
    export_csv(lp, out / "norms" / "lp.csv");
    export_csv(wlog, out / "norms" / "weighted_log.csv");
}

MonitorReport stage_monitor(const RunConfig& cfg) {
    const fs::path out = fs::path(cfg.directory);
    Trajectory traj = load_trajectory(out / "trajectory", cfg.dealias);
    const ConstantLadder ladder = constant_ladder(std::max(2.0, cfg.target_norm), cfg.c_p, cfg.d_p);
    MonitorOptions opts;
    opts.b = cfg.b;
    MonitorReport rep = monitor(traj, cfg.p, cfg.a, ladder, opts);

    fs::create_directories(out / "monitor");
    CsvWriter csv({"time", "besov_m", "a_plain", "a_log", "lhs_alpha0", "lhs_alpha1", "blowup_quantity"});
    for (std::size_t i = 0; i < rep.times.size(); ++i)
        csv.add_row({rep.times[i], rep.besov_m[i], rep.a_plain[i], rep.a_log[i], rep.lhs0[i],
                     rep.lhs1[i], rep.blowup_quantity[i]});
    csv.write(out / "monitor" / "monitor.csv");

    // dense runs can exceed threshold at millions of grid points: the
    // summary keeps the leading events (highest j first) plus the full count
    constexpr std::size_t kMaxSerializedEvents = 5000;
    json events = json::array();
    for (const auto& ev : rep.events) {
        if (events.size() >= kMaxSerializedEvents) break;
        events.push_back({{"t", ev.t},
                          {"x", {ev.x[0], ev.x[1], ev.x[2]}},
                          {"j", ev.j},
                          {"value", ev.value},
                          {"threshold", ev.threshold}});
    }
    json summary{
        {"p", rep.p},
        {"a", rep.a},
        {"sup_m", rep.sup_m},
        {"sup_a_plain", rep.sup_a_plain},
        {"sup_a_log", rep.sup_a_log},
        {"pointwise_dyadic_sup", rep.pointwise_dyadic_sup},
        {"lhs_bounded", rep.lhs_bounded},
        {"ladder",
         {{"M", rep.ladder.m[0]}, {"c_p", rep.ladder.c_p}, {"d_p", rep.ladder.d_p},
          {"log_m", rep.ladder.log_m}}},
        {"rhs_alpha0",
         {{"log1", rep.rhs0.bound.log1}, {"log2", rep.rhs0.bound.log2},
          {"log3", rep.rhs0.bound.log3}}},
        {"rhs_alpha1",
         {{"log1", rep.rhs1.bound.log1}, {"log2", rep.rhs1.bound.log2},
          {"log3", rep.rhs1.bound.log3}}},
        {"event_count", rep.events.size()},
        {"events", events},
        {"total_speed", {{"integral", rep.speed.integral}, {"ratio", rep.speed.ratio}}},
        {"epochs",
         {{"best_index", rep.epochs.best_index}, {"sub_lo", rep.epochs.sub_lo},
          {"sub_hi", rep.epochs.sub_hi}, {"scaled_u", rep.epochs.scaled_u},
          {"scaled_omega", rep.epochs.scaled_omega}}},
        {"annuli",
         {{"degenerate", rep.annuli.degenerate}, {"inner", rep.annuli.inner},
          {"outer", rep.annuli.outer}, {"scaled_u", rep.annuli.scaled_u},
          {"scaled_omega", rep.annuli.scaled_omega}}}};
    write_json(summary, out / "monitor" / "summary.json");
    return rep;
}

}  // namespace nscb
