// Command-line front end: simulate | decompose | norms | monitor | verify.
// Exit codes: 0 ok, 1 config error, 2 numeric failure, 3 io error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>

#include "nscb/acceptance.hpp"
#include "nscb/pipeline.hpp"
#include "nscb/snapshot_io.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

nscb::RunConfig load(const CommonArgs& args) {
    nscb::RunConfig cfg;
    if (!args.config_path.empty()) cfg = nscb::parse_config_file(args.config_path);
    if (!args.out_dir.empty()) cfg.directory = args.out_dir;
    if (args.seed_set) cfg.seed = args.seed;
    cfg.validate();
    return cfg;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "configuration file (key=value or JSON)");
    cmd->add_option("--out", args.out_dir, "output directory (overrides config)");
    cmd->add_option("--seed", args.seed, "RNG seed (overrides config)")
        ->each([&args](const std::string&) { args.seed_set = true; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic-box Navier-Stokes cascade toolkit"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string verify_filter;

    auto* simulate = app.add_subcommand("simulate", "integrate the configured initial data");
    add_common(simulate, args);
    auto* decompose = app.add_subcommand("decompose", "cascade-decompose a stored trajectory");
    add_common(decompose, args);
    auto* norms = app.add_subcommand("norms", "norm time series of a stored trajectory");
    add_common(norms, args);
    auto* monitor = app.add_subcommand("monitor", "blowup-criterion monitor of a stored trajectory");
    add_common(monitor, args);
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--filter", verify_filter, "run only criteria whose name contains this");
    add_common(verify, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            const auto res = nscb::stage_simulate(load(args));
            if (!res.completed) {
                std::cerr << "simulate: aborted: " << res.abort_reason << "\n";
                return 2;
            }
            std::cout << "simulate: " << res.steps_taken << " steps, "
                      << res.trajectory.size() << " snapshots\n";
        } else if (decompose->parsed()) {
            const auto state = nscb::stage_decompose(load(args));
            std::cout << "decompose: m = " << state.m << " layers\n";
        } else if (norms->parsed()) {
            nscb::stage_norms(load(args));
            std::cout << "norms: reports written\n";
        } else if (monitor->parsed()) {
            const auto rep = nscb::stage_monitor(load(args));
            std::cout << "monitor: sup M = " << rep.sup_m << ", events = " << rep.events.size()
                      << (rep.lhs_bounded ? ", bound holds" : ", BOUND VIOLATED") << "\n";
            if (!rep.lhs_bounded) return 2;
        } else if (verify->parsed()) {
            const auto results = nscb::acceptance::run_all(verify_filter, std::cout);
            for (const auto& r : results)
                if (!r.pass) return 2;
        }
    } catch (const nscb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const nscb::SnapshotError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
