#include "nscb/config.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nscb {

InitialData RunConfig::initial_data() const {
    InitialData data;
    if (kind == "taylor_green")
        data.kind = InitialKind::taylor_green;
    else if (kind == "single_mode")
        data.kind = InitialKind::single_mode;
    else if (kind == "random_besov")
        data.kind = InitialKind::random_besov;
    else
        throw ConfigError("unknown initial_data.kind: " + kind);
    data.amplitude = amplitude;
    data.seed = seed;
    data.target_norm = target_norm;
    data.p = p;
    return data;
}

void RunConfig::validate() const {
    if (!(p > 3.0)) throw ConfigError("physics.p must exceed 3");
    if (a < 0.0 || a > 1.0) throw ConfigError("physics.a must lie in [0,1]");
    if (!(c_p >= 1.0)) throw ConfigError("physics.c_p must be >= 1");
    if (!(d_p > 1.0)) throw ConfigError("physics.d_p must exceed 1");
    if (!(b > 0.0)) throw ConfigError("physics.b must be positive");
    if (!(dt > 0.0) || !(horizon > 0.0)) throw ConfigError("solver.dt and solver.horizon must be positive");
    Grid g;
    try {
        g = grid();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    const double kmax = g.max_wavenumber();
    if (dt * kmax * kmax > 10.0) throw ConfigError("solver.dt violates the stability bound");
    if (samples < 2) throw ConfigError("decompose.samples must be >= 2");
    (void)initial_data();
}

namespace {

void assign(RunConfig& cfg, const std::string& key, const std::string& value) {
    auto num = [&] {
        try {
            return std::stod(value);
        } catch (const std::exception&) {
            throw ConfigError("config: non-numeric value for " + key);
        }
    };
    if (key == "grid.n")
        cfg.n = static_cast<std::size_t>(num());
    else if (key == "grid.box_length")
        cfg.box_length = num();
    else if (key == "grid.dealias")
        cfg.dealias = num();
    else if (key == "solver.dt")
        cfg.dt = num();
    else if (key == "solver.horizon")
        cfg.horizon = num();
    else if (key == "solver.save_every")
        cfg.save_every = static_cast<std::size_t>(num());
    else if (key == "physics.p")
        cfg.p = num();
    else if (key == "physics.a")
        cfg.a = num();
    else if (key == "physics.c_p")
        cfg.c_p = num();
    else if (key == "physics.d_p")
        cfg.d_p = num();
    else if (key == "physics.b")
        cfg.b = num();
    else if (key == "initial_data.kind")
        cfg.kind = value;
    else if (key == "initial_data.amplitude")
        cfg.amplitude = num();
    else if (key == "initial_data.M")
        cfg.target_norm = num();
    else if (key == "initial_data.seed")
        cfg.seed = static_cast<std::uint64_t>(std::stoull(value));
    else if (key == "outputs.directory")
        cfg.directory = value;
    else if (key == "decompose.samples")
        cfg.samples = static_cast<std::size_t>(num());
    else
        throw ConfigError("config: unknown key " + key);
}

void flatten(const nlohmann::json& node, const std::string& prefix,
             std::map<std::string, std::string>& out) {
    if (node.is_object()) {
        for (const auto& [k, v] : node.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        return;
    }
    if (node.is_string())
        out[prefix] = node.get<std::string>();
    else
        out[prefix] = node.dump();
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::map<std::string, std::string> kv;

    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("config: bad JSON: ") + e.what());
        }
        flatten(j, "", kv);
    } else {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const std::size_t start = line.find_first_not_of(" \t");
            if (start == std::string::npos || line[start] == '#') continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos) throw ConfigError("config: expected key=value: " + line);
            auto trim = [](std::string s) {
                const auto a = s.find_first_not_of(" \t");
                const auto b = s.find_last_not_of(" \t");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
        }
    }
    for (const auto& [k, v] : kv) assign(cfg, k, v);
    cfg.validate();
    return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("config: cannot open " + path.string());
    std::stringstream buf;
    buf << is.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace nscb
