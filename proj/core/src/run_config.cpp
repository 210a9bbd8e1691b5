#include "stripmhd/run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "stripmhd/errors.hpp"

namespace stripmhd {

using nlohmann::json;

namespace {
const std::set<std::string> kKnown = {
    "grid.L", "grid.nx", "grid.ny",
    "run.dt", "run.t_end", "run.R", "run.a", "run.lambda", "run.epsilon", "run.c1",
    "data.delta", "data.profile",
    "switches.nonlinear", "switches.magnetic",
    "output.record_every", "output.snapshot_every",
    "sweep.epsilons", "sweep.t_end", "sweep.synthetic",
};

void collect_keys(const json& j, const std::string& prefix, std::vector<std::string>& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object())
            collect_keys(*it, key, out);
        else
            out.push_back(key);
    }
}
}  // namespace

RunConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    std::vector<std::string> keys;
    collect_keys(j, "", keys);
    std::string unknown;
    for (const std::string& k : keys)
        if (!kKnown.count(k)) unknown += (unknown.empty() ? "" : ", ") + k;
    if (!unknown.empty()) throw ConfigError("config: unknown keys: " + unknown);

    RunConfig c;
    auto get = [&](const char* grp, const char* key) -> const json* {
        if (!j.contains(grp)) return nullptr;
        const json& g = j.at(grp);
        if (!g.contains(key)) return nullptr;
        return &g.at(key);
    };
    if (auto* v = get("grid", "L")) c.L = v->get<double>();
    if (auto* v = get("grid", "nx")) c.nx = v->get<int>();
    if (auto* v = get("grid", "ny")) c.ny = v->get<int>();
    if (auto* v = get("run", "dt")) c.dt = v->get<double>();
    if (auto* v = get("run", "t_end")) c.t_end = v->get<double>();
    if (auto* v = get("run", "R")) c.R = v->get<double>();
    if (auto* v = get("run", "a")) c.a = v->get<double>();
    if (auto* v = get("run", "lambda")) c.lambda = v->get<double>();
    if (auto* v = get("run", "epsilon")) c.epsilon = v->get<double>();
    if (auto* v = get("run", "c1")) c.c1 = v->get<double>();
    if (auto* v = get("data", "delta")) c.delta = v->get<double>();
    if (auto* v = get("data", "profile")) c.profile = v->get<std::string>();
    if (auto* v = get("switches", "nonlinear")) c.nonlinear = v->get<bool>();
    if (auto* v = get("switches", "magnetic")) c.magnetic = v->get<bool>();
    if (auto* v = get("output", "record_every")) c.record_every = v->get<int>();
    if (auto* v = get("output", "snapshot_every")) c.snapshot_every = v->get<int>();
    if (auto* v = get("sweep", "epsilons")) c.sweep_epsilons = v->get<std::vector<double>>();
    if (auto* v = get("sweep", "t_end")) c.sweep_t_end = v->get<double>();
    if (auto* v = get("sweep", "synthetic")) {
        for (const auto& e : *v)
            c.sweep_synthetic.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    }

    if (!j.contains("grid") || !j.at("grid").contains("nx"))
        throw ConfigError("config: missing grid.nx");
    if (!j.at("grid").contains("ny")) throw ConfigError("config: missing grid.ny");
    if (!(c.a > 0.0)) throw ConfigError("config: run.a must be positive");
    if (c.epsilon < 0.0 || c.epsilon > 1.0)
        throw ConfigError("config: run.epsilon must lie in [0, 1]");
    return c;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("config: cannot open " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config_text(ss.str());
}

std::string config_to_json(const RunConfig& c) {
    json j;
    j["grid"] = {{"L", c.L}, {"nx", c.nx}, {"ny", c.ny}};
    j["run"] = {{"dt", c.dt},       {"t_end", c.t_end},   {"R", c.R},
                {"a", c.a},         {"lambda", c.lambda}, {"epsilon", c.epsilon},
                {"c1", c.c1}};
    j["data"] = {{"delta", c.delta}, {"profile", c.profile}};
    j["switches"] = {{"nonlinear", c.nonlinear}, {"magnetic", c.magnetic}};
    j["output"] = {{"record_every", c.record_every}, {"snapshot_every", c.snapshot_every}};
    if (!c.sweep_epsilons.empty() || c.sweep_t_end > 0.0) {
        j["sweep"] = json::object();
        if (!c.sweep_epsilons.empty()) j["sweep"]["epsilons"] = c.sweep_epsilons;
        if (c.sweep_t_end > 0.0) j["sweep"]["t_end"] = c.sweep_t_end;
    }
    return j.dump(2);
}

}  // namespace stripmhd
