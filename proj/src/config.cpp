#include "hotlane/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hotlane/error.hpp"

namespace hotlane {

using nlohmann::json;

namespace {

json base_document() {
    // ATFD on both groups, floor at 0.8 C0
    const json fd = {{"u_f", 100.0}, {"w", 20.0}, {"rho_j", 140.0}, {"c_fraction", 0.8}};
    return {
        {"mode", "hot"},
        {"fd", {{"hot", fd}, {"gp", fd}}},
        {"geometry", {{"corridor_length", 0.25}, {"hot_lanes", 1.0}, {"gp_lanes", 1.0}}},
        {"mean_trip_distance", 5.0},
        {"choice", {{"model", "ue"}, {"vot", {{"family", "exponential"}, {"mean", 50.0}}},
                    {"pi_star", 50.0}, {"alpha_star", 1.0}}},
        {"controller",
         {{"k1", 8.0}, {"k2", 5.0}, {"k3", 8.0}, {"k4", 6.0}, {"a0", 0.0}, {"b0", 0.0},
          {"toll_ceiling", 1000.0}, {"update_every_steps", 1}}},
        {"initial", {{"delta1", 0.0}, {"delta2", 0.0}}},
        {"simulation",
         {{"dt_seconds", 0.1}, {"horizon_hours", 5.0}, {"output_every_steps", 10},
          {"jam_clamp", "auto"}}},
    };
}

double num(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number()) throw ConfigError(where + "." + key + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(where + "." + key + " must be finite");
    return x;
}

long integer(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw ConfigError(where + "." + key + " must be an integer");
    return v.get<long>();
}

std::string str(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
    const auto& v = j.at(key);
    if (!v.is_string()) throw ConfigError(where + "." + key + " must be a string");
    return v.get<std::string>();
}

const json& section(const json& j, const char* key, const std::string& where = "config") {
    if (!j.contains(key) || !j.at(key).is_object()) {
        throw ConfigError(where + ": missing section '" + key + "'");
    }
    return j.at(key);
}

FdParams parse_fd(const json& j, const std::string& where) {
    FdParams fd;
    fd.u_f = num(j, "u_f", where);
    fd.w = num(j, "w", where);
    fd.rho_j = num(j, "rho_j", where);
    const bool has_frac = j.contains("c_fraction");
    const bool has_c = j.contains("c");
    if (has_frac && has_c) throw ConfigError(where + ": give either c or c_fraction, not both");
    try {
        if (has_frac) {
            fd = FdParams::with_floor_fraction(fd.u_f, fd.w, fd.rho_j, num(j, "c_fraction", where));
        } else {
            fd.c = has_c ? num(j, "c", where) : 0.0;
            fd.validate();
        }
    } catch (const DomainError& e) {
        throw ConfigError(where + ": " + e.what());
    }
    return fd;
}

DemandRates rates(const json& j, const char* k1, const char* k2, const std::string& where) {
    return {num(j, k1, where), num(j, k2, where)};
}

DemandProfile parse_demand(const json& j) {
    const std::string where = "demand";
    const std::string kind = str(j, "kind", where);
    if (kind == "constant") return DemandProfile::constant(rates(j, "e1", "e2", where));
    if (kind == "trapezoid") {
        return DemandProfile::trapezoid(num(j, "ramp_up_start", where), num(j, "ramp_up_end", where),
                                        num(j, "plateau_end", where), num(j, "ramp_down_end", where),
                                        rates(j, "e1_peak", "e2_peak", where));
    }
    if (kind == "piecewise_linear") {
        if (!j.contains("points") || !j.at("points").is_array()) {
            throw ConfigError("demand.points must be an array of [t, e1, e2]");
        }
        std::vector<Breakpoint> pts;
        for (const auto& row : j.at("points")) {
            if (!row.is_array() || row.size() != 3 || !row[0].is_number() || !row[1].is_number() ||
                !row[2].is_number()) {
                throw ConfigError("demand.points entries must be [t, e1, e2]");
            }
            pts.push_back({row[0].get<double>(), {row[1].get<double>(), row[2].get<double>()}});
        }
        return DemandProfile::piecewise_linear(std::move(pts));
    }
    throw ConfigError("demand.kind must be constant, trapezoid or piecewise_linear (got '" + kind + "')");
}

ChoiceModel parse_choice(const json& j) {
    const std::string model = str(j, "model", "choice");
    try {
        if (model == "logit") {
            LogitParams lp{num(j, "pi_star", "choice"), num(j, "alpha_star", "choice")};
            lp.validate();
            return ChoiceModel::logit(lp);
        }
        if (model == "ue") {
            const json& vot = section(j, "vot", "choice");
            const std::string family = str(vot, "family", "choice.vot");
            if (family == "exponential") {
                return ChoiceModel::ue(std::make_shared<ExponentialVot>(num(vot, "mean", "choice.vot")));
            }
            if (family == "uniform") {
                return ChoiceModel::ue(
                    std::make_shared<UniformVot>(num(vot, "lo", "choice.vot"), num(vot, "hi", "choice.vot")));
            }
            throw ConfigError("choice.vot.family must be exponential or uniform");
        }
    } catch (const DomainError& e) {
        throw ConfigError(std::string("choice: ") + e.what());
    }
    throw ConfigError("choice.model must be ue or logit (got '" + model + "')");
}

JamClamp parse_clamp(const std::string& s) {
    if (s == "auto") return JamClamp::Auto;
    if (s == "on") return JamClamp::On;
    if (s == "off") return JamClamp::Off;
    throw ConfigError("simulation.jam_clamp must be auto, on or off");
}

}  // namespace

long ScenarioConfig::total_steps() const { return std::lround(horizon / dt); }

std::vector<std::string> preset_names() {
    return {"constant", "trapezoid", "constant_long_corridor"};
}

json preset_json(const std::string& name) {
    json doc = base_document();
    if (name == "constant") {
        doc["demand"] = {{"kind", "constant"}, {"e1", 50.0}, {"e2", 215.0}};
    } else if (name == "trapezoid") {
        doc["demand"] = {{"kind", "trapezoid"}, {"ramp_up_start", 0.0}, {"ramp_up_end", 0.25},
                         {"plateau_end", 2.0},  {"ramp_down_end", 2.5}, {"e1_peak", 50.0},
                         {"e2_peak", 185.0}};
        doc["simulation"]["horizon_hours"] = 6.0;
    } else if (name == "constant_long_corridor") {
        // same p0 as "constant", 40x the corridor; the integrators are far slower here
        doc["geometry"]["corridor_length"] = 10.0;
        doc["demand"] = {{"kind", "constant"}, {"e1", 2000.0}, {"e2", 8600.0}};
    } else {
        std::string known;
        for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
        throw ConfigError("unknown preset '" + name + "' (known: " + known + ")");
    }
    doc["name"] = name;
    return doc;
}

ScenarioConfig preset_config(const std::string& name) { return parse_config(json{{"preset", name}}); }

ScenarioConfig parse_config(const json& input) {
    if (!input.is_object()) throw ConfigError("config must be a JSON object");
    json doc;
    if (input.contains("preset")) {
        if (!input.at("preset").is_string()) throw ConfigError("preset must be a string");
        doc = preset_json(input.at("preset").get<std::string>());
        json patch = input;
        patch.erase("preset");
        doc.merge_patch(patch);
    } else {
        doc = input;
    }

    ScenarioConfig cfg;
    cfg.source = doc;
    if (doc.contains("name") && doc.at("name").is_string()) cfg.name = doc.at("name").get<std::string>();

    const std::string mode = str(doc, "mode", "config");
    if (mode == "hot") cfg.mode = Mode::Hot;
    else if (mode == "hov") cfg.mode = Mode::Hov;
    else throw ConfigError("mode must be hot or hov");

    const json& fd = section(doc, "fd");
    cfg.fd_hot = parse_fd(section(fd, "hot", "fd"), "fd.hot");
    cfg.fd_gp = parse_fd(section(fd, "gp", "fd"), "fd.gp");

    const json& geo = section(doc, "geometry");
    cfg.geometry.corridor_length = num(geo, "corridor_length", "geometry");
    cfg.geometry.hot_lanes = num(geo, "hot_lanes", "geometry");
    cfg.geometry.gp_lanes = num(geo, "gp_lanes", "geometry");
    cfg.geometry.mean_trip_distance = num(doc, "mean_trip_distance", "config");
    cfg.geometry.validate();

    cfg.demand = parse_demand(section(doc, "demand"));
    cfg.choice = parse_choice(section(doc, "choice"));

    const json& ctl = section(doc, "controller");
    cfg.controller.gains = {num(ctl, "k1", "controller"), num(ctl, "k2", "controller"),
                            num(ctl, "k3", "controller"), num(ctl, "k4", "controller")};
    try {
        cfg.controller.gains.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("controller: ") + e.what());
    }
    cfg.controller.a = num(ctl, "a0", "controller");
    cfg.controller.b = num(ctl, "b0", "controller");
    cfg.toll.ceiling = num(ctl, "toll_ceiling", "controller");
    if (!(cfg.toll.ceiling > 0.0)) throw ConfigError("controller.toll_ceiling must be positive");
    const long every = integer(ctl, "update_every_steps", "controller");
    if (every < 1) throw ConfigError("controller.update_every_steps must be >= 1");
    cfg.controller_every_steps = static_cast<int>(every);

    const json& init = section(doc, "initial");
    cfg.delta1_0 = num(init, "delta1", "initial");
    cfg.delta2_0 = num(init, "delta2", "initial");
    if (cfg.delta1_0 < 0.0 || cfg.delta2_0 < 0.0) throw ConfigError("initial trip counts must be >= 0");

    const json& sim = section(doc, "simulation");
    const double dt_s = num(sim, "dt_seconds", "simulation");
    if (!(dt_s > 0.0)) throw ConfigError("simulation.dt_seconds must be positive");
    cfg.dt = dt_s / 3600.0;
    cfg.horizon = num(sim, "horizon_hours", "simulation");
    if (!(cfg.horizon > 0.0)) throw ConfigError("simulation.horizon_hours must be positive");
    const long out_every = integer(sim, "output_every_steps", "simulation");
    if (out_every < 1) throw ConfigError("simulation.output_every_steps must be >= 1");
    cfg.output_every_steps = static_cast<int>(out_every);
    cfg.jam_clamp = parse_clamp(str(sim, "jam_clamp", "simulation"));
    if (cfg.horizon / cfg.dt > 1e9) throw ConfigError("horizon / dt exceeds 1e9 steps");

    const DemandRates pk = cfg.demand.peak(cfg.horizon);
    const A1Check a1 = check_a1(cfg.geometry, cfg.fd_hot, cfg.fd_gp, pk.e1_tilde, pk.e2_tilde);
    if (!a1.holds()) {
        cfg.warnings.push_back("A1 does not hold at peak demand: " + a1.failures());
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in, nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

}  // namespace hotlane
