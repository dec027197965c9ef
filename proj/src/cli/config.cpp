#include "renorm/cli/config.hpp"

#include <set>

#include "json.hpp"
#include "renorm/errors.hpp"

namespace renorm::cli {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigInvalid("config is not valid JSON");
    return j;
}

void requireKeys(const json& obj, const std::set<std::string>& allowed,
                 const std::string& where) {
    if (!obj.is_object()) throw ConfigInvalid(where + ": expected a JSON object");
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            throw ConfigInvalid(where + ": unknown field '" + item.key() + "'");
}

double number(const json& obj, const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw ConfigInvalid("field '" + key + "' must be a number");
    return obj[key].get<double>();
}

int integer(const json& obj, const std::string& key, int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer())
        throw ConfigInvalid("field '" + key + "' must be an integer");
    return obj[key].get<int>();
}

solver::Domain parseDomain(const json& j) {
    requireKeys(j, {"type", "radius", "vertices"}, "domain");
    const std::string type = j.value("type", "disk");
    if (type == "disk") return solver::Domain::disk(number(j, "radius", 1.0));
    if (type == "polygon") {
        if (!j.contains("vertices")) throw ConfigInvalid("polygon domain needs 'vertices'");
        std::vector<std::array<double, 2>> verts;
        for (const auto& v : j["vertices"]) {
            if (!v.is_array() || v.size() != 2)
                throw ConfigInvalid("polygon vertices must be [x, y] pairs");
            verts.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        return solver::Domain::polygon(std::move(verts));
    }
    throw ConfigInvalid("domain type must be 'disk' or 'polygon'");
}

// Loop fields shared by boundary data and charges; the admissible keys depend
// on the target kind.
solver::LoopSpec parseLoop(const json& j, const solver::TargetModel& target,
                           const std::string& where) {
    solver::LoopSpec loop;
    switch (target.kind()) {
    case solver::TargetModel::Kind::Circle:
        requireKeys(j, {"x", "y", "degree", "phase"}, where);
        loop.degree = integer(j, "degree", 0);
        loop.phase = number(j, "phase", 0.0);
        break;
    case solver::TargetModel::Kind::FlatTorus:
        requireKeys(j, {"x", "y", "degree", "degree2", "phase", "phase2"}, where);
        loop.degree = integer(j, "degree", 0);
        loop.degree2 = integer(j, "degree2", 0);
        loop.phase = number(j, "phase", 0.0);
        loop.phase2 = number(j, "phase2", 0.0);
        break;
    case solver::TargetModel::Kind::RP2:
        requireKeys(j, {"x", "y", "degree", "phase"}, where);
        loop.degree = integer(j, "degree", 0);
        loop.phase = number(j, "phase", 0.0);
        break;
    case solver::TargetModel::Kind::Quotient: {
        requireKeys(j, {"x", "y", "class", "phase"}, where);
        if (!j.contains("class"))
            throw ConfigInvalid(where + ": quotient loops need a 'class' name");
        const std::string className = j["class"].get<std::string>();
        const topo::ManifoldDescriptor* man = target.catalogManifold();
        if (man) {
            const topo::HomotopyClass c = topo::classByName(*man, className);
            const topo::FiniteModelData* data = man->finiteData();
            loop.deckElement =
                data->algClasses[static_cast<size_t>(
                                     data->catalogToAlg[static_cast<size_t>(c.id)])]
                    .representativeIndex;
        } else {
            // Gamma = {+-1}: classes named c / w.
            if (className == "c" || className == "γ_c") loop.deckElement = 0;
            else if (className == "w" || className == "γ_w") loop.deckElement = 1;
            else throw ConfigInvalid(where + ": unknown class '" + className + "' for pm1");
        }
        loop.phase = number(j, "phase", 0.0);
        break;
    }
    }
    return loop;
}

} // namespace

EnergyConfig parseEnergyConfig(const std::string& jsonText) {
    const json j = parse(jsonText);
    requireKeys(j,
                {"domain", "target", "boundary_data", "singularities", "rho_schedule", "h",
                 "mode", "sweep", "restarts", "seed", "tol", "omega", "max_sweeps", "threads"},
                "energy config");
    EnergyConfig cfg;
    if (!j.contains("domain") || !j.contains("target") || !j.contains("boundary_data") ||
        !j.contains("singularities") || !j.contains("h"))
        throw ConfigInvalid(
            "energy config needs domain, target, boundary_data, singularities and h");

    cfg.problem.domain = parseDomain(j["domain"]);
    cfg.problem.target = solver::TargetModel::byName(j["target"].get<std::string>());
    cfg.problem.outerLoop = parseLoop(j["boundary_data"], cfg.problem.target, "boundary_data");
    for (const auto& s : j["singularities"]) {
        if (!s.contains("x") || !s.contains("y"))
            throw ConfigInvalid("each singularity needs x and y");
        cfg.problem.positions.push_back({s["x"].get<double>(), s["y"].get<double>()});
        cfg.problem.charges.push_back(parseLoop(s, cfg.problem.target, "singularity"));
    }
    cfg.problem.h = number(j, "h", 1.0 / 64);
    if (cfg.problem.h <= 0) throw ConfigInvalid("h must be positive");

    if (j.contains("rho_schedule")) {
        for (const auto& r : j["rho_schedule"]) cfg.rhoSchedule.push_back(r.get<double>());
    } else {
        cfg.rhoSchedule = solver::defaultRhoSchedule();
    }

    const std::string mode = j.value("mode", "geom");
    if (mode == "geom") cfg.mode = solver::EnergyMode::Geometric;
    else if (mode == "top") cfg.mode = solver::EnergyMode::Topological;
    else throw ConfigInvalid("mode must be 'geom' or 'top'");

    cfg.solve.restarts = integer(j, "restarts", 3);
    cfg.solve.seed = static_cast<unsigned>(integer(j, "seed", 12345));
    cfg.solve.relax.tol = number(j, "tol", 1e-10);
    cfg.solve.relax.omega = number(j, "omega", 1.9);
    cfg.solve.relax.maxSweeps = integer(j, "max_sweeps", 60000);
    cfg.solve.relax.threads = integer(j, "threads", 1);

    if (j.contains("sweep")) {
        const json& s = j["sweep"];
        requireKeys(s, {"axis", "range", "steps"}, "sweep");
        if (!s.contains("range") || !s.contains("steps"))
            throw ConfigInvalid("sweep needs range and steps");
        cfg.sweep.enabled = true;
        if (s.contains("axis")) {
            cfg.sweep.axis = {s["axis"][0].get<double>(), s["axis"][1].get<double>()};
        }
        cfg.sweep.range = {s["range"][0].get<double>(), s["range"][1].get<double>()};
        cfg.sweep.steps = s["steps"].get<int>();
        if (cfg.sweep.steps < 2) throw ConfigInvalid("sweep needs at least 2 steps");
        if (cfg.problem.positions.size() != 1)
            throw ConfigInvalid("sweep mode expects exactly one singularity");
    }
    return cfg;
}

BallsConfig parseBallsConfig(const std::string& jsonText) {
    json j = parse(jsonText);
    // A bare list of balls is accepted as shorthand.
    if (j.is_array()) j = json{{"balls", j}};
    requireKeys(j, {"balls", "t_max", "samples_per_interval"}, "balls config");
    if (!j.contains("balls")) throw ConfigInvalid("balls config needs a 'balls' list");
    BallsConfig cfg;
    for (const auto& b : j["balls"]) {
        requireKeys(b, {"cx", "cy", "r"}, "ball");
        cfg.family.balls.push_back(
            {b.value("cx", 0.0), b.value("cy", 0.0), b.value("r", 0.0)});
        if (cfg.family.balls.back().r < 0) throw ConfigInvalid("ball radius must be >= 0");
    }
    cfg.tMax = number(j, "t_max", 2.0);
    cfg.samplesPerInterval = integer(j, "samples_per_interval", 8);
    if (cfg.tMax < 0) throw ConfigInvalid("t_max must be >= 0");
    if (cfg.samplesPerInterval < 1) throw ConfigInvalid("samples_per_interval must be >= 1");
    return cfg;
}

SynharmonyConfig parseSynharmonyConfig(const std::string& jsonText) {
    const json j = parse(jsonText);
    requireKeys(j, {"target", "gamma", "beta", "t_list", "n_theta", "tol", "omega"},
                "synharmony config");
    if (!j.contains("target") || !j.contains("gamma") || !j.contains("beta"))
        throw ConfigInvalid("synharmony config needs target, gamma and beta");
    SynharmonyConfig cfg;
    cfg.target = solver::TargetModel::byName(j["target"].get<std::string>());
    cfg.gamma = parseLoop(j["gamma"], cfg.target, "gamma");
    cfg.beta = parseLoop(j["beta"], cfg.target, "beta");
    if (j.contains("t_list")) {
        cfg.tList.clear();
        for (const auto& t : j["t_list"]) cfg.tList.push_back(t.get<double>());
    }
    cfg.nTheta = integer(j, "n_theta", 128);
    if (cfg.nTheta < 8) throw ConfigInvalid("n_theta must be at least 8");
    cfg.relax.tol = number(j, "tol", 1e-10);
    cfg.relax.omega = number(j, "omega", 1.9);
    return cfg;
}

} // namespace renorm::cli
