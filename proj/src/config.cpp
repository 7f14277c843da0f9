#include "fronts/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace fronts {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& path, const std::string& v) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(path + ": cannot parse number '" + v + "'");
    }
}

int parse_int(const std::string& path, const std::string& v) {
    const double x = parse_double(path, v);
    if (x != std::floor(x)) throw ConfigError(path + ": expected an integer");
    return int(x);
}

bool parse_bool(const std::string& path, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError(path + ": expected true/false");
}

std::vector<double> parse_list(const std::string& path, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(path, item));
    }
    if (out.empty()) throw ConfigError(path + ": empty value list");
    return out;
}

using KeyHandler = std::function<void(const std::string& path, const std::string& value)>;

void parse_sections(const std::string& text,
                    const std::map<std::string, std::map<std::string, KeyHandler>>& schema) {
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("line " + std::to_string(lineno) +
                                                      ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (!schema.count(section))
                throw ConfigError("unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) throw ConfigError("key '" + key + "' outside any section");
        const auto& keys = schema.at(section);
        const auto it = keys.find(key);
        if (it == keys.end())
            throw ConfigError("unknown key " + section + "." + key);
        it->second(section + "." + key, value);
    }
}

std::map<std::string, std::map<std::string, KeyHandler>> run_schema(RunConfig& cfg) {
    auto num = [](double& target) {
        return [&target](const std::string& path, const std::string& v) {
            target = parse_double(path, v);
        };
    };
    auto integer = [](int& target) {
        return [&target](const std::string& path, const std::string& v) {
            target = parse_int(path, v);
        };
    };
    auto str = [](std::string& target) {
        return [&target](const std::string&, const std::string& v) { target = v; };
    };
    auto boolean = [](bool& target) {
        return [&target](const std::string& path, const std::string& v) {
            target = parse_bool(path, v);
        };
    };

    std::map<std::string, std::map<std::string, KeyHandler>> schema;
    schema["model"] = {
        {"a", num(cfg.model.a)},       {"b", num(cfg.model.b)},
        {"c", num(cfg.model.c)},       {"d", num(cfg.model.d)},
        {"beta", num(cfg.model.beta)}, {"mu", num(cfg.model.mu)},
        {"g0", num(cfg.model.g0)},     {"h0", num(cfg.model.h0)},
    };
    schema["initial"] = {
        {"u_kind", str(cfg.u0.kind)},
        {"u_amplitude", num(cfg.u0.amplitude)},
        {"u_table", str(cfg.u0.table)},
        {"v_kind", str(cfg.v0.kind)},
        {"v_amplitude", num(cfg.v0.amplitude)},
        {"v_table", str(cfg.v0.table)},
    };
    schema["solver"] = {
        {"ny", integer(cfg.solver.ny)},
        {"nxi", integer(cfg.solver.nxi)},
        {"dt_policy",
         [&cfg](const std::string& path, const std::string& v) {
             if (v == "cfl") cfg.solver.dt_policy = DtPolicy::Cfl;
             else if (v == "fixed") cfg.solver.dt_policy = DtPolicy::Fixed;
             else throw ConfigError(path + ": expected cfl or fixed");
         }},
        {"dt", num(cfg.solver.dt)},
        {"dt_cap", num(cfg.solver.dt_cap)},
        {"t_max", num(cfg.solver.t_max)},
        {"record_dt", num(cfg.solver.record_dt)},
        {"snapshot_dt", num(cfg.solver.snapshot_dt)},
        {"snapshot_nx", integer(cfg.solver.snapshot_nx)},
        {"stop_on_decision", boolean(cfg.solver.stop_on_decision)},
    };
    schema["detect"] = {
        {"eps_vanish", num(cfg.detect.eps_vanish)},
        {"spread_margin", num(cfg.detect.spread_margin)},
        {"window", integer(cfg.detect.window)},
        {"t_cap", num(cfg.detect.t_cap)},
    };
    schema["output"] = {
        {"directory", str(cfg.output.directory)},
        {"plot", boolean(cfg.output.plot)},
    };
    return schema;
}

}  // namespace

InitialProfile ProfileSpec::build(double support) const {
    if (kind == "cosine") return InitialProfile::cosine(support, amplitude);
    if (kind == "bump") return InitialProfile::bump(support, amplitude);
    if (kind == "tabulated") {
        if (table.empty()) throw ConfigError("tabulated profile needs a table path");
        std::ifstream in(table);
        if (!in) throw ConfigError("cannot open profile table " + table);
        std::vector<double> xs, vs;
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            std::stringstream ss(line);
            std::string xa, va;
            if (!std::getline(ss, xa, ',') || !std::getline(ss, va, ','))
                throw ConfigError("profile table rows must be x,value");
            xs.push_back(parse_double(table, trim(xa)));
            vs.push_back(parse_double(table, trim(va)));
        }
        if (xs.empty() || std::abs(xs.back() - support) > 1e-9 * std::max(1.0, support))
            throw ConfigError("profile table must end at the front position");
        return InitialProfile::tabulated(std::move(xs), std::move(vs));
    }
    throw ConfigError("unknown profile kind '" + kind + "'");
}

void RunConfig::validate() const {
    model.validate();
    solver.validate();
    if (!(detect.eps_vanish > 0.0)) throw ConfigError("detect.eps_vanish must be positive");
    if (!(detect.spread_margin >= 0.0))
        throw ConfigError("detect.spread_margin must be >= 0");
    if (detect.window < 2) throw ConfigError("detect.window must be >= 2");
    if (!(u0.amplitude > 0.0) || !(v0.amplitude > 0.0))
        throw ConfigError("initial amplitudes must be positive");
    (void)prey_profile();
    (void)predator_profile();
}

std::string RunConfig::serialize() const {
    std::ostringstream o;
    char buf[64];
    auto g = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    o << "[model]\n";
    o << "a = " << g(model.a) << "\nb = " << g(model.b) << "\nc = " << g(model.c)
      << "\nd = " << g(model.d) << "\nbeta = " << g(model.beta)
      << "\nmu = " << g(model.mu) << "\ng0 = " << g(model.g0)
      << "\nh0 = " << g(model.h0) << "\n";
    o << "\n[initial]\n";
    o << "u_kind = " << u0.kind << "\nu_amplitude = " << g(u0.amplitude) << "\n";
    if (!u0.table.empty()) o << "u_table = " << u0.table << "\n";
    o << "v_kind = " << v0.kind << "\nv_amplitude = " << g(v0.amplitude) << "\n";
    if (!v0.table.empty()) o << "v_table = " << v0.table << "\n";
    o << "\n[solver]\n";
    o << "ny = " << solver.ny << "\nnxi = " << solver.nxi << "\ndt_policy = "
      << (solver.dt_policy == DtPolicy::Cfl ? "cfl" : "fixed") << "\ndt = "
      << g(solver.dt) << "\ndt_cap = " << g(solver.dt_cap) << "\nt_max = "
      << g(solver.t_max) << "\nrecord_dt = " << g(solver.record_dt)
      << "\nsnapshot_dt = " << g(solver.snapshot_dt) << "\nsnapshot_nx = "
      << solver.snapshot_nx << "\nstop_on_decision = "
      << (solver.stop_on_decision ? "true" : "false") << "\n";
    o << "\n[detect]\n";
    o << "eps_vanish = " << g(detect.eps_vanish) << "\nspread_margin = "
      << g(detect.spread_margin) << "\nwindow = " << detect.window
      << "\nt_cap = " << g(detect.t_cap) << "\n";
    o << "\n[output]\n";
    o << "directory = " << output.directory << "\nplot = "
      << (output.plot ? "true" : "false") << "\n";
    return o.str();
}

RunConfig parse_run_config(const std::string& text) {
    RunConfig cfg;
    parse_sections(text, run_schema(cfg));
    cfg.validate();
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

void set_config_value(RunConfig& cfg, const std::string& key, double value) {
    if (key == "model.a") cfg.model.a = value;
    else if (key == "model.b") cfg.model.b = value;
    else if (key == "model.c") cfg.model.c = value;
    else if (key == "model.d") cfg.model.d = value;
    else if (key == "model.beta") cfg.model.beta = value;
    else if (key == "model.mu") cfg.model.mu = value;
    else if (key == "model.g0") cfg.model.g0 = value;
    else if (key == "model.h0") cfg.model.h0 = value;
    else if (key == "initial.u_amplitude") cfg.u0.amplitude = value;
    else if (key == "initial.v_amplitude") cfg.v0.amplitude = value;
    else if (key == "solver.t_max") cfg.solver.t_max = value;
    else throw ConfigError("sweep axis refers to unknown key " + key);
}

SweepSpec parse_sweep_spec(const std::string& text) {
    SweepSpec spec;
    auto schema = run_schema(spec.base);
    schema["sweep"] = {
        {"axis1",
         [&spec](const std::string& path, const std::string& v) {
             const auto colon = v.find(':');
             if (colon == std::string::npos)
                 throw ConfigError(path + ": expected 'section.key: v1, v2, ...'");
             SweepAxis ax;
             ax.key = trim(v.substr(0, colon));
             ax.values = parse_list(path, v.substr(colon + 1));
             if (spec.axes.empty()) spec.axes.push_back(ax);
             else spec.axes.insert(spec.axes.begin(), ax);
         }},
        {"axis2",
         [&spec](const std::string& path, const std::string& v) {
             const auto colon = v.find(':');
             if (colon == std::string::npos)
                 throw ConfigError(path + ": expected 'section.key: v1, v2, ...'");
             SweepAxis ax;
             ax.key = trim(v.substr(0, colon));
             ax.values = parse_list(path, v.substr(colon + 1));
             spec.axes.push_back(ax);
         }},
        {"concurrency",
         [&spec](const std::string& path, const std::string& v) {
             spec.concurrency = parse_int(path, v);
         }},
        {"max_runs",
         [&spec](const std::string& path, const std::string& v) {
             spec.max_runs = parse_int(path, v);
         }},
    };
    parse_sections(text, schema);
    if (spec.axes.empty()) throw ConfigError("sweep needs at least one axis");
    spec.base.validate();
    for (const auto& ax : spec.axes) {
        RunConfig probe = spec.base;
        set_config_value(probe, ax.key, ax.values.front());  // key existence check
    }
    long total = 1;
    for (const auto& ax : spec.axes) total *= long(ax.values.size());
    if (total > spec.max_runs)
        throw ConfigError("sweep grid exceeds max_runs = " + std::to_string(spec.max_runs));
    return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open sweep file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_sweep_spec(ss.str());
}

}  // namespace fronts
