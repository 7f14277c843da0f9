#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fronts/analysis.hpp"
#include "fronts/config.hpp"
#include "fronts/coupled.hpp"
#include "fronts/csvio.hpp"
#include "fronts/semiwave.hpp"
#include "fronts/svg.hpp"
#include "fronts/sweep.hpp"
#include "fronts/thresholds.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitInvariant = 4;
constexpr int kExitThreshold = 5;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw fronts::DataError("cannot open " + path + " for writing");
    f << text;
}

json to_json(const fronts::WindowStats& w) {
    return {{"front_growth", w.front_growth},
            {"max_density", w.max_density},
            {"max_front_dot", w.max_front_dot}};
}

json to_json(const fronts::Outcome& oc) {
    return {{"prey", fronts::to_string(oc.prey)},
            {"predator", fronts::to_string(oc.predator)},
            {"prey_evidence", to_json(oc.prey_evidence)},
            {"predator_evidence", to_json(oc.predator_evidence)}};
}

json to_json(const fronts::SpeedEstimate& e) {
    return {{"slope", e.slope}, {"stderr", e.stderr_}, {"points", e.points}};
}

json to_json(const fronts::SpeedTable& t) {
    json j = {{"kbar_beta", t.kbar_beta},
              {"kund_mu", t.kund_mu},
              {"kbar_mu", t.kbar_mu}};
    j["kund_beta"] = t.kund_beta ? json(*t.kund_beta) : json(nullptr);
    return j;
}

json to_json(const fronts::SpeedConstants& c) {
    auto opt = [](const std::optional<double>& v) {
        return v ? json(*v) : json(nullptr);
    };
    return {{"c1", c.c1}, {"c2", c.c2},     {"c3", opt(c.c3)}, {"c4", opt(c.c4)},
            {"c5", opt(c.c5)}, {"A", opt(c.A)}, {"B", opt(c.B)}};
}

json to_json(const fronts::SpeedReport& r) {
    json j;
    j["g_slope"] = r.g_slope ? to_json(*r.g_slope) : json(nullptr);
    j["h_slope"] = r.h_slope ? to_json(*r.h_slope) : json(nullptr);
    j["table"] = to_json(r.table);
    j["regime"] = fronts::to_string(r.regime);
    j["constants"] = to_json(r.constants);
    return j;
}

json to_json(const fronts::GammaThreshold& g) {
    return {{"spreads_for_all_gamma", g.spreads_for_all_gamma},
            {"value", g.value},
            {"lo", g.lo},
            {"hi", g.hi},
            {"runs", g.runs},
            {"flagged", g.flagged}};
}

const char* to_string(fronts::CriterionStatus s) {
    switch (s) {
        case fronts::CriterionStatus::Satisfied: return "satisfied";
        case fronts::CriterionStatus::NotSatisfied: return "not satisfied";
        case fronts::CriterionStatus::NotApplicable: return "not applicable";
        case fronts::CriterionStatus::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

json to_json(const fronts::CriteriaReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json h = json::array();
        for (const auto& [k, v] : e.hypothesis) h.push_back({{k, v}});
        entries.push_back({{"criterion", e.theorem},
                           {"prediction", e.prediction},
                           {"status", to_string(e.status)},
                           {"hypothesis", h},
                           {"note", e.note}});
    }
    return {{"entries", entries}};
}

json to_json(const fronts::SeparationReport& r) {
    return {{"applicable", r.applicable},   {"K", r.K},
            {"sigma", r.sigma},             {"L_sigma", r.L_sigma},
            {"delta_sigma", r.delta_sigma}, {"condition_ok", r.condition_ok},
            {"gap_ok", r.gap_ok},           {"satisfied", r.satisfied}};
}

int cmd_simulate(const std::string& cfg_path) {
    const fronts::RunConfig cfg = fronts::load_run_config(cfg_path);
    const fs::path dir(cfg.output.directory);
    fs::create_directories(dir);

    const fronts::Trajectory traj =
        fronts::simulate(cfg.model, cfg.prey_profile(), cfg.predator_profile(),
                         cfg.solver, cfg.detect);

    fronts::write_timeseries_csv((dir / "timeseries.csv").string(), traj.records);
    char name[64];
    for (size_t i = 0; i < traj.snapshots.size(); ++i) {
        std::snprintf(name, sizeof name, "snapshot_%04zu.csv", i);
        fronts::write_snapshot_csv((dir / name).string(), traj.snapshots[i]);
    }

    const fronts::Outcome oc = fronts::classify_outcome(traj, cfg.model, cfg.detect);
    const fronts::SpeedReport sr =
        fronts::measure_speeds(traj, cfg.model, cfg.detect);
    json out;
    out["outcome"] = to_json(oc);
    out["speeds"] = to_json(sr);
    out["invariants"] = {{"clamp_mass_u", traj.clamp_mass_u},
                         {"clamp_mass_v", traj.clamp_mass_v},
                         {"clamp_flagged", traj.clamp_flagged},
                         {"records", traj.records.size()},
                         {"monitors", "all recorded steps within bounds"}};
    write_text((dir / "outcome.json").string(), out.dump(2) + "\n");

    if (cfg.output.plot) {
        write_text((dir / "fronts.svg").string(),
                   fronts::svg_fronts_plot(traj.records, sr.table));
        if (!traj.snapshots.empty())
            write_text((dir / "profile.svg").string(),
                       fronts::svg_profile_plot(traj.snapshots.back()));
    }
    std::cout << "wrote " << (dir / "timeseries.csv").string() << " ("
              << traj.records.size() << " records, " << traj.snapshots.size()
              << " snapshots)\n"
              << "prey: " << fronts::to_string(oc.prey)
              << ", predator: " << fronts::to_string(oc.predator) << "\n";
    return kExitOk;
}

int cmd_semiwave(double nu, double d, double theta, double tol,
                 const std::string& profile_path) {
    const fronts::SemiWave sw = fronts::solve_semiwave(nu, d, theta, tol);
    std::printf("k = %.12g\n", sw.k);
    if (!profile_path.empty()) {
        std::ofstream f(profile_path);
        if (!f) throw fronts::DataError("cannot open " + profile_path);
        f << "y,q\n";
        char buf[96];
        for (const auto& [y, q] : sw.profile) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", y, q);
            f << buf;
        }
        std::cout << "profile written to " << profile_path << "\n";
    }
    return kExitOk;
}

int cmd_gamma_star(double d, double theta, double rho0, const std::string& kind,
                   double amplitude, double tol) {
    fronts::ProfileSpec spec;
    spec.kind = kind;
    spec.amplitude = amplitude;
    fronts::ThresholdOptions opt;
    opt.tol = tol;
    const fronts::GammaThreshold g =
        fronts::critical_gamma(d, theta, rho0, spec.build(rho0), opt);
    json out = to_json(g);
    if (g.spreads_for_all_gamma) out["verdict"] = "spreads for all gamma";
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_check(const std::string& cfg_path, double tol) {
    const fronts::RunConfig cfg = fronts::load_run_config(cfg_path);
    fronts::ThresholdOptions opt;
    opt.tol = tol;
    opt.detect = cfg.detect;
    const fronts::CriteriaReport rep = fronts::check_criteria(
        cfg.model, cfg.prey_profile(), cfg.predator_profile(), opt);
    json out = to_json(rep);
    out["separation"] = to_json(fronts::separation_condition(
        cfg.model, cfg.prey_profile(), cfg.predator_profile()));
    std::cout << out.dump(2) << "\n";
    for (const auto& e : rep.entries)
        std::cerr << e.theorem << ": " << to_string(e.status) << ", predicts "
                  << e.prediction << "\n";
    return kExitOk;
}

fronts::Trajectory load_trajectory(const std::string& csv_path) {
    fronts::Trajectory traj;
    traj.records = fronts::read_timeseries_csv(csv_path);
    return traj;
}

int cmd_classify(const std::string& cfg_path, const std::string& csv_path) {
    const fronts::RunConfig cfg = fronts::load_run_config(cfg_path);
    const fronts::Trajectory traj = load_trajectory(csv_path);
    const fronts::Outcome oc = fronts::classify_outcome(traj, cfg.model, cfg.detect);
    std::cout << to_json(oc).dump(2) << "\n";
    return kExitOk;
}

int cmd_speeds(const std::string& cfg_path, const std::string& csv_path) {
    const fronts::RunConfig cfg = fronts::load_run_config(cfg_path);
    const fronts::Trajectory traj = load_trajectory(csv_path);
    const fronts::SpeedReport sr =
        fronts::measure_speeds(traj, cfg.model, cfg.detect);
    json out = to_json(sr);
    try {
        const fronts::RegimeBounds rb = fronts::speed_regime_bounds(cfg.model);
        out["bounds"] = {{"regime", fronts::to_string(rb.regime)},
                         {"prey_lo", rb.prey_lo},
                         {"prey_hi", rb.prey_hi},
                         {"pred_lo", rb.pred_lo},
                         {"pred_hi", rb.pred_hi}};
        auto inside = [](const std::optional<fronts::SpeedEstimate>& e, double lo,
                         double hi) {
            return e ? json(e->slope >= 0.95 * lo && e->slope <= 1.05 * hi)
                     : json(nullptr);
        };
        out["sandwich"] = {{"prey", inside(sr.g_slope, rb.prey_lo, rb.prey_hi)},
                           {"predator", inside(sr.h_slope, rb.pred_lo, rb.pred_hi)}};
    } catch (const fronts::RegimeError&) {
        out["bounds"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_dir) {
    const fronts::SweepSpec spec = fronts::load_sweep_spec(spec_path);
    const fs::path dir(out_dir.empty() ? spec.base.output.directory : out_dir);
    fs::create_directories(dir);
    const fronts::SweepResult result = fronts::run_sweep(spec);
    write_text((dir / "sweep.csv").string(), fronts::sweep_table_csv(spec, result));

    if (spec.base.output.plot && spec.axes.size() == 2) {
        const int cols = int(spec.axes[0].values.size());
        const int rows = int(spec.axes[1].values.size());
        std::vector<fronts::PhaseCell> cells(result.rows.size());
        for (size_t i = 0; i < result.rows.size(); ++i) {
            const size_t c = i / size_t(rows), r = i % size_t(rows);
            cells[r * size_t(cols) + c] = {result.rows[i].axis_values[0],
                                           result.rows[i].axis_values[1],
                                           fronts::sweep_row_label(result.rows[i])};
        }
        write_text((dir / "phase.svg").string(),
                   fronts::svg_phase_map(cells, rows, cols, spec.axes[0].key,
                                         spec.axes[1].key));
    }
    size_t failed = 0;
    for (const auto& r : result.rows) failed += r.failed ? 1 : 0;
    std::cout << "wrote " << (dir / "sweep.csv").string() << " ("
              << result.rows.size() << " rows, " << failed << " failed)\n";
    return kExitOk;
}

int cmd_plot(const std::string& kind, const std::string& input,
             const std::string& cfg_path, const std::string& out_path) {
    std::string svg;
    if (kind == "fronts") {
        if (cfg_path.empty())
            throw fronts::ConfigError("plot fronts needs --config for the speed table");
        const fronts::RunConfig cfg = fronts::load_run_config(cfg_path);
        svg = fronts::svg_fronts_plot(fronts::read_timeseries_csv(input),
                                      fronts::speed_table(cfg.model));
    } else if (kind == "profile") {
        svg = fronts::svg_profile_plot(fronts::read_snapshot_csv(input));
    } else {
        throw fronts::ConfigError("unknown plot kind '" + kind +
                                  "' (expected fronts or profile)");
    }
    write_text(out_path, svg);
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free boundary laboratory for a diffusive prey-predator system"};
    app.require_subcommand(1);

    std::string cfg_path, csv_path, out_dir, profile_path, out_path;
    std::string kind = "cosine", plot_kind = "fronts";
    double nu = 1.0, d = 1.0, theta = 1.0, tol = 1e-6, rho0 = 1.0,
           amplitude = 1.0, thr_tol = 0.05;

    auto* sim = app.add_subcommand("simulate", "Run the coupled two-front solver");
    sim->add_option("config", cfg_path, "run config file")->required();

    auto* sw = app.add_subcommand("semiwave", "Solve the semi-wave speed problem");
    sw->add_option("--nu", nu, "Stefan coefficient")->required();
    sw->add_option("--d", d, "diffusivity")->default_val(1.0);
    sw->add_option("--theta", theta, "growth rate")->default_val(1.0);
    sw->add_option("--tol", tol, "relative tolerance on k")->default_val(1e-6);
    sw->add_option("--profile", profile_path, "write the profile CSV here");

    auto* gs = app.add_subcommand("gamma-star",
                                  "Critical Stefan coefficient by bisection");
    gs->add_option("--d", d, "diffusivity")->default_val(1.0);
    gs->add_option("--theta", theta, "growth rate")->default_val(1.0);
    gs->add_option("--rho0", rho0, "initial front")->required();
    gs->add_option("--kind", kind, "profile kind: cosine|bump")->default_val("cosine");
    gs->add_option("--amplitude", amplitude, "profile amplitude")->default_val(1.0);
    gs->add_option("--tol", thr_tol, "relative bracket width")->default_val(0.05);

    auto* ck = app.add_subcommand("check", "Evaluate the sufficient criteria");
    ck->add_option("config", cfg_path, "run config file")->required();
    ck->add_option("--tol", thr_tol, "threshold bracket width")->default_val(0.05);

    auto* cl = app.add_subcommand("classify", "Classify a recorded time series");
    cl->add_option("--config", cfg_path, "run config file")->required();
    cl->add_option("--input", csv_path, "timeseries.csv")->required();

    auto* sp = app.add_subcommand("speeds", "Measure front speeds from a time series");
    sp->add_option("--config", cfg_path, "run config file")->required();
    sp->add_option("--input", csv_path, "timeseries.csv")->required();

    auto* swp = app.add_subcommand("sweep", "Run a parameter sweep");
    swp->add_option("spec", cfg_path, "sweep spec file")->required();
    swp->add_option("--out", out_dir, "output directory (default: base config's)");

    auto* pl = app.add_subcommand("plot", "Render an SVG plot from stored CSV");
    pl->add_option("--kind", plot_kind, "fronts|profile")->default_val("fronts");
    pl->add_option("--input", csv_path, "input CSV")->required();
    pl->add_option("--config", cfg_path, "run config (fronts kind)");
    pl->add_option("--out", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sim->parsed()) return cmd_simulate(cfg_path);
        if (sw->parsed()) return cmd_semiwave(nu, d, theta, tol, profile_path);
        if (gs->parsed())
            return cmd_gamma_star(d, theta, rho0, kind, amplitude, thr_tol);
        if (ck->parsed()) return cmd_check(cfg_path, thr_tol);
        if (cl->parsed()) return cmd_classify(cfg_path, csv_path);
        if (sp->parsed()) return cmd_speeds(cfg_path, csv_path);
        if (swp->parsed()) return cmd_sweep(cfg_path, out_dir);
        if (pl->parsed()) return cmd_plot(plot_kind, csv_path, cfg_path, out_path);
    } catch (const fronts::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const fronts::RegimeError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const fronts::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const fronts::InvariantError& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const fronts::ThresholdError& e) {
        std::cerr << "inconclusive threshold: " << e.what() << "\n";
        return kExitThreshold;
    } catch (const fronts::SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const fronts::NumericalError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
    return kExitConfig;
}
