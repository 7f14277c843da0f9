#include "fronts/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace fronts {
namespace {

int effective_concurrency(int configured) {
    if (const char* env = std::getenv("FRONTS_LV_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (const std::exception&) {
        }
    }
    return configured >= 1 ? configured : 1;
}

SweepRow run_point(const SweepSpec& spec, const std::vector<size_t>& index) {
    SweepRow row;
    RunConfig cfg = spec.base;
    for (size_t a = 0; a < spec.axes.size(); ++a) {
        const double v = spec.axes[a].values[index[a]];
        row.axis_values.push_back(v);
        set_config_value(cfg, spec.axes[a].key, v);
    }
    try {
        cfg.validate();
        const Trajectory traj = simulate(cfg.model, cfg.prey_profile(),
                                         cfg.predator_profile(), cfg.solver,
                                         cfg.detect);
        const Outcome oc = classify_outcome(traj, cfg.model, cfg.detect);
        row.prey = oc.prey;
        row.predator = oc.predator;
        try {
            const SpeedReport sr = measure_speeds(traj, cfg.model, cfg.detect);
            if (sr.g_slope) row.g_speed = sr.g_slope->slope;
            if (sr.h_slope) row.h_speed = sr.h_slope->slope;
        } catch (const DataError&) {
            // too few trailing records for a fit: leave the speeds blank
        }
    } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
    }
    return row;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.axes.empty()) throw ConfigError("sweep needs at least one axis");
    std::vector<size_t> sizes;
    size_t total = 1;
    for (const auto& ax : spec.axes) {
        sizes.push_back(ax.values.size());
        total *= ax.values.size();
    }

    SweepResult result;
    result.rows.resize(total);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= total) return;
            std::vector<size_t> index(sizes.size());
            size_t rem = i;
            for (size_t a = sizes.size(); a-- > 0;) {
                index[a] = rem % sizes[a];
                rem /= sizes[a];
            }
            result.rows[i] = run_point(spec, index);
        }
    };

    const int nthreads =
        int(std::min<size_t>(size_t(effective_concurrency(spec.concurrency)), total));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(size_t(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return result;
}

std::string sweep_row_label(const SweepRow& row) {
    if (row.failed) return "failed";
    const bool ps = row.prey == Classification::Spreading;
    const bool qs = row.predator == Classification::Spreading;
    if (ps && qs) return "both";
    if (ps) return "prey";
    if (qs) return "predator";
    return "none";
}

std::string sweep_table_csv(const SweepSpec& spec, const SweepResult& result) {
    std::ostringstream o;
    for (const auto& ax : spec.axes) o << ax.key << ",";
    o << "prey,predator,g_speed,h_speed,error\n";
    char buf[48];
    auto g = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    for (const auto& row : result.rows) {
        for (const double v : row.axis_values) o << g(v) << ",";
        if (row.failed) {
            std::string msg = row.error;
            for (char& c : msg)
                if (c == ',' || c == '\n') c = ';';
            o << "failed,failed,,," << msg << "\n";
            continue;
        }
        o << to_string(row.prey) << "," << to_string(row.predator) << ",";
        o << (row.g_speed ? g(*row.g_speed) : "") << ","
          << (row.h_speed ? g(*row.h_speed) : "") << ",\n";
    }
    return o.str();
}

}  // namespace fronts
