#include "fronts/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fronts/fit.hpp"

namespace fronts {
namespace {

struct SpeciesView {
    double (*front)(const CoupledRecord&);
    double (*front_dot)(const CoupledRecord&);
    double (*dens)(const CoupledRecord&);
};

Classification classify_species(const std::vector<CoupledRecord>& recs,
                                const SpeciesView& v, double barrier,
                                const DetectConfig& detect, WindowStats& stats) {
    const int n = int(recs.size());
    const int w = std::min(n, detect.window);
    stats = {};
    if (n == 0) return Classification::Undecided;
    for (int i = n - w; i < n; ++i) {
        stats.max_density = std::max(stats.max_density, v.dens(recs[i]));
        stats.max_front_dot = std::max(stats.max_front_dot, v.front_dot(recs[i]));
    }
    stats.front_growth = v.front(recs[n - 1]) - v.front(recs[n - w]);

    for (const auto& r : recs)
        if (v.front(r) > barrier) return Classification::Spreading;
    if (n >= detect.window && stats.max_density < detect.eps_vanish &&
        stats.max_front_dot < detect.eps_vanish)
        return Classification::Vanishing;
    return Classification::Undecided;
}

SpeedEstimate trailing_slope(const std::vector<CoupledRecord>& recs,
                             double (*front)(const CoupledRecord&)) {
    const int n = int(recs.size());
    const int start = n / 2;
    if (n - start < 10) throw DataError("speed fit needs >= 10 trailing records");
    std::vector<double> ts, xs;
    for (int i = start; i < n; ++i) {
        ts.push_back(recs[i].t);
        xs.push_back(front(recs[i]));
    }
    const auto f = detail::linear_fit(ts, xs);
    return {f.slope, f.stderr_, f.points};
}

}  // namespace

const char* to_string(SpeedRegime r) {
    switch (r) {
        case SpeedRegime::W: return "W";
        case SpeedRegime::S: return "S";
        case SpeedRegime::Neither: return "neither";
    }
    return "neither";
}

Outcome classify_outcome(const Trajectory& traj, const ModelParams& p,
                         const DetectConfig& detect) {
    Outcome out;
    const double theta_eff = p.a - p.b * (1.0 + p.a * p.c);
    const double prey_barrier =
        theta_eff > 0.0
            ? 0.5 * M_PI * std::sqrt(p.d / theta_eff) * (1.0 + detect.spread_margin)
            : std::numeric_limits<double>::infinity();
    const double pred_barrier = 0.5 * M_PI * (1.0 + detect.spread_margin);

    const SpeciesView prey{[](const CoupledRecord& r) { return r.g; },
                           [](const CoupledRecord& r) { return r.gdot; },
                           [](const CoupledRecord& r) { return r.umax; }};
    const SpeciesView pred{[](const CoupledRecord& r) { return r.h; },
                           [](const CoupledRecord& r) { return r.hdot; },
                           [](const CoupledRecord& r) { return r.vmax; }};
    out.prey = classify_species(traj.records, prey, prey_barrier, detect,
                                out.prey_evidence);
    out.predator = classify_species(traj.records, pred, pred_barrier, detect,
                                    out.predator_evidence);
    return out;
}

SpeedReport measure_speeds(const Trajectory& traj, const ModelParams& p,
                           const DetectConfig& detect) {
    SpeedReport rep;
    rep.table = speed_table(p);
    rep.constants = speed_constants(p);

    const double theta_eff = p.a - p.b * (1.0 + p.a * p.c);
    if (p.d * p.a < 1.0 && theta_eff > 0.0)
        rep.regime = SpeedRegime::W;
    else if (theta_eff > 0.0 && p.d * theta_eff > 1.0 + p.a * p.c)
        rep.regime = SpeedRegime::S;

    const Outcome oc = classify_outcome(traj, p, detect);
    if (oc.prey == Classification::Spreading)
        rep.g_slope = trailing_slope(traj.records,
                                     [](const CoupledRecord& r) { return r.g; });
    if (oc.predator == Classification::Spreading)
        rep.h_slope = trailing_slope(traj.records,
                                     [](const CoupledRecord& r) { return r.h; });
    return rep;
}

std::vector<FrameError> moving_frame_error(const std::vector<Snapshot>& snapshots,
                                           double k0, double A, double B) {
    if (k0 < 0.0) throw RegimeError("moving_frame_error requires k0 >= 0");
    std::vector<FrameError> out;
    out.reserve(snapshots.size());
    for (const auto& s : snapshots) {
        const double xr = k0 * s.t;
        if (s.x.empty() || xr > s.x.back())
            throw DataError("moving-frame window exceeds the snapshot domain");
        double eu = std::abs(s.u[0] - A), ev = std::abs(s.v[0] - B);
        for (size_t i = 1; i < s.x.size() && s.x[i] <= xr; ++i) {
            eu = std::max(eu, std::abs(s.u[i] - A));
            ev = std::max(ev, std::abs(s.v[i] - B));
        }
        out.push_back({s.t, eu, ev});
    }
    return out;
}

RegimeBounds speed_regime_bounds(const ModelParams& p, double tol) {
    const SpeedConstants sc = speed_constants(p);
    const double theta_eff = p.a - p.b * (1.0 + p.a * p.c);
    if (!(theta_eff > 0.0))
        throw RegimeError("speed_regime_bounds requires a > b(1+ac)");

    RegimeBounds rb;
    if (p.d * p.a < 1.0) {
        rb.regime = SpeedRegime::W;
        rb.prey_lo = *sc.c3;
        rb.prey_hi = *sc.c4;
        rb.pred_lo = rb.pred_hi = 2.0;
    } else if (p.d * theta_eff > 1.0 + p.a * p.c) {
        rb.regime = SpeedRegime::S;
        rb.prey_lo = rb.prey_hi = sc.c1;
        rb.pred_lo = *sc.c5;
        rb.pred_hi = sc.c2;
    } else {
        rb.regime = SpeedRegime::Neither;
        const SpeedTable t = speed_table(p, tol);
        rb.prey_lo = t.kund_beta.value_or(0.0);
        rb.prey_hi = t.kbar_beta;
        rb.pred_lo = t.kund_mu;
        rb.pred_hi = t.kbar_mu;
    }
    return rb;
}

}  // namespace fronts
