#include <cmath>

#include "doctest.h"
#include "fronts/analysis.hpp"

using namespace fronts;

namespace {

Trajectory synthetic_trajectory(double g_rate, double h_rate, double umax,
                                double vmax, int n = 60) {
    Trajectory traj;
    for (int i = 0; i < n; ++i) {
        CoupledRecord r{};
        r.t = 0.5 * i;
        r.g = 1.0 + g_rate * r.t;
        r.h = 0.8 + h_rate * r.t;
        r.gdot = g_rate;
        r.hdot = h_rate;
        r.umax = umax;
        r.vmax = vmax;
        r.u_at_0 = umax;
        r.v_at_0 = vmax;
        traj.records.push_back(r);
    }
    return traj;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("outcome classification on synthetic runs") {
    ModelParams p;
    p.a = 2.0;
    p.b = 0.5;
    p.c = 0.5;

    SUBCASE("both fronts racing out") {
        const auto traj = synthetic_trajectory(0.5, 0.6, 1.0, 1.2);
        const Outcome oc = classify_outcome(traj, p);
        CHECK(oc.prey == Classification::Spreading);
        CHECK(oc.predator == Classification::Spreading);
    }
    SUBCASE("flat fronts with tiny densities") {
        const auto traj = synthetic_trajectory(0.0, 0.0, 1e-9, 1e-9);
        const Outcome oc = classify_outcome(traj, p);
        CHECK(oc.prey == Classification::Vanishing);
        CHECK(oc.predator == Classification::Vanishing);
    }
    SUBCASE("short indecisive record") {
        const auto traj = synthetic_trajectory(0.001, 0.001, 0.5, 0.5, 4);
        const Outcome oc = classify_outcome(traj, p);
        CHECK(oc.prey == Classification::Undecided);
        CHECK(oc.predator == Classification::Undecided);
    }
}

TEST_CASE("measured slopes recover the synthetic rates") {
    ModelParams p;
    p.a = 2.0;
    p.b = 0.5;
    p.c = 0.5;
    p.beta = 2.0;
    p.mu = 2.0;
    const auto traj = synthetic_trajectory(0.5, 0.6, 1.0, 1.2);
    const SpeedReport rep = measure_speeds(traj, p);
    REQUIRE(rep.g_slope.has_value());
    REQUIRE(rep.h_slope.has_value());
    CHECK(rep.g_slope->slope == doctest::Approx(0.5));
    CHECK(rep.h_slope->slope == doctest::Approx(0.6));
    REQUIRE(rep.table.kund_beta.has_value());
    CHECK(*rep.table.kund_beta <= rep.table.kbar_beta);
    CHECK(rep.table.kund_mu <= rep.table.kbar_mu);
}

TEST_CASE("moving-frame error windows") {
    std::vector<Snapshot> snaps;
    for (int k = 1; k <= 3; ++k) {
        Snapshot s;
        s.t = double(k);
        for (int i = 0; i <= 100; ++i) {
            const double x = 10.0 * i / 100.0;
            s.x.push_back(x);
            s.u.push_back(1.2 + 0.1 * x);  // grows away from the limit
            s.v.push_back(1.6);
        }
        snaps.push_back(s);
    }

    SUBCASE("degenerate zero-speed window collapses to the origin") {
        const auto errs = moving_frame_error(snaps, 0.0, 1.2, 1.6);
        REQUIRE(errs.size() == 3);
        for (const auto& e : errs) {
            CHECK(e.err_u == doctest::Approx(0.0));
            CHECK(e.err_v == doctest::Approx(0.0));
        }
    }
    SUBCASE("sup over the expanding window") {
        const auto errs = moving_frame_error(snaps, 2.0, 1.2, 1.6);
        CHECK(errs[0].err_u == doctest::Approx(0.1 * 2.0));
        CHECK(errs[2].err_u == doctest::Approx(0.1 * 6.0));
    }
    SUBCASE("window past the stored domain fails") {
        CHECK_THROWS_AS(moving_frame_error(snaps, 11.0, 1.2, 1.6), DataError);
    }
}

TEST_CASE("regime-specific speed expectations") {
    SUBCASE("weak-diffusion regime window") {
        ModelParams p;
        p.d = 0.25;
        p.a = 2.0;
        p.b = 0.1;
        p.c = 0.1;
        const RegimeBounds rb = speed_regime_bounds(p);
        CHECK(rb.regime == SpeedRegime::W);
        CHECK(rb.prey_lo == doctest::Approx(2.0 * std::sqrt(0.47)));
        CHECK(rb.prey_hi == doctest::Approx(2.0 * std::sqrt(0.475)));
        CHECK(rb.pred_lo == doctest::Approx(2.0));
        CHECK(rb.pred_hi == doctest::Approx(2.0));
    }
    SUBCASE("strong-diffusion regime pins the prey speed") {
        ModelParams p;
        p.d = 8.0;
        p.a = 2.0;
        p.b = 0.1;
        p.c = 0.1;
        const RegimeBounds rb = speed_regime_bounds(p);
        CHECK(rb.regime == SpeedRegime::S);
        CHECK(rb.prey_lo == doctest::Approx(8.0));
        CHECK(rb.prey_hi == doctest::Approx(8.0));
        CHECK(rb.pred_lo == doctest::Approx(2.0 * std::sqrt(1.2 * 0.99)));
        CHECK(rb.pred_hi == doctest::Approx(2.0 * std::sqrt(1.2)));
    }
    SUBCASE("b = 0 collapses the weak-regime window") {
        ModelParams p;
        p.d = 0.25;
        p.a = 2.0;
        p.b = 0.0;
        p.c = 0.1;
        const RegimeBounds rb = speed_regime_bounds(p);
        CHECK(rb.regime == SpeedRegime::W);
        CHECK(rb.prey_lo == doctest::Approx(rb.prey_hi));
        CHECK(rb.prey_lo == doctest::Approx(2.0 * std::sqrt(0.5)));
    }
    SUBCASE("violated hypothesis") {
        ModelParams p;
        p.a = 1.0;
        p.b = 3.0;
        p.c = 0.5;
        CHECK_THROWS_AS(speed_regime_bounds(p), RegimeError);
    }
}

}  // TEST_SUITE
