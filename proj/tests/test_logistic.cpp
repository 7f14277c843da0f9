#include <cmath>
#include <vector>

#include "doctest.h"
#include "fronts/logistic.hpp"
#include "fronts/semiwave.hpp"

using namespace fronts;

namespace {

// Independent oracle: fully explicit scheme for the same front-fixed problem.
// Forward Euler for diffusion, drift and reaction, ghost-node Neumann wall,
// the same one-sided front derivative. Shares no code with the library solver.
struct ExplicitRun {
    double rho;
    std::vector<double> z;
};

ExplicitRun explicit_oracle(double d, double theta, double gamma, double rho0,
                            const InitialProfile& z0, int n, double dt,
                            double t_end) {
    const double dy = 1.0 / double(n - 1);
    std::vector<double> z(n), znew(n);
    for (int i = 0; i < n; ++i) z[i] = z0.value(rho0 * i * dy);
    z[n - 1] = 0.0;
    double rho = rho0;
    const long steps = std::lround(t_end / dt);
    for (long s = 0; s < steps; ++s) {
        const double zy1 =
            (3.0 * z[n - 1] - 4.0 * z[n - 2] + z[n - 3]) / (2.0 * dy);
        const double rhodot = std::max(0.0, -gamma * zy1 / rho);
        for (int i = 0; i < n - 1; ++i) {
            const double zm = i == 0 ? z[1] : z[i - 1];  // reflecting ghost
            const double zp = z[i + 1];
            const double diff = d / (rho * rho) * (zp - 2.0 * z[i] + zm) / (dy * dy);
            const double drift = (rhodot / rho) * (i * dy) * (zp - zm) / (2.0 * dy);
            znew[i] = z[i] + dt * (diff + drift + z[i] * (theta - z[i]));
            if (znew[i] < 0.0) znew[i] = 0.0;
        }
        znew[n - 1] = 0.0;
        z.swap(znew);
        rho += dt * rhodot;
    }
    return {rho, z};
}

}  // namespace

TEST_SUITE("logistic_fb") {

TEST_CASE("front above the barrier spreads at tiny gamma") {
    SolverConfig cfg;
    cfg.ny = 100;
    cfg.t_max = 120.0;
    const double rho0 = 0.5 * M_PI + 0.1;
    const auto traj = solve_logistic(1.0, 1.0, 0.01, rho0,
                                     InitialProfile::cosine(rho0, 0.5), cfg);
    CHECK(traj.classification == Classification::Spreading);
}

TEST_CASE("small front with huge gamma spreads") {
    SolverConfig cfg;
    cfg.ny = 100;
    cfg.t_max = 10.0;
    const auto traj = solve_logistic(1.0, 1.0, 1000.0, 0.5,
                                     InitialProfile::cosine(0.5, 0.5), cfg);
    CHECK(traj.classification == Classification::Spreading);
}

TEST_CASE("degenerate growth vanishes") {
    SolverConfig cfg;
    cfg.ny = 80;
    cfg.t_max = 30.0;
    const auto traj = solve_logistic(1.0, 1e-8, 0.01, 0.5,
                                     InitialProfile::cosine(0.5, 0.5), cfg);
    CHECK(traj.classification == Classification::Vanishing);
}

TEST_CASE("classifier rules on synthetic records") {
    DetectConfig det;
    const double barrier = 0.5 * M_PI * std::sqrt(1.0) * (1.0 + det.spread_margin);

    SUBCASE("front past the inflated barrier") {
        std::vector<ScalarRecord> recs;
        for (int i = 0; i < 5; ++i)
            recs.push_back({0.1 * i, 1.05 * barrier * (i == 4 ? 1.0 : 0.5), 0.1, 0.8});
        CHECK(classify_scalar(recs, 1.0, 1.0, det) == Classification::Spreading);
    }
    SUBCASE("tiny flat trailing window") {
        std::vector<ScalarRecord> recs;
        for (int i = 0; i < det.window + 2; ++i)
            recs.push_back({0.1 * i, 0.5, 1e-12, 1e-10});
        CHECK(classify_scalar(recs, 1.0, 1.0, det) == Classification::Vanishing);
    }
    SUBCASE("short record stays undecided") {
        std::vector<ScalarRecord> recs{{0.0, 0.5, 0.1, 0.4}, {0.1, 0.51, 0.1, 0.4}};
        CHECK(classify_scalar(recs, 1.0, 1.0, det) == Classification::Undecided);
    }
}

TEST_CASE("front_speed on synthetic trajectories") {
    ScalarTrajectory traj;
    for (int i = 0; i < 40; ++i) traj.records.push_back({0.1 * i, 0.3 * i, 3.0, 1.0});
    CHECK(front_speed(traj).slope == doctest::Approx(3.0));
    for (auto& r : traj.records) r.rho = 7.0;
    CHECK(front_speed(traj).slope == doctest::Approx(0.0));
    traj.records.resize(5);
    CHECK_THROWS_AS(front_speed(traj), DataError);
}

TEST_CASE("spreading speed matches the semi-wave rate") {
    SolverConfig cfg;
    cfg.ny = 200;
    cfg.t_max = 60.0;
    DetectConfig det;
    det.spread_margin = 1e9;  // keep recording, no early stop
    const auto traj = solve_logistic(1.0, 1.0, 5.0, 1.0,
                                     InitialProfile::cosine(1.0, 0.5), cfg, det);
    const double k_ref = kappa(5.0, 1.0, 1.0);
    CHECK(front_speed(traj).slope == doctest::Approx(k_ref).epsilon(0.05));
}

TEST_CASE("independent explicit-scheme oracle agrees") {
    const int n = 80;
    const double dt = 2e-5, T = 2.0;
    const auto z0 = InitialProfile::cosine(1.0, 0.5);
    SolverConfig cfg;
    cfg.ny = n;
    cfg.t_max = T;
    cfg.dt_policy = DtPolicy::Fixed;
    cfg.dt = dt;
    DetectConfig det;
    det.spread_margin = 1e9;
    const auto traj = solve_logistic(1.0, 1.0, 1.0, 1.0, z0, cfg, det);
    const auto oracle = explicit_oracle(1.0, 1.0, 1.0, 1.0, z0, n, dt, T);
    CHECK(traj.rho_final == doctest::Approx(oracle.rho).epsilon(5e-3));
    double max_diff = 0.0;
    for (int i = 0; i < n; ++i)
        max_diff = std::max(max_diff, std::abs(traj.z_final[i] - oracle.z[i]));
    CHECK(max_diff < 5e-3);
}

TEST_CASE("runtime invariants hold along a run") {
    SolverConfig cfg;
    cfg.ny = 100;
    cfg.t_max = 20.0;
    DetectConfig det;
    det.spread_margin = 1e9;
    const auto z0 = InitialProfile::cosine(1.0, 1.4);
    const auto traj = solve_logistic(1.0, 1.0, 2.0, 1.0, z0, cfg, det);
    const double zbound = std::max(1.0, z0.sup()) * (1.0 + 1e-6);
    for (size_t i = 0; i < traj.records.size(); ++i) {
        CHECK(traj.records[i].max_z <= zbound);
        CHECK(traj.records[i].rho_dot >= 0.0);
        if (i > 0) CHECK(traj.records[i].rho >= traj.records[i - 1].rho);
    }
    CHECK_FALSE(traj.clamp_flagged);
}

TEST_CASE("monotone comparison in theta") {
    SolverConfig cfg;
    cfg.ny = 80;
    cfg.t_max = 8.0;
    cfg.dt_policy = DtPolicy::Fixed;
    cfg.dt = 5e-5;
    DetectConfig det;
    det.spread_margin = 1e9;
    const auto z0 = InitialProfile::cosine(1.0, 0.5);
    const auto lo = solve_logistic(1.0, 1.0, 1.0, 1.0, z0, cfg, det);
    const auto hi = solve_logistic(1.0, 1.5, 1.0, 1.0, z0, cfg, det);
    REQUIRE(lo.records.size() == hi.records.size());
    for (size_t i = 1; i < lo.records.size(); ++i)
        CHECK(hi.records[i].rho >= lo.records[i].rho);
}

TEST_CASE("grid refinement is at least first order") {
    const auto rho_at = [](int n, double dt) {
        SolverConfig cfg;
        cfg.ny = n;
        cfg.t_max = 2.0;
        cfg.dt_policy = DtPolicy::Fixed;
        cfg.dt = dt;
        DetectConfig det;
        det.spread_margin = 1e9;
        return solve_logistic(1.0, 1.0, 2.0, 1.0,
                              InitialProfile::cosine(1.0, 0.5), cfg, det)
            .rho_final;
    };
    // space refinement at fixed tiny dt
    const double s1 = rho_at(50, 1e-5), s2 = rho_at(100, 1e-5), s3 = rho_at(200, 1e-5);
    CHECK(std::abs(s1 - s2) / std::abs(s2 - s3) >= 1.8);
    // time refinement at fixed fine grid
    const double t1 = rho_at(100, 4e-5), t2 = rho_at(100, 2e-5), t3 = rho_at(100, 1e-5);
    const double ratio = std::abs(t1 - t2) / std::abs(t2 - t3);
    CHECK(std::log2(ratio) >= 0.9);  // first order in time
}

}  // TEST_SUITE
