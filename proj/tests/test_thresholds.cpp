#include <cmath>

#include "doctest.h"
#include "fronts/logistic.hpp"
#include "fronts/thresholds.hpp"

using namespace fronts;

namespace {

ThresholdOptions fast_options() {
    ThresholdOptions opt;
    opt.tol = 0.3;
    opt.solver.ny = 64;
    opt.solver.t_max = 30.0;
    opt.detect.t_cap = 120.0;
    return opt;
}

}  // namespace

TEST_SUITE("thresholds") {

TEST_CASE("front at or above the barrier spreads for every gamma") {
    const double rho0 = 0.5 * M_PI + 0.1;
    const auto g = critical_gamma(1.0, 1.0, rho0,
                                  InitialProfile::cosine(rho0, 0.5), fast_options());
    CHECK(g.spreads_for_all_gamma);
    CHECK(g.runs == 0);
}

TEST_CASE("finite threshold with a consistent bracket") {
    const auto opt = fast_options();
    const auto z0 = InitialProfile::cosine(0.8, 0.5);
    const auto g = critical_gamma(1.0, 1.0, 0.8, z0, opt);
    CHECK_FALSE(g.spreads_for_all_gamma);
    CHECK(g.lo > 0.0);
    CHECK(g.hi > g.lo);
    CHECK(g.hi / g.lo <= 1.0 + opt.tol + 1e-12);
    CHECK(g.value >= g.lo);
    CHECK(g.value <= g.hi);
    CHECK(g.runs > 0);

    // the bracket endpoints really classify as promised
    SolverConfig cfg = opt.solver;
    cfg.t_max = opt.detect.t_cap;
    CHECK(solve_logistic(1.0, 1.0, g.lo, 0.8, z0, cfg, opt.detect).classification !=
          Classification::Spreading);
    CHECK(solve_logistic(1.0, 1.0, g.hi, 0.8, z0, cfg, opt.detect).classification ==
          Classification::Spreading);
}

TEST_CASE("threshold decreases in theta") {
    const auto opt = fast_options();
    const auto z0 = InitialProfile::cosine(0.8, 0.5);
    const auto g1 = critical_gamma(1.0, 1.0, 0.8, z0, opt);
    const auto g15 = critical_gamma(1.0, 1.5, 0.8, z0, opt);
    CHECK(g15.value < g1.value);
}

TEST_CASE("named thresholds: shortcut and coincidence at c = 0") {
    ModelParams p;
    p.a = 1.0;
    p.c = 0.0;
    p.g0 = 2.0;  // above the prey barrier pi/2
    p.h0 = 1.7;  // above pi/2 as well
    const auto t = named_thresholds(p, InitialProfile::cosine(p.g0, 0.5),
                                    InitialProfile::cosine(p.h0, 0.5), fast_options());
    CHECK(t.beta_star.spreads_for_all_gamma);
    CHECK(t.mu_star.spreads_for_all_gamma);
    // c = 0 collapses the two predator tuples onto the same computation
    CHECK(t.mu_lower.spreads_for_all_gamma == t.mu_star.spreads_for_all_gamma);
}

TEST_CASE("named thresholds ordering mu_lower <= mu_star") {
    ModelParams p;
    p.a = 1.0;
    p.c = 0.8;
    p.g0 = 2.0;
    p.h0 = 0.6;
    const auto t = named_thresholds(p, InitialProfile::cosine(p.g0, 0.5),
                                    InitialProfile::cosine(p.h0, 0.4), fast_options());
    REQUIRE_FALSE(t.mu_star.spreads_for_all_gamma);
    REQUIRE_FALSE(t.mu_lower.spreads_for_all_gamma);
    CHECK(t.mu_lower.value <= t.mu_star.value * (1.0 + fast_options().tol));
}

TEST_CASE("separation condition algebra") {
    ModelParams p;
    p.a = 1.0;
    p.b = 0.05;
    p.c = 0.1;
    p.d = 1.0;
    p.beta = 1.0;
    p.mu = 0.05;
    p.g0 = 5.5;
    p.h0 = 0.5;
    const auto u0 = InitialProfile::cosine(p.g0, 1.0);
    const auto v0 = InitialProfile::cosine(p.h0, 0.1);
    const auto rep = separation_condition(p, u0, v0);
    REQUIRE(rep.applicable);
    CHECK(rep.sigma == doctest::Approx(rep.K * p.mu));
    CHECK(rep.sigma < std::sqrt(2.0 * p.d * p.a));
    // eigenrelation consistency: pi/L = sqrt(4d(a/2) - sigma^2) / (2d)
    CHECK(M_PI / rep.L_sigma ==
          doctest::Approx(std::sqrt(4.0 * p.d * (p.a / 2.0) - rep.sigma * rep.sigma) /
                          (2.0 * p.d))
              .epsilon(1e-12));
    CHECK(rep.delta_sigma > 0.0);

    // huge mu pushes sigma past sqrt(2da): marked not applicable
    ModelParams q = p;
    q.mu = 100.0;
    const auto rep2 = separation_condition(q, u0, v0);
    CHECK_FALSE(rep2.applicable);
    CHECK_FALSE(rep2.satisfied);
}

TEST_CASE("criteria report shapes") {
    const auto opt = fast_options();

    SUBCASE("predator-vanishing criterion satisfied at small mu") {
        ModelParams p;
        p.a = 1.0;
        p.b = 0.2;
        p.c = 0.5;
        p.g0 = 2.0;  // large prey habitat
        p.h0 = 0.5 * 0.5 * M_PI * std::sqrt(1.0 / 1.5);
        p.mu = 1e-3;
        p.beta = 1.0;
        const auto rep = check_criteria(p, InitialProfile::cosine(p.g0, 0.8),
                                        InitialProfile::cosine(p.h0, 0.4), opt);
        REQUIRE(rep.entries.size() == 6);
        const auto& e513 = rep.entries[2];
        CHECK(e513.theorem == "Thm5.1(iii)");
        CHECK(e513.status == CriterionStatus::Satisfied);
        const auto& e52 = rep.entries[3];
        CHECK(e52.theorem == "Thm5.2");
        CHECK(e52.status == CriterionStatus::Satisfied);  // g0 above the barrier
    }

    SUBCASE("equal speed arguments break the strong-predation set membership") {
        ModelParams p;
        p.a = 1.0;
        p.b = 2.0;
        p.c = 0.1;
        p.d = 1.0;
        p.beta = 1.0;
        p.mu = 1.0;
        p.g0 = 2.0;
        p.h0 = 1.7;
        const auto rep = check_criteria(p, InitialProfile::cosine(p.g0, 0.8),
                                        InitialProfile::cosine(p.h0, 0.4), opt);
        const auto& e53 = rep.entries[4];
        CHECK(e53.theorem == "Thm5.3");
        CHECK(e53.status == CriterionStatus::NotSatisfied);  // equal kappa values

        ModelParams q = p;
        q.beta = 0.1;
        q.mu = 10.0;
        const auto rep2 = check_criteria(q, InitialProfile::cosine(q.g0, 0.8),
                                         InitialProfile::cosine(q.h0, 0.4), opt);
        CHECK(rep2.entries[4].status == CriterionStatus::Satisfied);
    }
}

}  // TEST_SUITE
