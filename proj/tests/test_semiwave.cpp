#include <cmath>
#include <random>

#include "doctest.h"
#include "fronts/semiwave.hpp"

using namespace fronts;

TEST_SUITE("semiwave") {

TEST_CASE("large-nu limit: k approaches 2 sqrt(theta d) monotonically") {
    const double nus[] = {10.0, 100.0, 1000.0, 10000.0};
    double prev = 0.0;
    for (const double nu : nus) {
        const double k = kappa(nu, 1.0, 1.0);
        CHECK(k > prev);          // monotone along the sweep
        CHECK(k < 2.0);           // strict upper bound
        prev = k;
    }
    CHECK(prev / 2.0 >= 0.90);
    CHECK(prev / 2.0 < 1.00);
}

TEST_CASE("small-nu limit: k ~ nu / sqrt(3)") {
    const double k = kappa(1e-3, 1.0, 1.0);
    CHECK(k * std::sqrt(3.0) / 1e-3 == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("scaling identity at a fixed triple") {
    const double k = kappa(5.0, 2.0, 3.0);
    const double k_scaled = std::sqrt(3.0 * 2.0) * kappa(5.0 * 3.0 / 2.0, 1.0, 1.0);
    CHECK(std::abs(k - k_scaled) / k <= 1e-4);
}

TEST_CASE("scaling identity on randomized triples") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> dist(0.1, 10.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double nu = dist(rng), d = dist(rng), th = dist(rng);
        const double k = kappa(nu, d, th);
        const double k_scaled = std::sqrt(th * d) * kappa(nu * th / d, 1.0, 1.0);
        CAPTURE(nu);
        CAPTURE(d);
        CAPTURE(th);
        CHECK(std::abs(k - k_scaled) / k <= 1e-4);
    }
}

TEST_CASE("strict monotonicity in nu and theta") {
    double prev = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double nu = 0.5 + 0.7 * i;
        const double k = kappa(nu, 1.0, 1.0);
        CHECK(k > prev);
        prev = k;
    }
    prev = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double th = 0.5 + 0.4 * i;
        const double k = kappa(1.0, 1.0, th);
        CHECK(k > prev);
        CHECK(k < 2.0 * std::sqrt(th));
        prev = k;
    }
    CHECK(kappa(1.0, 1.0, 1.0) < kappa(2.0, 1.0, 1.0));
    CHECK(kappa(1.0, 1.0, 1.0) < kappa(1.0, 1.0, 2.0));
}

TEST_CASE("profile satisfies the boundary-value structure") {
    const double nu = 2.0, d = 1.5, th = 0.8;
    const SemiWave sw = solve_semiwave(nu, d, th);
    CHECK(sw.k > 0.0);
    CHECK(sw.k < 2.0 * std::sqrt(th * d));
    REQUIRE(sw.profile.size() > 10);
    CHECK(sw.profile.front().first == 0.0);
    CHECK(sw.profile.front().second == doctest::Approx(0.0));
    for (size_t i = 1; i < sw.profile.size(); ++i) {
        CHECK(sw.profile[i].first > sw.profile[i - 1].first);
        CHECK(sw.profile[i].second > sw.profile[i - 1].second);  // q increasing
        CHECK(sw.profile[i].second < th);                        // q below theta
    }
    // q approaches theta at the truncated end
    CHECK(sw.profile.back().second == doctest::Approx(th).epsilon(1e-4));
    // q'(0) = k/nu from the first few samples
    const auto& [y1, q1] = sw.profile[1];
    CHECK(q1 / y1 == doctest::Approx(sw.k / nu).epsilon(0.02));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(solve_semiwave(-1.0, 1.0, 1.0), RegimeError);
    CHECK_THROWS_AS(solve_semiwave(1.0, 0.0, 1.0), RegimeError);
    CHECK_THROWS_AS(solve_semiwave(1.0, 1.0, 1.0, 1.0), RegimeError);  // tol too big
}

TEST_CASE("speed table structure") {
    ModelParams p;
    p.beta = 2.0;
    p.mu = 3.0;
    p.d = 1.0;
    p.a = 2.0;

    SUBCASE("decoupled: upper and lower rates coincide") {
        p.b = 0.0;
        p.c = 0.0;
        const SpeedTable t = speed_table(p);
        REQUIRE(t.kund_beta.has_value());
        CHECK(*t.kund_beta == doctest::Approx(t.kbar_beta).epsilon(1e-12));
        CHECK(t.kund_mu == doctest::Approx(t.kbar_mu).epsilon(1e-12));
    }
    SUBCASE("a - b(1+ac) = 1 reduces the lower prey rate") {
        p.b = 0.5;
        p.c = 0.5;
        const SpeedTable t = speed_table(p);
        REQUIRE(t.kund_beta.has_value());
        CHECK(*t.kund_beta == doctest::Approx(kappa(p.beta, p.d, 1.0)).epsilon(1e-10));
        CHECK(*t.kund_beta < t.kbar_beta);  // strict monotonicity in theta
        CHECK(t.kund_mu < t.kbar_mu);
    }
    SUBCASE("strong predation drops the lower prey rate") {
        p.a = 1.0;
        p.b = 3.0;
        p.c = 0.5;
        const SpeedTable t = speed_table(p);
        CHECK_FALSE(t.kund_beta.has_value());
    }
}

}  // TEST_SUITE
