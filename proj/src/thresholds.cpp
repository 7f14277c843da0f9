#include "fronts/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fronts/semiwave.hpp"

namespace fronts {
namespace {

struct ClassifyResult {
    Classification cls;
    bool from_undecided = false;
};

// Classify one gamma by simulation, retrying with a doubled horizon while the
// run stays Undecided; a persistent Undecided is assigned to the Vanishing
// side, which biases the returned threshold upward (conservative for the
// beta <= beta* style criteria).
ClassifyResult classify_gamma(double d, double theta, double gamma, double rho0,
                              const InitialProfile& z0, const ThresholdOptions& opt,
                              int& runs) {
    SolverConfig cfg = opt.solver;
    for (int attempt = 0; attempt < 4; ++attempt) {
        ++runs;
        const auto traj = solve_logistic(d, theta, gamma, rho0, z0, cfg, opt.detect);
        if (traj.classification != Classification::Undecided)
            return {traj.classification, false};
        if (cfg.t_max * 2.0 > opt.detect.t_cap) break;
        cfg.t_max *= 2.0;
    }
    return {Classification::Vanishing, true};
}

}  // namespace

GammaThreshold critical_gamma(double d, double theta, double rho0,
                              const InitialProfile& z0, const ThresholdOptions& opt) {
    GammaThreshold out;
    const double barrier = 0.5 * M_PI * std::sqrt(d / theta);
    if (rho0 >= barrier) {
        out.spreads_for_all_gamma = true;
        return out;
    }

    int runs = 0;
    auto classify = [&](double gamma) {
        const auto r = classify_gamma(d, theta, gamma, rho0, z0, opt, runs);
        out.flagged = out.flagged || r.from_undecided;
        return r.cls;
    };

    // bracket discovery by powers of 4 from gamma = 1
    double lo = 0.0, hi = 0.0;
    double gamma = 1.0;
    Classification c = classify(gamma);
    if (c == Classification::Spreading) {
        hi = gamma;
        for (int i = 0; i < 12 && lo == 0.0; ++i) {
            gamma /= 4.0;
            if (classify(gamma) == Classification::Vanishing) lo = gamma;
            else hi = gamma;
        }
    } else {
        lo = gamma;
        for (int i = 0; i < 12 && hi == 0.0; ++i) {
            gamma *= 4.0;
            if (classify(gamma) == Classification::Spreading) hi = gamma;
            else lo = gamma;
        }
    }
    if (lo == 0.0 || hi == 0.0) {
        out.runs = runs;
        throw ThresholdError("critical_gamma: no consistent bracket after 12 doublings");
    }

    while (hi / lo > 1.0 + opt.tol) {
        const double mid = std::sqrt(lo * hi);
        if (classify(mid) == Classification::Spreading) hi = mid;
        else lo = mid;
    }
    out.lo = lo;
    out.hi = hi;
    out.value = std::sqrt(lo * hi);
    out.runs = runs;
    return out;
}

NamedThresholds named_thresholds(const ModelParams& p, const InitialProfile& u0,
                                 const InitialProfile& v0, const ThresholdOptions& opt) {
    p.validate();
    NamedThresholds t;
    t.beta_star = critical_gamma(p.d, p.a, p.g0, u0, opt);
    t.mu_star = critical_gamma(1.0, 1.0, p.h0, v0, opt);
    t.mu_lower = critical_gamma(1.0, 1.0 + p.a * p.c, p.h0, v0, opt);
    return t;
}

SeparationReport separation_condition(const ModelParams& p, const InitialProfile& u0,
                                      const InitialProfile& v0) {
    const DerivedConstants dc = derive_constants(p, u0, v0);
    SeparationReport rep;
    rep.K = dc.K;
    rep.sigma = dc.K * p.mu;
    const double sigma_max = std::sqrt(2.0 * p.d * p.a);
    if (rep.sigma >= sigma_max) return rep;  // not applicable
    rep.applicable = true;

    const double L = 2.0 * p.d * M_PI / std::sqrt(2.0 * p.d * p.a - rep.sigma * rep.sigma);
    rep.L_sigma = L;

    auto delta_on_grid = [&](int n) {
        double inf_ratio = std::numeric_limits<double>::infinity();
        double phi_max = 0.0;
        for (int j = 1; j < n; ++j) {
            const double y = L * double(j) / double(n);
            const double phi = std::exp(-rep.sigma * y / (2.0 * p.d)) * std::sin(M_PI * y / L);
            phi_max = std::max(phi_max, phi);
            inf_ratio = std::min(inf_ratio, u0.value(y + p.h0) / phi);
        }
        return std::min(inf_ratio, 0.5 * p.a / phi_max);
    };
    const double d1 = delta_on_grid(10000);
    rep.delta_sigma = delta_on_grid(40000);  // refined once to confirm stability
    (void)d1;

    rep.condition_ok =
        rep.sigma < p.beta * rep.delta_sigma * (M_PI / L) * std::exp(-rep.sigma * L / (2.0 * p.d));
    rep.gap_ok = p.g0 - p.h0 > L;
    rep.satisfied = rep.condition_ok && rep.gap_ok;
    return rep;
}

CriteriaReport check_criteria(const ModelParams& p, const InitialProfile& u0,
                              const InitialProfile& v0, const ThresholdOptions& opt) {
    p.validate();
    CriteriaReport rep;
    const double prey_barrier = 0.5 * M_PI * std::sqrt(p.d / p.a);
    const double pred_barrier = 0.5 * M_PI * std::sqrt(1.0 / (1.0 + p.a * p.c));

    std::optional<GammaThreshold> beta_star, mu_star, mu_lower;
    auto get_beta_star = [&]() -> GammaThreshold& {
        if (!beta_star) beta_star = critical_gamma(p.d, p.a, p.g0, u0, opt);
        return *beta_star;
    };
    auto get_mu_star = [&]() -> GammaThreshold& {
        if (!mu_star) mu_star = critical_gamma(1.0, 1.0, p.h0, v0, opt);
        return *mu_star;
    };
    auto get_mu_lower = [&]() -> GammaThreshold& {
        if (!mu_lower) mu_lower = critical_gamma(1.0, 1.0 + p.a * p.c, p.h0, v0, opt);
        return *mu_lower;
    };

    // Criterion 5.1(i): small prey habitat and beta at or below beta* keep the
    // prey front bounded.
    {
        CriterionEntry e;
        e.theorem = "Thm5.1(i)";
        e.prediction = "g_inf finite (prey vanishes)";
        e.hypothesis = {{"g0", p.g0}, {"prey_barrier", prey_barrier}, {"beta", p.beta}};
        if (p.g0 >= prey_barrier) {
            e.status = CriterionStatus::NotApplicable;
            e.note = "g0 not below (pi/2) sqrt(d/a)";
        } else {
            try {
                const auto& bs = get_beta_star();
                e.hypothesis.push_back({"beta_star", bs.value});
                e.status = p.beta <= bs.value ? CriterionStatus::Satisfied
                                              : CriterionStatus::NotSatisfied;
                if (bs.flagged) e.note = "beta* bisection contained undecided runs";
            } catch (const ThresholdError& err) {
                e.status = CriterionStatus::Inconclusive;
                e.note = err.what();
            }
        }
        rep.entries.push_back(std::move(e));
    }

    // Criterion 5.1(ii): h0 >= pi/2, or mu above mu*, forces predator spreading.
    {
        CriterionEntry e;
        e.theorem = "Thm5.1(ii)";
        e.prediction = "h_inf infinite (predator spreads)";
        e.hypothesis = {{"h0", p.h0}, {"mu", p.mu}};
        if (p.h0 >= 0.5 * M_PI) {
            e.status = CriterionStatus::Satisfied;
            e.note = "h0 >= pi/2";
        } else {
            try {
                const auto& ms = get_mu_star();
                e.hypothesis.push_back({"mu_star", ms.value});
                e.status = p.mu > ms.value ? CriterionStatus::Satisfied
                                           : CriterionStatus::NotSatisfied;
            } catch (const ThresholdError& err) {
                e.status = CriterionStatus::Inconclusive;
                e.note = err.what();
            }
        }
        rep.entries.push_back(std::move(e));
    }

    // Criterion 5.1(iii): u0 <= a, small predator habitat, mu below the lower
    // threshold keep the predator front bounded.
    bool thm513_satisfied = false;
    {
        CriterionEntry e;
        e.theorem = "Thm5.1(iii)";
        e.prediction = "h_inf finite (predator vanishes)";
        e.hypothesis = {{"sup_u0", u0.sup()}, {"a", p.a}, {"h0", p.h0},
                        {"pred_barrier", pred_barrier}, {"mu", p.mu}};
        if (u0.sup() > p.a || p.h0 >= pred_barrier) {
            e.status = CriterionStatus::NotApplicable;
            e.note = "needs u0 <= a and h0 below (pi/2) sqrt(1/(1+ac))";
        } else {
            try {
                const auto& ml = get_mu_lower();
                e.hypothesis.push_back({"mu_lower", ml.value});
                e.status = p.mu < ml.value ? CriterionStatus::Satisfied
                                           : CriterionStatus::NotSatisfied;
                thm513_satisfied = e.status == CriterionStatus::Satisfied;
            } catch (const ThresholdError& err) {
                e.status = CriterionStatus::Inconclusive;
                e.note = err.what();
            }
        }
        rep.entries.push_back(std::move(e));
    }

    // Criterion 5.2: under the 5.1(iii) hypotheses, a large prey habitat or
    // beta above beta* makes the prey spread.
    {
        CriterionEntry e;
        e.theorem = "Thm5.2";
        e.prediction = "g_inf infinite (prey spreads), predator vanishes";
        e.hypothesis = {{"g0", p.g0}, {"prey_barrier", prey_barrier}, {"beta", p.beta}};
        if (!thm513_satisfied) {
            e.status = CriterionStatus::NotApplicable;
            e.note = "requires the Thm5.1(iii) hypotheses";
        } else if (p.g0 > prey_barrier) {
            e.status = CriterionStatus::Satisfied;
            e.note = "g0 above (pi/2) sqrt(d/a)";
        } else {
            try {
                const auto& bs = get_beta_star();
                e.hypothesis.push_back({"beta_star", bs.value});
                e.status = p.beta > bs.value ? CriterionStatus::Satisfied
                                             : CriterionStatus::NotSatisfied;
            } catch (const ThresholdError& err) {
                e.status = CriterionStatus::Inconclusive;
                e.note = err.what();
            }
        }
        rep.entries.push_back(std::move(e));
    }

    // Criterion 5.3: strong predation with the predator's semi-wave speed above
    // the prey's; conclusion is conditional on the predator spreading.
    {
        CriterionEntry e;
        e.theorem = "Thm5.3";
        e.prediction = "conditional on h_inf infinite: g_inf finite (prey vanishes)";
        const double k_prey = kappa(p.beta, p.d, p.a);
        const double k_pred = kappa(p.mu, 1.0, 1.0);
        e.hypothesis = {{"b", p.b}, {"a", p.a}, {"k_beta_d_a", k_prey},
                        {"k_mu_1_1", k_pred}};
        if (!(p.b > p.a)) {
            e.status = CriterionStatus::NotApplicable;
            e.note = "needs strong predation b > a";
        } else {
            e.status = k_prey < k_pred ? CriterionStatus::Satisfied
                                       : CriterionStatus::NotSatisfied;
        }
        rep.entries.push_back(std::move(e));
    }

    // Criterion 5.4: constructive separation condition.
    {
        CriterionEntry e;
        e.theorem = "Thm5.4";
        e.prediction = "g(t) >= K mu t + h0 + L(mu); prey spreads and covers the predator";
        const SeparationReport sc = separation_condition(p, u0, v0);
        e.hypothesis = {{"K", sc.K}, {"sigma", sc.sigma}, {"L_sigma", sc.L_sigma},
                        {"delta_sigma", sc.delta_sigma}, {"g0_h0_gap", p.g0 - p.h0}};
        if (!sc.applicable) {
            e.status = CriterionStatus::NotApplicable;
            e.note = "sigma = K mu not below sqrt(2da)";
        } else {
            e.status = sc.satisfied ? CriterionStatus::Satisfied
                                    : CriterionStatus::NotSatisfied;
        }
        rep.entries.push_back(std::move(e));
    }

    return rep;
}

}  // namespace fronts
