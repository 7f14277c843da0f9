#include "fronts/semiwave.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fronts {
namespace {

// Right-hand side of the phase-plane ODE dp/dq = (k p - q(theta - q)) / (d p).
struct PlaneOde {
    double k, d, theta;
    double operator()(double q, double p) const {
        return (k * p - q * (theta - q)) / (d * p);
    }
};

struct Shot {
    double p0 = 0.0;       // p at q = 0
    bool hit_zero = false; // manifold lost positivity before reaching q = 0
};

// Integrate dp/dq backward from q = theta - delta down to q = 0 with an
// embedded Cash-Karp 4(5) pair. Optionally records the (q, p) path.
Shot shoot(double k, double d, double theta, double rtol,
           std::vector<std::pair<double, double>>* path = nullptr) {
    const PlaneOde f{k, d, theta};
    const double delta = 1e-6 * theta;
    const double slope = (-k + std::sqrt(k * k + 4.0 * d * theta)) / (2.0 * d);
    double q = theta - delta;
    double p = slope * delta;
    const double pscale = std::pow(theta, 1.5) / std::sqrt(d);
    const double atol = 1e-14 * pscale;

    if (path) path->push_back({q, p});

    double h = -theta / 200.0;
    const double hmin = theta * 1e-13;
    Shot out;
    for (long step = 0; step < 2'000'000; ++step) {
        if (q <= 0.0) break;
        if (q + h < 0.0) h = -q;

        // Cash-Karp coefficients
        const double k1 = f(q, p);
        const double k2 = f(q + h / 5.0, p + h * k1 / 5.0);
        const double k3 = f(q + 0.3 * h, p + h * (3.0 * k1 + 9.0 * k2) / 40.0);
        const double k4 = f(q + 0.6 * h, p + h * (0.3 * k1 - 0.9 * k2 + 1.2 * k3));
        const double k5 =
            f(q + h, p + h * (-11.0 / 54.0 * k1 + 2.5 * k2 - 70.0 / 27.0 * k3 + 35.0 / 27.0 * k4));
        const double k6 = f(q + 7.0 / 8.0 * h,
                            p + h * (1631.0 / 55296.0 * k1 + 175.0 / 512.0 * k2 +
                                     575.0 / 13824.0 * k3 + 44275.0 / 110592.0 * k4 +
                                     253.0 / 4096.0 * k5));
        const double p5 = p + h * (37.0 / 378.0 * k1 + 250.0 / 621.0 * k3 +
                                   125.0 / 594.0 * k4 + 512.0 / 1771.0 * k6);
        const double p4 = p + h * (2825.0 / 27648.0 * k1 + 18575.0 / 48384.0 * k3 +
                                   13525.0 / 55296.0 * k4 + 277.0 / 14336.0 * k5 + 0.25 * k6);
        const double err = std::abs(p5 - p4);
        const double tolh = atol + rtol * std::max(std::abs(p), std::abs(p5));

        if (!std::isfinite(p5) || (err > tolh && std::abs(h) > hmin)) {
            h *= std::max(0.1, 0.9 * std::pow(tolh / std::max(err, 1e-300), 0.25));
            if (!std::isfinite(p5)) h *= 0.5;
            continue;
        }
        q += h;
        p = p5;
        if (path) path->push_back({q, p});
        if (p <= 0.0) {
            out.hit_zero = true;
            return out;
        }
        h *= std::min(5.0, 0.9 * std::pow(tolh / std::max(err, 1e-300), 0.2));
        if (std::abs(h) < hmin) h = std::copysign(hmin, h);
    }
    out.p0 = p;
    return out;
}

}  // namespace

SemiWave solve_semiwave(double nu, double d, double theta, double tol) {
    if (!(nu > 0.0) || !(d > 0.0) || !(theta > 0.0))
        throw RegimeError("solve_semiwave requires nu, d, theta > 0");
    if (!(tol > 1e-12 && tol < 1e-2))
        throw RegimeError("solve_semiwave tolerance must lie in (1e-12, 1e-2)");

    const double kmax = 2.0 * std::sqrt(theta * d);
    const double eps = 1e-8 * kmax;
    const double rtol = tol / 10.0;

    auto residual = [&](double k) {
        const Shot s = shoot(k, d, theta, rtol);
        // lost positivity behaves like an overshooting (too fast) wave
        return s.hit_zero ? -k / nu : s.p0 - k / nu;
    };

    // Geometric scan for a sign change, then bisection.
    const int nscan = 32;
    const double lo0 = eps, hi0 = kmax - eps;
    const double ratio = std::pow(hi0 / lo0, 1.0 / (nscan - 1));
    double klo = 0.0, khi = 0.0, flo = 0.0;
    std::ostringstream scan_record;
    bool bracketed = false;
    double kprev = lo0, fprev = residual(lo0);
    scan_record << "k=" << kprev << " F=" << fprev;
    for (int i = 1; i < nscan; ++i) {
        const double k = lo0 * std::pow(ratio, i);
        const double fk = residual(k);
        scan_record << "; k=" << k << " F=" << fk;
        if (fprev > 0.0 && fk <= 0.0) {
            klo = kprev;
            khi = k;
            flo = fprev;
            bracketed = true;
            break;
        }
        kprev = k;
        fprev = fk;
    }
    if (!bracketed)
        throw NumericalError("semi-wave speed bracketing failed; scan: " + scan_record.str());

    while (khi - klo > tol * khi) {
        const double km = 0.5 * (klo + khi);
        const double fm = residual(km);
        if (flo > 0.0 && fm <= 0.0) {
            khi = km;
        } else {
            klo = km;
            flo = fm;
        }
    }

    SemiWave sw;
    sw.nu = nu;
    sw.d = d;
    sw.theta = theta;
    sw.k = 0.5 * (klo + khi);

    // Reconstruct the profile: y(q) = integral dq / p(q) from 0 upward.
    std::vector<std::pair<double, double>> path;
    shoot(sw.k, d, theta, rtol, &path);
    std::reverse(path.begin(), path.end());  // ascending q
    sw.profile.reserve(path.size());
    double y = 0.0, qprev = 0.0, pprev = path.empty() ? sw.k / nu : path.front().second;
    const double qcut = theta * (1.0 - 1e-6);
    for (const auto& [q, p] : path) {
        if (p <= 0.0) continue;
        y += (q - qprev) * 0.5 * (1.0 / p + 1.0 / pprev);
        qprev = q;
        pprev = p;
        sw.profile.push_back({y, q});
        if (q >= qcut) break;
    }
    return sw;
}

double kappa(double nu, double d, double theta, double tol) {
    return solve_semiwave(nu, d, theta, tol).k;
}

SpeedTable speed_table(const ModelParams& p, double tol) {
    p.validate();
    SpeedTable t;
    t.kbar_beta = kappa(p.beta, p.d, p.a, tol);
    t.kund_mu = kappa(p.mu, 1.0, 1.0, tol);
    t.kbar_mu = kappa(p.mu, 1.0, 1.0 + p.a * p.c, tol);
    const double theta_low = p.a - p.b * (1.0 + p.a * p.c);
    if (theta_low > 0.0) t.kund_beta = kappa(p.beta, p.d, theta_low, tol);
    return t;
}

}  // namespace fronts
