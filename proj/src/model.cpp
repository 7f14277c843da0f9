#include "fronts/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fronts {

void ModelParams::validate() const {
    auto pos = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw ConfigError(std::string("model.") + name + " must be strictly positive");
    };
    pos(a, "a");
    pos(d, "d");
    pos(beta, "beta");
    pos(mu, "mu");
    pos(g0, "g0");
    pos(h0, "h0");
    if (!(b >= 0.0) || !std::isfinite(b)) throw ConfigError("model.b must be positive");
    if (!(c >= 0.0) || !std::isfinite(c)) throw ConfigError("model.c must be positive");
    if (h0 > g0) throw ConfigError("model.h0 must not exceed model.g0");
}

InitialProfile InitialProfile::cosine(double support, double amplitude) {
    if (!(support > 0.0) || !(amplitude > 0.0))
        throw ConfigError("initial profile needs positive support and amplitude");
    InitialProfile p;
    p.kind_ = Kind::Cosine;
    p.support_ = support;
    p.amplitude_ = amplitude;
    p.sup_ = amplitude;
    p.min_deriv_ = -amplitude * M_PI / (2.0 * support);
    return p;
}

InitialProfile InitialProfile::bump(double support, double amplitude) {
    if (!(support > 0.0) || !(amplitude > 0.0))
        throw ConfigError("initial profile needs positive support and amplitude");
    InitialProfile p;
    p.kind_ = Kind::Bump;
    p.support_ = support;
    p.amplitude_ = amplitude;
    p.sup_ = amplitude;
    // min of d/dx [A (1-r^2)^2] at r = 1/sqrt(3)
    p.min_deriv_ = -8.0 * amplitude / (3.0 * std::sqrt(3.0) * support);
    return p;
}

InitialProfile InitialProfile::tabulated(std::vector<double> x, std::vector<double> v) {
    const size_t n = x.size();
    if (n < 4 || v.size() != n) throw ConfigError("tabulated profile needs >= 4 samples");
    for (size_t i = 1; i < n; ++i)
        if (!(x[i] > x[i - 1])) throw ConfigError("tabulated profile x values must increase");
    if (!(x.front() == 0.0)) throw ConfigError("tabulated profile must start at x = 0");
    const double vmax = *std::max_element(v.begin(), v.end());
    if (std::abs(v.back()) > 1e-9 * std::max(vmax, 1e-300))
        throw ConfigError("tabulated profile must vanish at the front");
    v.back() = 0.0;  // snap rounding residue so the front value is exact
    for (size_t i = 0; i + 1 < n; ++i)
        if (!(v[i] > 0.0)) throw ConfigError("tabulated profile must be positive inside");

    InitialProfile p;
    p.kind_ = Kind::Tabulated;
    p.support_ = x.back();
    p.tx_ = std::move(x);
    p.tv_ = std::move(v);

    // Natural cubic spline second derivatives (Thomas solve).
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), r(n, 0.0);
    b[0] = b[n - 1] = 1.0;
    for (size_t i = 1; i + 1 < n; ++i) {
        const double hl = p.tx_[i] - p.tx_[i - 1];
        const double hr = p.tx_[i + 1] - p.tx_[i];
        a[i] = hl / 6.0;
        b[i] = (hl + hr) / 3.0;
        c[i] = hr / 6.0;
        r[i] = (p.tv_[i + 1] - p.tv_[i]) / hr - (p.tv_[i] - p.tv_[i - 1]) / hl;
    }
    for (size_t i = 1; i < n; ++i) {
        const double w = a[i] / b[i - 1];
        b[i] -= w * c[i - 1];
        r[i] -= w * r[i - 1];
    }
    p.tm_.assign(n, 0.0);
    p.tm_[n - 1] = r[n - 1] / b[n - 1];
    for (size_t i = n - 1; i-- > 0;) p.tm_[i] = (r[i] - c[i] * p.tm_[i + 1]) / b[i];

    p.amplitude_ = *std::max_element(p.tv_.begin(), p.tv_.end());
    p.finish_scan();
    return p;
}

void InitialProfile::finish_scan() {
    const int n = 4096;
    sup_ = 0.0;
    min_deriv_ = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = support_ * i / n;
        sup_ = std::max(sup_, value(x));
        min_deriv_ = std::min(min_deriv_, derivative(x));
    }
}

double InitialProfile::value(double x) const {
    if (x >= support_) return 0.0;
    if (x < 0.0) x = 0.0;
    switch (kind_) {
        case Kind::Cosine:
            return amplitude_ * std::cos(M_PI * x / (2.0 * support_));
        case Kind::Bump: {
            const double r = x / support_;
            const double s = 1.0 - r * r;
            return amplitude_ * s * s;
        }
        case Kind::Tabulated: {
            const auto it = std::upper_bound(tx_.begin(), tx_.end(), x);
            size_t j = std::min<size_t>(tx_.size() - 1, it - tx_.begin());
            if (j == 0) j = 1;
            const double h = tx_[j] - tx_[j - 1];
            const double t = (x - tx_[j - 1]) / h;
            const double s = 1.0 - t;
            return s * tv_[j - 1] + t * tv_[j] +
                   h * h / 6.0 *
                       ((s * s * s - s) * tm_[j - 1] + (t * t * t - t) * tm_[j]);
        }
    }
    return 0.0;
}

double InitialProfile::derivative(double x) const {
    if (x > support_) return 0.0;
    if (x < 0.0) x = 0.0;
    switch (kind_) {
        case Kind::Cosine:
            return -amplitude_ * M_PI / (2.0 * support_) *
                   std::sin(M_PI * x / (2.0 * support_));
        case Kind::Bump: {
            const double r = x / support_;
            return -4.0 * amplitude_ * r * (1.0 - r * r) / support_;
        }
        case Kind::Tabulated: {
            const auto it = std::upper_bound(tx_.begin(), tx_.end(), x);
            size_t j = std::min<size_t>(tx_.size() - 1, it - tx_.begin());
            if (j == 0) j = 1;
            const double h = tx_[j] - tx_[j - 1];
            const double t = (x - tx_[j - 1]) / h;
            const double s = 1.0 - t;
            return (tv_[j] - tv_[j - 1]) / h +
                   h / 6.0 *
                       ((3.0 * t * t - 1.0) * tm_[j] - (3.0 * s * s - 1.0) * tm_[j - 1]);
        }
    }
    return 0.0;
}

Vector InitialProfile::sample(int n) const {
    Vector z(n);
    for (int i = 0; i < n; ++i) z[i] = value(support_ * i / double(n - 1));
    z[n - 1] = 0.0;
    return z;
}

SpeedConstants speed_constants(const ModelParams& p) {
    SpeedConstants sc;
    sc.c1 = 2.0 * std::sqrt(p.d * p.a);
    sc.c2 = 2.0 * std::sqrt(1.0 + p.a * p.c);
    auto root = [](double radicand) -> std::optional<double> {
        if (radicand > 0.0) return 2.0 * std::sqrt(radicand);
        return std::nullopt;
    };
    sc.c3 = root(p.d * p.a - p.d * p.b * (1.0 + p.a * p.c));
    sc.c4 = root(p.d * p.a - p.d * p.b);
    sc.c5 = root((1.0 + p.a * p.c) * (1.0 - p.b * p.c));
    if (p.b < std::min(p.a, p.c > 0.0 ? 1.0 / p.c : std::numeric_limits<double>::infinity())) {
        sc.A = (p.a - p.b) / (1.0 + p.b * p.c);
        sc.B = (1.0 + p.a * p.c) / (1.0 + p.b * p.c);
    }
    return sc;
}

DerivedConstants derive_constants(const ModelParams& p,
                                  const InitialProfile& u0,
                                  const InitialProfile& v0) {
    p.validate();
    DerivedConstants dc;
    static_cast<SpeedConstants&>(dc) = speed_constants(p);
    dc.M1 = std::max(p.a, u0.sup());
    dc.M2 = std::max(1.0 + p.c * dc.M1, v0.sup());
    dc.K = 2.0 * std::max(dc.M2 * std::sqrt((1.0 + p.c * dc.M1) / 2.0),
                          -v0.min_derivative());
    dc.prey_barrier = 0.5 * M_PI * std::sqrt(p.d / p.a);
    dc.pred_barrier = 0.5 * M_PI * std::sqrt(1.0 / (1.0 + p.a * p.c));
    return dc;
}

std::vector<CoexistenceBounds> iterate_coexistence_bounds(const ModelParams& p, int n) {
    if (n < 1) throw RegimeError("iteration count must be >= 1");
    const double inv_c = p.c > 0.0 ? 1.0 / p.c : std::numeric_limits<double>::infinity();
    if (!(p.b < std::min(p.a, inv_c)) || !(p.a > p.b * (1.0 + p.a * p.c)))
        throw RegimeError("coexistence iteration requires b < min{a, 1/c} and a > b(1+ac)");

    std::vector<CoexistenceBounds> rows;
    rows.reserve(n);
    double v_lo = 1.0;
    for (int i = 0; i < n; ++i) {
        CoexistenceBounds r;
        r.u_upper = p.a - p.b * v_lo;
        r.v_upper = 1.0 + p.c * r.u_upper;
        r.u_lower = p.a - p.b * r.v_upper;
        v_lo = 1.0 + p.c * r.u_lower;
        r.v_lower = v_lo;  // the refreshed lower bound fed to the next row
        rows.push_back(r);
    }
    return rows;
}

}  // namespace fronts
