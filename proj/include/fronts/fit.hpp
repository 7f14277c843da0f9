#pragma once

#include <cmath>
#include <span>

#include "fronts/types.hpp"

namespace fronts::detail {

struct LinearFit {
    double slope = 0.0;
    double stderr_ = 0.0;
    int points = 0;
};

// Ordinary least squares y = a + b t; stderr is the standard error of b.
inline LinearFit linear_fit(std::span<const double> t, std::span<const double> y) {
    const int n = int(t.size());
    LinearFit f;
    f.points = n;
    if (n < 2) throw DataError("linear fit needs at least 2 points");
    double tm = 0.0, ym = 0.0;
    for (int i = 0; i < n; ++i) {
        tm += t[i];
        ym += y[i];
    }
    tm /= n;
    ym /= n;
    double stt = 0.0, sty = 0.0;
    for (int i = 0; i < n; ++i) {
        stt += (t[i] - tm) * (t[i] - tm);
        sty += (t[i] - tm) * (y[i] - ym);
    }
    if (stt <= 0.0) throw DataError("linear fit needs distinct abscissae");
    f.slope = sty / stt;
    if (n > 2) {
        double ss = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = y[i] - ym - f.slope * (t[i] - tm);
            ss += r * r;
        }
        f.stderr_ = std::sqrt(ss / double(n - 2) / stt);
    }
    return f;
}

}  // namespace fronts::detail
