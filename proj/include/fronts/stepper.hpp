#pragma once

#include <cmath>

#include "fronts/types.hpp"

namespace fronts::detail {

// One-sided 3-point derivative of z at the moving end (last node), in the
// fixed computational coordinate. The front speed is first-order sensitive
// to this value, hence the second-order stencil.
inline double boundary_slope(const Vector& z, double dy) {
    const Eigen::Index n = z.size();
    return (3.0 * z[n - 1] - 4.0 * z[n - 2] + z[n - 3]) / (2.0 * dy);
}

// Scratch space for the tridiagonal solve, reused across steps.
struct TridiagWork {
    Vector sub, diag, sup, rhs;
    void resize(Eigen::Index n) {
        sub.resize(n);
        diag.resize(n);
        sup.resize(n);
        rhs.resize(n);
    }
};

// Advance one species density on its front-fixed grid:
//   z_t = diff/rho^2 z_yy + (rhodot/rho) y z_y + r(z)
// with z_y = 0 at y = 0 and z = 0 at y = 1. Diffusion and drift are implicit
// (tridiagonal), the reaction r (evaluated by the caller at the old level) is
// explicit. Negative nodes are clamped to zero; returns the clamped mass in
// computational units (sum |negative| * dy).
inline double advance_species(Vector& z, double diff, double rho, double rhodot,
                              double dt, double dy, const Vector& reaction,
                              TridiagWork& wk) {
    const Eigen::Index n = z.size();   // nodes 0..n-1, z[n-1] = 0
    const Eigen::Index m = n - 1;      // unknowns 0..m-1
    wk.resize(m);

    const double A = dt * diff / (rho * rho * dy * dy);
    const double D = dt * rhodot / rho / (2.0 * dy);

    // i = 0: Neumann via ghost node, drift vanishes at y = 0
    wk.sub[0] = 0.0;
    wk.diag[0] = 1.0 + 2.0 * A;
    wk.sup[0] = -2.0 * A;
    wk.rhs[0] = z[0] + dt * reaction[0];
    for (Eigen::Index i = 1; i < m; ++i) {
        const double y = double(i) * dy;
        const double C = D * y;
        wk.sub[i] = -A + C;
        wk.diag[i] = 1.0 + 2.0 * A;
        wk.sup[i] = -A - C;  // multiplies z[m] = 0 at i = m-1
        wk.rhs[i] = z[i] + dt * reaction[i];
    }

    // Thomas forward elimination / back substitution
    for (Eigen::Index i = 1; i < m; ++i) {
        const double w = wk.sub[i] / wk.diag[i - 1];
        wk.diag[i] -= w * wk.sup[i - 1];
        wk.rhs[i] -= w * wk.rhs[i - 1];
    }
    z[m - 1] = wk.rhs[m - 1] / wk.diag[m - 1];
    for (Eigen::Index i = m - 1; i-- > 0;)
        z[i] = (wk.rhs[i] - wk.sup[i] * z[i + 1]) / wk.diag[i];
    z[m] = 0.0;

    double clamp_mass = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        if (!std::isfinite(z[i])) throw SolverError("non-finite density encountered");
        if (z[i] < 0.0) {
            clamp_mass += -z[i] * dy;
            z[i] = 0.0;
        }
    }
    return clamp_mass;
}

}  // namespace fronts::detail
