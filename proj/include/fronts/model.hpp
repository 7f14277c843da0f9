#pragma once

#include <optional>
#include <vector>

#include "fronts/types.hpp"

namespace fronts {

// Constants of the two-species front problem:
//   u_t - d u_xx = u(a - u - b v)   on 0 < x < g(t)
//   v_t -   v_xx = v(1 - v + c u)   on 0 < x < h(t)
// with Stefan conditions g' = -beta u_x(t,g), h' = -mu v_x(t,h).
struct ModelParams {
    double a = 1.0;     // prey growth rate
    double b = 0.0;     // predation coefficient
    double c = 0.0;     // conversion coefficient
    double d = 1.0;     // prey diffusivity
    double beta = 1.0;  // prey moving parameter
    double mu = 1.0;    // predator moving parameter
    double g0 = 1.0;    // initial prey front
    double h0 = 1.0;    // initial predator front

    void validate() const;
};

// Initial density profile on [0, support]: positive inside, zero at and
// beyond the front, zero derivative at the origin.
class InitialProfile {
  public:
    enum class Kind { Cosine, Bump, Tabulated };

    static InitialProfile cosine(double support, double amplitude);
    static InitialProfile bump(double support, double amplitude);
    // Tabulated samples on [0, support]; interpolated with a natural cubic
    // spline so the derivative at the front is well defined.
    static InitialProfile tabulated(std::vector<double> x, std::vector<double> v);

    double value(double x) const;
    double derivative(double x) const;

    double support() const { return support_; }
    double amplitude() const { return amplitude_; }
    Kind kind() const { return kind_; }

    // sup of the profile and min of its derivative over [0, support].
    double sup() const { return sup_; }
    double min_derivative() const { return min_deriv_; }

    // Sample onto a uniform grid of n nodes over [0, support]; last node is 0.
    Vector sample(int n) const;

  private:
    InitialProfile() = default;
    void finish_scan();

    Kind kind_ = Kind::Cosine;
    double support_ = 1.0;
    double amplitude_ = 1.0;
    double sup_ = 1.0;
    double min_deriv_ = 0.0;
    // spline data (tabulated only)
    std::vector<double> tx_, tv_, tm_;  // knots, values, second derivatives
};

// Closed-form constants derived from the parameters alone. Entries whose
// radicand is non-positive are absent, never NaN.
struct SpeedConstants {
    double c1 = 0.0;                 // 2 sqrt(d a)
    double c2 = 0.0;                 // 2 sqrt(1 + a c)
    std::optional<double> c3;        // 2 sqrt(d a - d b (1+ac))
    std::optional<double> c4;        // 2 sqrt(d a - d b)
    std::optional<double> c5;        // 2 sqrt((1+ac)(1-bc))
    std::optional<double> A;         // (a-b)/(1+bc), weak predation only
    std::optional<double> B;         // (1+ac)/(1+bc), weak predation only
};

SpeedConstants speed_constants(const ModelParams& p);

// Adds the initial-data-dependent bounds to the parameter constants.
struct DerivedConstants : SpeedConstants {
    double M1 = 0.0;            // prey sup bound: max{a, sup u0}
    double M2 = 0.0;            // predator sup bound: max{1 + c M1, sup v0}
    double K = 0.0;             // predator front-speed bound coefficient
    double prey_barrier = 0.0;  // (pi/2) sqrt(d/a)
    double pred_barrier = 0.0;  // (pi/2) sqrt(1/(1+ac))
};

DerivedConstants derive_constants(const ModelParams& p,
                                  const InitialProfile& u0,
                                  const InitialProfile& v0);

// One row of the coexistence cross-iteration: upper/lower bounds on the two
// densities, converging monotonically to (A, B).
struct CoexistenceBounds {
    double u_upper;  // decreasing, >= A
    double v_upper;  // decreasing, >= B
    double u_lower;  // increasing, <= A
    double v_lower;  // increasing, <= B (refreshed bound fed to the next row)
};

// Requires the weak-predation regime b < min{a, 1/c} and a > b(1+ac).
std::vector<CoexistenceBounds> iterate_coexistence_bounds(const ModelParams& p, int n);

}  // namespace fronts
