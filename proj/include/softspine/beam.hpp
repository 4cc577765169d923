#ifndef SOFTSPINE_BEAM_HPP
#define SOFTSPINE_BEAM_HPP

#include <cmath>
#include <numbers>

#include "softspine/errors.hpp"

// Small-deflection cantilever bending of a uniform circular rod, used to
// turn tip load/deflection measurements into an elastic modulus. A tip
// force F on a rod of length L gives the classic profile
//   y(x) = F (3L - x) x^2 / (6 E I),      y_tip = F L^3 / (3 E I).

namespace softspine {

inline double second_moment_circle(double radius) {
    if (!(radius > 0)) throw DomainError("second_moment_circle: radius must be positive");
    double r2 = radius * radius;
    return std::numbers::pi * r2 * r2 / 4.0;
}

struct BeamSpec {
    double length;         // m
    double modulus;        // Pa
    double second_moment;  // m^4

    static BeamSpec from_radius(double length, double modulus, double radius) {
        BeamSpec spec{length, modulus, second_moment_circle(radius)};
        spec.validate();
        return spec;
    }

    void validate() const {
        if (!(length > 0)) throw ValidationError("length", "must be positive");
        if (!(modulus > 0)) throw ValidationError("modulus", "must be positive");
        if (!(second_moment > 0)) throw ValidationError("second_moment", "must be positive");
    }
};

// One measured point on the deflection profile (fixed end at x = 0).
struct DeflectionSample {
    double x;      // m along the rod
    double y;      // m lateral deflection
    double force;  // N applied at the tip
};

inline double deflection_at(const BeamSpec& spec, double force, double x) {
    if (!(x >= 0.0) || !(x <= spec.length))
        throw DomainError("deflection_at: x outside [0, length]");
    return force * (3.0 * spec.length - x) * x * x / (6.0 * spec.modulus * spec.second_moment);
}

inline double tip_deflection(const BeamSpec& spec, double force) {
    return force * spec.length * spec.length * spec.length /
           (3.0 * spec.modulus * spec.second_moment);
}

// Inverse of tip_deflection for a circular section: E = 4 F L^3 / (3 pi r^4 y).
inline double modulus_from_tip(double force, double length, double radius, double tip_y) {
    if (!(force > 0)) throw DomainError("modulus_from_tip: force must be positive");
    if (!(length > 0)) throw DomainError("modulus_from_tip: length must be positive");
    if (!(radius > 0)) throw DomainError("modulus_from_tip: radius must be positive");
    if (!(tip_y > 0)) throw DomainError("modulus_from_tip: deflection must be positive");
    double r2 = radius * radius;
    return 4.0 * force * length * length * length /
           (3.0 * std::numbers::pi * r2 * r2 * tip_y);
}

// Independent check of the closed form: integrates y'' = F (L - t) / (E I)
// twice from the fixed end (y(0) = y'(0) = 0) with the trapezoidal rule on
// a uniform grid over [0, x]. Kept free of deflection_at on purpose.
inline double deflection_oracle(const BeamSpec& spec, double force, double x,
                                long steps = 100000) {
    if (!(x >= 0.0) || !(x <= spec.length))
        throw DomainError("deflection_oracle: x outside [0, length]");
    if (steps < 1) throw DomainError("deflection_oracle: steps must be >= 1");
    if (x == 0.0) return 0.0;
    const double ei = spec.modulus * spec.second_moment;
    const double h = x / static_cast<double>(steps);
    auto curvature = [&](double t) { return force * (spec.length - t) / ei; };
    double slope = 0.0;
    double y = 0.0;
    double c_prev = curvature(0.0);
    for (long i = 1; i <= steps; ++i) {
        double t = h * static_cast<double>(i);
        double c = curvature(t);
        double slope_next = slope + 0.5 * h * (c_prev + c);
        y += 0.5 * h * (slope + slope_next);
        slope = slope_next;
        c_prev = c;
    }
    return y;
}

}  // namespace softspine

#endif
