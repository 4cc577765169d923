#ifndef SOFTSPINE_STIFFNESS_HPP
#define SOFTSPINE_STIFFNESS_HPP

#include <vector>

#include "softspine/beam.hpp"
#include "softspine/errors.hpp"
#include "softspine/geometry.hpp"

// Jammed-spine stiffness. Granular jamming makes the deployed spine behave
// like a rod whose effective modulus grows with deployed length; between
// measured lengths the modulus is interpolated piecewise-linearly, below
// the first sample the line passes through the origin, above the last the
// value clamps. The body and the jammed spine bend together, so their
// flexural rigidities add over the jammed span.

namespace softspine {

struct StiffnessSample {
    double length;   // m of deployed spine
    double modulus;  // Pa, effective
};

struct StiffnessCurve {
    std::vector<StiffnessSample> samples;  // strictly increasing length, nondecreasing modulus

    void validate() const {
        if (samples.size() < 2)
            throw ValidationError("samples", "need at least two stiffness samples");
        for (size_t i = 0; i < samples.size(); ++i) {
            if (!(samples[i].length > 0))
                throw ValidationError("samples", "lengths must be positive");
            if (!(samples[i].modulus > 0))
                throw ValidationError("samples", "moduli must be positive");
            if (i > 0 && !(samples[i].length > samples[i - 1].length))
                throw ValidationError("samples", "lengths must be strictly increasing");
            if (i > 0 && samples[i].modulus < samples[i - 1].modulus)
                throw ValidationError("samples", "moduli must be nondecreasing");
        }
    }
};

inline StiffnessCurve make_stiffness_curve(std::vector<StiffnessSample> samples) {
    StiffnessCurve curve{std::move(samples)};
    curve.validate();
    return curve;
}

// Bench-measured effective moduli of the reference spine at six deployed lengths.
inline const StiffnessCurve& default_curve() {
    static const StiffnessCurve curve = make_stiffness_curve({
        {0.05, 0.318e6},
        {0.10, 1.323e6},
        {0.15, 2.032e6},
        {0.20, 3.069e6},
        {0.25, 3.763e6},
        {0.30, 4.389e6},
    });
    return curve;
}

// Effective modulus at deployed length `length`, valid on (0, max_length].
inline double modulus_at(const StiffnessCurve& curve, double length, double max_length) {
    if (!(length > 0) || !(length <= max_length))
        throw DomainError("modulus_at: length outside (0, max_length]");
    const auto& s = curve.samples;
    if (length <= s.front().length)
        return s.front().modulus * (length / s.front().length);
    if (length >= s.back().length) return s.back().modulus;
    for (size_t i = 1; i < s.size(); ++i) {
        if (length <= s[i].length) {
            double t = (length - s[i - 1].length) / (s[i].length - s[i - 1].length);
            return s[i - 1].modulus + t * (s[i].modulus - s[i - 1].modulus);
        }
    }
    return s.back().modulus;  // unreachable
}

// Axial rigidity map of the robot for a given jammed spine length. The
// jammed span stores the body and spine contributions separately so that
// calibration can rescale the body term alone.
struct RigiditySegment {
    double start;     // m from the base
    double end;       // m
    double body_ei;   // N*m^2 from the elastomer annulus
    double spine_ei;  // N*m^2 from the jammed spine (0 on the free span)

    double ei() const { return body_ei + spine_ei; }
};

struct RigidityProfile {
    std::vector<RigiditySegment> segments;  // contiguous, covering [0, body_length]
};

inline double body_rigidity(const RobotGeometry& geom, const MaterialParams& mat) {
    double annulus =
        second_moment_circle(geom.outer_radius) - second_moment_circle(geom.channel_radius);
    return mat.body_modulus * annulus;
}

inline RigidityProfile rigidity_profile(const RobotGeometry& geom, const MaterialParams& mat,
                                        const StiffnessCurve& curve, double spine_length) {
    if (!(spine_length >= 0) || !(spine_length <= geom.spine_max_length))
        throw DomainError("rigidity_profile: spine_length outside [0, spine_max_length]");
    const double ei_body = body_rigidity(geom, mat);
    RigidityProfile profile;
    if (spine_length > 0) {
        double ei_spine = modulus_at(curve, spine_length, geom.spine_max_length) *
                          second_moment_circle(geom.spine_radius);
        profile.segments.push_back({0.0, spine_length, ei_body, ei_spine});
    }
    if (geom.body_length - spine_length > 0)
        profile.segments.push_back({spine_length, geom.body_length, ei_body, 0.0});
    return profile;
}

}  // namespace softspine

#endif
