#ifndef SOFTSPINE_GEOMETRY_HPP
#define SOFTSPINE_GEOMETRY_HPP

#include <string>

#include "softspine/errors.hpp"

namespace softspine {

// Desk-scale pneumatic continuum body with a jammable growing spine in the
// central channel. Defaults describe the reference build: 40 cm silicone
// body, 10 cm outer / 5.8 cm channel diameter, nine chambers plumbed as
// three groups, spine deployable to 30 cm.
struct RobotGeometry {
    double body_length = 0.40;       // m
    double outer_radius = 0.05;      // m
    double channel_radius = 0.029;   // m
    int chamber_count = 9;
    int group_count = 3;
    double spine_radius = 0.029;     // m, fills the channel bore
    double spine_max_length = 0.30;  // m

    void validate() const {
        if (!(body_length > 0)) throw ValidationError("body_length", "must be positive");
        if (!(outer_radius > 0)) throw ValidationError("outer_radius", "must be positive");
        if (!(channel_radius > 0)) throw ValidationError("channel_radius", "must be positive");
        if (!(channel_radius < outer_radius))
            throw ValidationError("channel_radius", "must be smaller than outer_radius");
        if (!(spine_radius > 0)) throw ValidationError("spine_radius", "must be positive");
        if (!(spine_radius <= channel_radius))
            throw ValidationError("spine_radius", "must fit the channel bore");
        if (!(spine_max_length > 0)) throw ValidationError("spine_max_length", "must be positive");
        if (!(spine_max_length <= body_length))
            throw ValidationError("spine_max_length", "cannot exceed body_length");
        if (chamber_count <= 0) throw ValidationError("chamber_count", "must be positive");
        if (group_count <= 0) throw ValidationError("group_count", "must be positive");
        if (chamber_count % group_count != 0)
            throw ValidationError("chamber_count", "must be divisible by group_count");
    }
};

// Elastomer model constants. The body modulus follows the neo-Hookean
// small-strain relation E = 6*C1 unless a measured value overrides it.
struct MaterialParams {
    double neo_hookean_c1 = 42500.0;       // Pa
    double body_modulus = 6.0 * 42500.0;   // Pa
    double glass_bubble_density = 200.0;   // kg/m^3, spine packing medium

    void validate() const {
        if (!(neo_hookean_c1 > 0)) throw ValidationError("neo_hookean_c1", "must be positive");
        if (!(body_modulus > 0)) throw ValidationError("body_modulus", "must be positive");
        if (!(glass_bubble_density > 0))
            throw ValidationError("glass_bubble_density", "must be positive");
    }
};

}  // namespace softspine

#endif
