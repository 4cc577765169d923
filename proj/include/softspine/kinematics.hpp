#ifndef SOFTSPINE_KINEMATICS_HPP
#define SOFTSPINE_KINEMATICS_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "softspine/errors.hpp"
#include "softspine/geometry.hpp"
#include "softspine/stiffness.hpp"

// Piecewise-constant-curvature bending model. Chamber groups sit at
// azimuths 0, 120, 240 degrees; pressurising them produces a bending
// moment whose magnitude scales linearly with the pressure vector norm and
// whose plane follows the vector angle. Within each rigidity segment the
// curvature is constant, so the backbone is a chain of planar arcs.
//
// Frame: z along the undeformed axis, x in the bend plane at phi = 0,
// base at the origin.

namespace softspine {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

// Regulated pressure per chamber group, pascals gauge.
inline constexpr double group_pressure_limit = 300e3;

struct GroupPressures {
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;

    double total() const { return p1 + p2 + p3; }

    void validate(double limit = group_pressure_limit) const {
        for (double p : {p1, p2, p3})
            if (!(p >= 0.0) || !(p <= limit))
                throw DomainError("group pressure outside [0, limit]");
    }
};

// Two calibrated scalars map pressures to bending:
//   moment_gain (N*m per Pa of pressure-vector norm)
//   rigidity_scale, multiplying the body rigidity to absorb the gap
//   between the literature elastomer modulus and the real part.
struct ActuationModel {
    double moment_gain = 1.0;
    double rigidity_scale = 1.0;
};

struct MomentVector {
    double magnitude;    // N*m
    double bend_plane;   // rad, azimuth of the bending plane
};

inline MomentVector effective_moment(const GroupPressures& p, const ActuationModel& model,
                                     double limit = group_pressure_limit) {
    p.validate(limit);
    constexpr double a1 = 0.0;
    constexpr double a2 = 2.0 * std::numbers::pi / 3.0;
    constexpr double a3 = 4.0 * std::numbers::pi / 3.0;
    double vx = p.p1 * std::cos(a1) + p.p2 * std::cos(a2) + p.p3 * std::cos(a3);
    double vy = p.p1 * std::sin(a1) + p.p2 * std::sin(a2) + p.p3 * std::sin(a3);
    double norm = std::hypot(vx, vy);
    double phi = (norm == 0.0) ? 0.0 : std::atan2(vy, vx);
    return {model.moment_gain * norm, phi};
}

// Inverse of the plane mapping: pressures on the two groups adjacent to
// `phi` whose vector sum has norm `magnitude` and angle `phi`. Round-trips
// through effective_moment.
inline GroupPressures pressures_for_plane(double magnitude, double phi) {
    if (!(magnitude >= 0)) throw DomainError("pressures_for_plane: magnitude must be >= 0");
    constexpr double sector = 2.0 * std::numbers::pi / 3.0;
    double wrapped = std::fmod(phi, 2.0 * std::numbers::pi);
    if (wrapped < 0) wrapped += 2.0 * std::numbers::pi;
    int s = static_cast<int>(wrapped / sector);
    if (s > 2) s = 2;  // guards phi == 2*pi after rounding
    double local = wrapped - s * sector;
    double denom = std::sin(sector);
    double pa = magnitude * std::sin(sector - local) / denom;
    double pb = magnitude * std::sin(local) / denom;
    double p[3] = {0.0, 0.0, 0.0};
    p[s] = pa;
    p[(s + 1) % 3] = pb;
    return {p[0], p[1], p[2]};
}

struct CurvatureSegment {
    double length;     // m
    double curvature;  // 1/m, >= 0
};

struct BendConfig {
    double spine_length = 0.0;
    GroupPressures pressures;
    double moment = 0.0;      // N*m
    double bend_plane = 0.0;  // rad
    std::vector<CurvatureSegment> curvatures;
    double bend_angle = 0.0;  // rad, sum of curvature * length
};

inline BendConfig bend_config(const RobotGeometry& geom, const MaterialParams& mat,
                              const StiffnessCurve& curve, const ActuationModel& model,
                              double spine_length, const GroupPressures& pressures) {
    MomentVector mv = effective_moment(pressures, model);
    // The rigidity scale calibrates the elastomer body; the jammed spine
    // keeps its bench-measured modulus.
    MaterialParams scaled = mat;
    scaled.body_modulus *= model.rigidity_scale;
    RigidityProfile profile = rigidity_profile(geom, scaled, curve, spine_length);
    BendConfig config;
    config.spine_length = spine_length;
    config.pressures = pressures;
    config.moment = mv.magnitude;
    config.bend_plane = mv.bend_plane;
    double theta = 0.0;
    for (const auto& seg : profile.segments) {
        double len = seg.end - seg.start;
        double kappa = mv.magnitude / seg.ei();
        config.curvatures.push_back({len, kappa});
        theta += kappa * len;
    }
    config.bend_angle = theta;
    return config;
}

struct TipPose {
    Vec3 position;
    Vec3 tangent;  // unit
};

namespace detail {

// In-plane arc chain: u is the bend-plane horizontal, z the base axis,
// psi the tangent angle from z. Arcs with |kappa|*len below the straight
// threshold are advanced as lines; the chord error ~ len^2*kappa/2 stays
// below 1e-9 m for robot-scale lengths.
struct PlanarState {
    double u = 0.0;
    double z = 0.0;
    double psi = 0.0;
};

inline void advance_arc(PlanarState& s, double length, double kappa) {
    constexpr double straight_threshold = 1e-9;
    if (std::abs(kappa) * length < straight_threshold) {
        s.u += length * std::sin(s.psi);
        s.z += length * std::cos(s.psi);
        return;
    }
    double psi2 = s.psi + kappa * length;
    s.u += (std::cos(s.psi) - std::cos(psi2)) / kappa;
    s.z += (std::sin(psi2) - std::sin(s.psi)) / kappa;
    s.psi = psi2;
}

inline Vec3 lift(const PlanarState& s, double phi) {
    return {s.u * std::cos(phi), s.u * std::sin(phi), s.z};
}

}  // namespace detail

inline TipPose forward_kinematics(const BendConfig& config, const RobotGeometry& geom) {
    double total = 0.0;
    for (const auto& seg : config.curvatures) total += seg.length;
    if (std::abs(total - geom.body_length) > 1e-9)
        throw DomainError("forward_kinematics: curvature segments do not cover the body");
    detail::PlanarState s;
    for (const auto& seg : config.curvatures) detail::advance_arc(s, seg.length, seg.curvature);
    TipPose pose;
    pose.position = detail::lift(s, config.bend_plane);
    pose.tangent = {std::sin(s.psi) * std::cos(config.bend_plane),
                    std::sin(s.psi) * std::sin(config.bend_plane), std::cos(s.psi)};
    return pose;
}

// Backbone points for plotting: `per_segment` samples along each arc plus
// the base point.
inline std::vector<Vec3> backbone_points(const BendConfig& config, int per_segment = 32) {
    if (per_segment < 1) throw DomainError("backbone_points: per_segment must be >= 1");
    std::vector<Vec3> pts;
    detail::PlanarState s;
    pts.push_back(detail::lift(s, config.bend_plane));
    for (const auto& seg : config.curvatures) {
        double step = seg.length / per_segment;
        for (int i = 0; i < per_segment; ++i) {
            detail::advance_arc(s, step, seg.curvature);
            pts.push_back(detail::lift(s, config.bend_plane));
        }
    }
    return pts;
}

// Bend angles (degrees) over a grid of spine lengths and single-group
// pressures; rows follow `lengths`, columns follow `pressures`.
inline std::vector<std::vector<double>> bend_angle_table(
    const RobotGeometry& geom, const MaterialParams& mat, const StiffnessCurve& curve,
    const ActuationModel& model, const std::vector<double>& lengths,
    const std::vector<double>& pressures) {
    std::vector<std::vector<double>> table;
    table.reserve(lengths.size());
    for (double ls : lengths) {
        std::vector<double> row;
        row.reserve(pressures.size());
        for (double p : pressures) {
            BendConfig cfg = bend_config(geom, mat, curve, model, ls, {p, 0.0, 0.0});
            row.push_back(cfg.bend_angle * 180.0 / std::numbers::pi);
        }
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace softspine

#endif
