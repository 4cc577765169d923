#ifndef SOFTSPINE_PLANNER_HPP
#define SOFTSPINE_PLANNER_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "softspine/calibration.hpp"
#include "softspine/errors.hpp"
#include "softspine/geometry.hpp"
#include "softspine/kinematics.hpp"
#include "softspine/stiffness.hpp"

// Inverse problem: pick a spine length and group pressures whose forward
// tip lands on a requested point. The search space is (spine length,
// pressure-vector norm, bend plane); a coarse grid seeds a coordinate
// descent with shrinking steps. The spine length breaks the bend-angle /
// tip-position coupling, so an optional bend-angle constraint selects
// among configurations sharing a tip.

namespace softspine {

// Everything the forward model needs, bundled for the planner and replay.
struct RobotModels {
    RobotGeometry geometry;
    MaterialParams material;
    StiffnessCurve curve = default_curve();
    ActuationModel actuation;
};

inline RobotModels default_models() {
    RobotModels models;
    models.actuation = anchor_calibration(models.geometry, models.material, models.curve);
    return models;
}

struct AngleConstraint {
    double angle;      // rad
    double tolerance;  // rad
};

struct PlanRequest {
    Vec3 target;                  // m
    double tolerance = 0.005;     // m
    std::optional<AngleConstraint> angle;
    double pressure_max = 250e3;  // Pa per group
    std::vector<double> spine_grid = {0.0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
};

struct PlanCommand {
    enum class Kind { start_grow, grow_to, jam, set_pressures };
    Kind kind;
    double length = 0.0;  // m, grow_to only
    GroupPressures pressures;  // set_pressures only
};

struct Plan {
    double spine_length = 0.0;  // m
    GroupPressures pressures;
    Vec3 predicted_tip;
    double tip_error = 0.0;   // m
    double bend_angle = 0.0;  // rad
    bool interpolated = false;  // spine length off the calibrated sample lengths
    std::vector<PlanCommand> commands;
};

inline std::vector<PlanCommand> command_sequence(double spine_length,
                                                 const GroupPressures& pressures) {
    std::vector<PlanCommand> commands;
    if (spine_length > 0) {
        commands.push_back({PlanCommand::Kind::start_grow});
        commands.push_back({PlanCommand::Kind::grow_to, spine_length});
        commands.push_back({PlanCommand::Kind::jam});
    }
    commands.push_back({PlanCommand::Kind::set_pressures, 0.0, pressures});
    return commands;
}

struct CloudPoint {
    double spine_length;  // m
    double magnitude;     // Pa, pressure-vector norm
    double bend_plane;    // rad
    Vec3 tip;
    double bend_angle;    // rad
};

struct CloudGrids {
    std::vector<double> lengths = {0.0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
    std::vector<double> magnitudes = {0.0,   25e3,  50e3,  75e3,  100e3, 125e3,
                                      150e3, 175e3, 200e3, 225e3, 250e3};
    std::vector<double> planes;  // defaults to 24 evenly spaced azimuths

    static CloudGrids defaults() {
        CloudGrids g;
        for (int i = 0; i < 24; ++i)
            g.planes.push_back(2.0 * std::numbers::pi * i / 24.0);
        return g;
    }
};

namespace detail {

struct ForwardPoint {
    Vec3 tip;
    double bend_angle;
};

inline ForwardPoint forward_at(const RobotModels& models, double spine_length, double magnitude,
                               double plane) {
    GroupPressures p = pressures_for_plane(magnitude, plane);
    BendConfig cfg = bend_config(models.geometry, models.material, models.curve,
                                 models.actuation, spine_length, p);
    TipPose pose = forward_kinematics(cfg, models.geometry);
    return {pose.position, cfg.bend_angle};
}

// Objective: tip distance, plus a steep penalty outside the angle window
// so the descent is pulled back into the constrained region.
inline double objective(const ForwardPoint& fp, const PlanRequest& request) {
    double err = (fp.tip - request.target).norm();
    if (request.angle) {
        double excess = std::abs(fp.bend_angle - request.angle->angle) -
                        request.angle->tolerance;
        if (excess > 0) err += 10.0 * excess;
    }
    return err;
}

struct Candidate {
    double length;
    double magnitude;
    double plane;
    ForwardPoint fp;
    double score;
};

inline Candidate evaluate(const RobotModels& models, const PlanRequest& request, double length,
                          double magnitude, double plane) {
    ForwardPoint fp = forward_at(models, length, magnitude, plane);
    Candidate c{length, magnitude, plane, fp, 0.0};
    c.score = objective(fp, request);
    return c;
}

// Tie-break order: score, then shorter spine, then less total pressure.
inline bool better(const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score < b.score;
    if (a.length != b.length) return a.length < b.length;
    return pressures_for_plane(a.magnitude, a.plane).total() <
           pressures_for_plane(b.magnitude, b.plane).total();
}

inline Candidate refine(const RobotModels& models, const PlanRequest& request, Candidate seed,
                        double max_spine) {
    double step_len = 0.025;
    double step_mag = 12.5e3;
    double step_plane = std::numbers::pi / 24.0;
    constexpr double step_floor = 1e-5;  // metres of spine-length step
    Candidate best = seed;
    for (int iter = 0; iter < 200 && step_len >= step_floor; ++iter) {
        bool improved = false;
        for (int axis = 0; axis < 3; ++axis) {
            for (double dir : {+1.0, -1.0}) {
                double len = best.length, mag = best.magnitude, plane = best.plane;
                if (axis == 0) len = std::clamp(len + dir * step_len, 0.0, max_spine);
                if (axis == 1) mag = std::clamp(mag + dir * step_mag, 0.0, request.pressure_max);
                if (axis == 2) {
                    plane += dir * step_plane;
                    plane = std::fmod(plane, 2.0 * std::numbers::pi);
                    if (plane < 0) plane += 2.0 * std::numbers::pi;
                }
                Candidate trial = evaluate(models, request, len, mag, plane);
                if (better(trial, best)) {
                    best = trial;
                    improved = true;
                }
            }
        }
        if (!improved) {
            step_len *= 0.5;
            step_mag *= 0.5;
            step_plane *= 0.5;
        }
    }
    return best;
}

}  // namespace detail

inline std::vector<CloudPoint> workspace_cloud(const RobotModels& models,
                                               const CloudGrids& grids = CloudGrids::defaults()) {
    std::vector<CloudPoint> cloud;
    for (double ls : grids.lengths)
        for (double mag : grids.magnitudes)
            for (double plane : grids.planes) {
                detail::ForwardPoint fp = detail::forward_at(models, ls, mag, plane);
                cloud.push_back({ls, mag, plane, fp.tip, fp.bend_angle});
            }
    return cloud;
}

inline Plan plan(const PlanRequest& request, const RobotModels& models) {
    if (!(request.tolerance > 0)) throw DomainError("plan: tolerance must be positive");
    if (!(request.pressure_max > 0) || request.pressure_max > group_pressure_limit)
        throw DomainError("plan: pressure_max outside (0, group limit]");
    const double max_spine = models.geometry.spine_max_length;

    CloudGrids grids = CloudGrids::defaults();
    grids.lengths.clear();
    for (double ls : request.spine_grid) {
        if (!(ls >= 0) || !(ls <= max_spine))
            throw DomainError("plan: spine grid entry outside [0, spine_max_length]");
        grids.lengths.push_back(ls);
    }
    grids.magnitudes.clear();
    constexpr int pressure_points = 11;
    for (int i = 0; i < pressure_points; ++i)
        grids.magnitudes.push_back(request.pressure_max * i / (pressure_points - 1));

    // Grid seeding; keep the best few distinct seeds for refinement.
    std::vector<detail::Candidate> seeds;
    for (double ls : grids.lengths)
        for (double mag : grids.magnitudes)
            for (double plane : grids.planes) {
                detail::Candidate c = detail::evaluate(models, request, ls, mag, plane);
                seeds.push_back(c);
            }
    std::sort(seeds.begin(), seeds.end(), detail::better);

    if (seeds.front().score > 10.0 * request.tolerance)
        throw UnreachableError("no grid configuration within 10x tolerance of the target",
                               seeds.front().score);

    detail::Candidate best = detail::refine(models, request, seeds[0], max_spine);
    for (size_t i = 1; i < std::min<size_t>(seeds.size(), 3); ++i) {
        detail::Candidate trial = detail::refine(models, request, seeds[i], max_spine);
        if (detail::better(trial, best)) best = trial;
    }

    double tip_error = (best.fp.tip - request.target).norm();
    bool angle_ok = true;
    if (request.angle)
        angle_ok = std::abs(best.fp.bend_angle - request.angle->angle) <=
                   request.angle->tolerance + 1e-12;
    if (tip_error > request.tolerance || !angle_ok)
        throw UnreachableError("no plan within tolerance of the target", tip_error);

    Plan result;
    result.spine_length = best.length;
    result.pressures = pressures_for_plane(best.magnitude, best.plane);
    result.predicted_tip = best.fp.tip;
    result.tip_error = tip_error;
    result.bend_angle = best.fp.bend_angle;
    // Interpolated means the spine length is neither zero nor one of the
    // bench-calibrated sample lengths. The snap window is wider than the
    // descent's final step so converged-on-sample solutions do not flag.
    constexpr double snap = 5e-5;
    result.interpolated = std::abs(best.length) >= snap;
    for (const auto& s : models.curve.samples)
        if (std::abs(best.length - s.length) < snap) result.interpolated = false;
    result.commands = command_sequence(best.length, result.pressures);
    return result;
}

}  // namespace softspine

#endif
