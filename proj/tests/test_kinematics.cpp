#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "softspine/kinematics.hpp"

using namespace softspine;

namespace {
// Quarter-circle arc of length 0.4: tip sits at (2L/pi, 2L/pi) in the
// bend plane. Frozen independently.
constexpr double kArc90 = 0.2546479089470;
constexpr double pi = std::numbers::pi;
}  // namespace

TEST_CASE("straight body maps to a straight tip") {
    BendConfig cfg = bend_config({}, {}, default_curve(), {}, 0.0, {0.0, 0.0, 0.0});
    CHECK(cfg.bend_angle == 0.0);
    TipPose pose = forward_kinematics(cfg, {});
    CHECK(pose.position.x == Catch::Approx(0.0).margin(1e-15));
    CHECK(pose.position.y == Catch::Approx(0.0).margin(1e-15));
    CHECK(pose.position.z == Catch::Approx(0.40));
    CHECK(pose.tangent.z == Catch::Approx(1.0));
}

TEST_CASE("quarter-circle arc lands on the frozen tip") {
    BendConfig cfg;
    cfg.curvatures = {{0.40, (pi / 2.0) / 0.40}};
    cfg.bend_angle = pi / 2.0;
    cfg.bend_plane = 0.0;
    TipPose pose = forward_kinematics(cfg, {});
    CHECK(pose.position.x == Catch::Approx(kArc90).epsilon(1e-12));
    CHECK(pose.position.z == Catch::Approx(kArc90).epsilon(1e-12));
    CHECK(pose.tangent.x == Catch::Approx(1.0).margin(1e-12));
    CHECK(pose.tangent.z == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("segments must cover the body length") {
    BendConfig cfg;
    cfg.curvatures = {{0.25, 1.0}};
    CHECK_THROWS_AS(forward_kinematics(cfg, {}), DomainError);
}

TEST_CASE("effective moment from one group") {
    ActuationModel model{2.903065197075e-05, 1.0};
    MomentVector mv = effective_moment({250e3, 0.0, 0.0}, model);
    CHECK(mv.magnitude == Catch::Approx(model.moment_gain * 250e3));
    CHECK(mv.bend_plane == Catch::Approx(0.0).margin(1e-15));

    mv = effective_moment({0.0, 100e3, 0.0}, model);
    CHECK(mv.bend_plane == Catch::Approx(2.0 * pi / 3.0));

    mv = effective_moment({0.0, 0.0, 0.0}, model);
    CHECK(mv.magnitude == 0.0);
    CHECK(mv.bend_plane == 0.0);
}

TEST_CASE("equal pressures on all groups cancel") {
    MomentVector mv = effective_moment({80e3, 80e3, 80e3}, {});
    CHECK(mv.magnitude == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("pressure validation") {
    CHECK_THROWS_AS(effective_moment({-1.0, 0.0, 0.0}, {}), DomainError);
    CHECK_THROWS_AS(effective_moment({0.0, 301e3, 0.0}, {}), DomainError);
    GroupPressures ok{250e3, 0.0, 0.0};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.total() == Catch::Approx(250e3));
}

TEST_CASE("plane decomposition round-trips through the moment") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> mag(0.0, 250e3);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    for (int i = 0; i < 200; ++i) {
        double V = mag(rng), phi = ang(rng);
        GroupPressures p = pressures_for_plane(V, phi);
        // At most the two groups adjacent to the plane carry pressure.
        int active = (p.p1 > 1e-9) + (p.p2 > 1e-9) + (p.p3 > 1e-9);
        CHECK(active <= 2);
        CHECK_NOTHROW(p.validate());
        MomentVector mv = effective_moment(p, {1.0, 1.0});
        CHECK(mv.magnitude == Catch::Approx(V).margin(1e-6));
        if (V > 1e-6) {
            double wrapped = std::remainder(mv.bend_plane - phi, 2.0 * pi);
            CHECK(std::abs(wrapped) < 1e-9);
        }
    }
    CHECK_THROWS_AS(pressures_for_plane(-1.0, 0.0), DomainError);
}

TEST_CASE("plane decomposition touches the single group at sector edges") {
    GroupPressures p = pressures_for_plane(200e3, 0.0);
    CHECK(p.p1 == Catch::Approx(200e3));
    CHECK(p.p2 == Catch::Approx(0.0).margin(1e-9));
    p = pressures_for_plane(200e3, 2.0 * pi / 3.0);
    CHECK(p.p2 == Catch::Approx(200e3));
    p = pressures_for_plane(200e3, 2.0 * pi);
    CHECK(p.p1 == Catch::Approx(200e3));
}

TEST_CASE("bend plane rotates the tip out of the x-z plane") {
    ActuationModel model{2.903065197075e-05, 2.282747763187};
    BendConfig straight = bend_config({}, {}, default_curve(), model, 0.0, {150e3, 0.0, 0.0});
    TipPose a = forward_kinematics(straight, {});
    BendConfig rotated = bend_config({}, {}, default_curve(), model, 0.0, {0.0, 150e3, 0.0});
    TipPose b = forward_kinematics(rotated, {});
    double reach_a = std::hypot(a.position.x, a.position.y);
    double reach_b = std::hypot(b.position.x, b.position.y);
    CHECK(reach_a == Catch::Approx(reach_b).epsilon(1e-12));
    CHECK(a.position.z == Catch::Approx(b.position.z).epsilon(1e-12));
    CHECK(b.position.y == Catch::Approx(reach_b * std::sin(2.0 * pi / 3.0)).epsilon(1e-9));
}

TEST_CASE("jammed spine stiffens the covered span") {
    ActuationModel model{2.903065197075e-05, 2.282747763187};
    BendConfig soft = bend_config({}, {}, default_curve(), model, 0.0, {250e3, 0.0, 0.0});
    BendConfig stiff = bend_config({}, {}, default_curve(), model, 0.30, {250e3, 0.0, 0.0});
    CHECK(stiff.bend_angle < soft.bend_angle);
    REQUIRE(stiff.curvatures.size() == 2);
    CHECK(stiff.curvatures[0].curvature < stiff.curvatures[1].curvature);
    // Flexible tail curvature matches the spineless curvature.
    CHECK(stiff.curvatures[1].curvature ==
          Catch::Approx(soft.curvatures[0].curvature).epsilon(1e-12));
}

TEST_CASE("bend angle table is monotone in both axes") {
    ActuationModel model{2.903065197075e-05, 2.282747763187};
    std::vector<double> lengths = {0.0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
    std::vector<double> pressures = {50e3, 100e3, 150e3, 200e3, 250e3};
    auto table = bend_angle_table({}, {}, default_curve(), model, lengths, pressures);
    REQUIRE(table.size() == 7);
    REQUIRE(table[0].size() == 5);
    for (size_t r = 0; r < table.size(); ++r)
        for (size_t c = 0; c < table[r].size(); ++c) {
            if (r > 0) CHECK(table[r][c] <= table[r - 1][c] + 1e-12);
            if (c > 0) CHECK(table[r][c] >= table[r][c - 1] - 1e-12);
        }
}

TEST_CASE("backbone sampling starts at the base and ends at the tip") {
    ActuationModel model{2.903065197075e-05, 2.282747763187};
    BendConfig cfg = bend_config({}, {}, default_curve(), model, 0.20, {250e3, 0.0, 0.0});
    auto pts = backbone_points(cfg, 16);
    REQUIRE(pts.size() == 1 + 16 * cfg.curvatures.size());
    CHECK(pts.front().norm() == Catch::Approx(0.0).margin(1e-15));
    TipPose pose = forward_kinematics(cfg, {});
    CHECK((pts.back() - pose.position).norm() == Catch::Approx(0.0).margin(1e-12));
    CHECK_THROWS_AS(backbone_points(cfg, 0), DomainError);
}
