// Acceptance gate: one check per shipping criterion, one PASS/FAIL line
// each, nonzero exit when anything fails. Kept free of the unit-test
// framework so it can run standalone.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "softspine/softspine.hpp"

using namespace softspine;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& label, const std::string& detail) {
    std::printf("%s  %d  %s (%s)\n", ok ? "PASS" : "FAIL", id, label.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Numerical double integration of the cantilever curvature agrees with
// the closed-form profile over randomized beams.
void check_beam_oracle() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> mod(5e4, 2e7);
    std::uniform_real_distribution<double> len(0.03, 0.60);
    std::uniform_real_distribution<double> rad(0.003, 0.06);
    std::uniform_real_distribution<double> force(0.05, 30.0);
    std::uniform_real_distribution<double> frac(0.01, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double L = len(rng);
        BeamSpec spec = BeamSpec::from_radius(L, mod(rng), rad(rng));
        double F = force(rng);
        double x = frac(rng) * L;
        double numeric = deflection_oracle(spec, F, x);
        double closed = deflection_at(spec, F, x);
        double rel = std::abs(numeric - closed) / std::abs(closed);
        if (rel > worst) worst = rel;
    }
    double elapsed = seconds_since(start);
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max rel err %.2e over 100 beams, %.2f s", worst,
                  elapsed);
    report(1, worst < 1e-8 && elapsed < 5.0, "beam integration matches closed form", detail);
}

// 2. modulus_from_tip inverts tip_deflection.
void check_modulus_round_trip() {
    std::mt19937_64 rng(102);
    std::uniform_real_distribution<double> mod(5e4, 2e7);
    std::uniform_real_distribution<double> len(0.03, 0.60);
    std::uniform_real_distribution<double> rad(0.003, 0.06);
    std::uniform_real_distribution<double> force(0.05, 30.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double E = mod(rng), L = len(rng), r = rad(rng), F = force(rng);
        BeamSpec spec = BeamSpec::from_radius(L, E, r);
        double recovered = modulus_from_tip(F, L, r, tip_deflection(spec, F));
        double rel = std::abs(recovered - E) / E;
        if (rel > worst) worst = rel;
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max rel err %.2e over 100 beams", worst);
    report(2, worst < 1e-9, "modulus recovery inverts tip deflection", detail);
}

// 3. The bench curve holds the six reference moduli exactly, and the
// estimator recovers them from synthetic closed-form data.
void check_bench_moduli() {
    const double expected[6][2] = {{0.05, 0.318e6}, {0.10, 1.323e6}, {0.15, 2.032e6},
                                   {0.20, 3.069e6}, {0.25, 3.763e6}, {0.30, 4.389e6}};
    const StiffnessCurve& curve = default_curve();
    bool fixtures_ok = curve.samples.size() == 6;
    for (int i = 0; fixtures_ok && i < 6; ++i)
        fixtures_ok = curve.samples[i].length == expected[i][0] &&
                      curve.samples[i].modulus == expected[i][1];

    RobotGeometry geom;
    std::vector<ForceDeflectionRecord> records;
    for (const auto& s : curve.samples) {
        BeamSpec spec = BeamSpec::from_radius(s.length, s.modulus, geom.spine_radius);
        for (double force : {0.5, 1.5, 4.0})
            records.push_back(
                {s.length, force, tip_deflection(spec, force), Phase::loading});
    }
    auto samples = estimate_moduli(records, geom);
    double worst = 1.0;
    if (samples.size() == curve.samples.size()) {
        worst = 0.0;
        for (size_t i = 0; i < samples.size(); ++i) {
            double rel = std::abs(samples[i].modulus - curve.samples[i].modulus) /
                         curve.samples[i].modulus;
            if (rel > worst) worst = rel;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "fixtures %s, recovery max rel err %.2e",
                  fixtures_ok ? "exact" : "WRONG", worst);
    report(3, fixtures_ok && worst < 1e-6, "bench moduli fixed and recoverable", detail);
}

// 4. The two-parameter fit reproduces both anchor angles; the
// one-parameter fit demonstrably cannot, and the bend-angle grid is
// monotone in both axes.
void check_bending_anchors() {
    FitResult fit = fit_actuation(anchor_bending_records(), {}, {}, default_curve());
    ActuationModel model = to_actuation_model(fit);
    BendConfig cfg0 = bend_config({}, {}, default_curve(), model, 0.0, {250e3, 0.0, 0.0});
    BendConfig cfg30 = bend_config({}, {}, default_curve(), model, 0.30, {250e3, 0.0, 0.0});
    double err0 = std::abs(rad_to_deg(cfg0.bend_angle) - 65.64);
    double err30 = std::abs(rad_to_deg(cfg30.bend_angle) - 41.50);

    FitOptions pinned;
    pinned.fix_scale = 1.0;
    FitResult one_param =
        fit_actuation(anchor_bending_records(), {}, {}, default_curve(), pinned);
    double rel30 = std::abs(one_param.residuals[1].error) /
                   one_param.residuals[1].record.bend_angle;

    std::vector<double> lengths = {0.0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
    std::vector<double> pressures = {50e3, 100e3, 150e3, 200e3, 250e3};
    auto table = bend_angle_table({}, {}, default_curve(), model, lengths, pressures);
    bool monotone = true;
    for (size_t r = 0; r < table.size(); ++r)
        for (size_t c = 0; c < table[r].size(); ++c) {
            if (r > 0 && table[r][c] > table[r - 1][c] + 1e-12) monotone = false;
            if (c > 0 && table[r][c] < table[r][c - 1] - 1e-12) monotone = false;
        }

    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "anchor errs %.2e/%.2e deg, one-parameter 30cm err %.1f%%, grid %s",
                  err0, err30, rel30 * 100.0, monotone ? "monotone" : "NOT monotone");
    report(4, err0 < 0.01 && err30 < 0.01 && rel30 < 0.50 && monotone,
           "bending anchors fit and grid monotone", detail);
}

// 5. Predicted reaches sit within the reported residual of the measured
// reaches, and the 0-vs-30 cm reach difference reproduces within that
// residual budget.
void check_tip_anchors() {
    ActuationModel model = anchor_calibration();
    auto reach = [&](double spine) {
        BendConfig cfg = bend_config({}, {}, default_curve(), model, spine, {250e3, 0.0, 0.0});
        TipPose pose = forward_kinematics(cfg, {});
        return std::hypot(pose.position.x, pose.position.y);
    };
    double u0 = m_to_cm(reach(0.0));
    double u30 = m_to_cm(reach(0.30));
    double res0 = std::abs(u0 - 20.87);
    double res30 = std::abs(u30 - 10.51);
    double rel0 = res0 / 20.87;
    double rel30 = res30 / 10.51;
    double diff_err = std::abs((u0 - u30) - 10.36);

    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "reach residuals %.2f%%/%.2f%%, reach-difference gap %.2f cm vs budget %.2f",
                  rel0 * 100.0, rel30 * 100.0, diff_err, res0 + res30);
    report(5, rel0 < 0.15 && rel30 < 0.15 && diff_err <= res0 + res30 + 1e-9,
           "tip reach anchors within residual budget", detail);
}

// 6. Valve truth table and transition legality.
void check_pneumatics() {
    ValveConfig idle = valve_config(SystemState::idle);
    ValveConfig growing = valve_config(SystemState::growing);
    ValveConfig jammed = valve_config(SystemState::jammed);
    bool table_ok =
        idle.v1 == ValveState::open && idle.v2 == ValveState::closed &&
        idle.v3 == ValveState::open && idle.v4 == ValveState::closed &&
        growing.v1 == ValveState::closed && growing.v2 == ValveState::open &&
        growing.v3 == ValveState::open && growing.v4 == ValveState::closed &&
        jammed.v1 == ValveState::open && jammed.v2 == ValveState::closed &&
        jammed.v3 == ValveState::closed && jammed.v4 == ValveState::open;

    int legal = 0, illegal = 0;
    for (SystemState s : {SystemState::idle, SystemState::growing, SystemState::jammed})
        for (SpineEvent e : {SpineEvent::start_grow, SpineEvent::jam, SpineEvent::release}) {
            try {
                step(s, e);
                ++legal;
            } catch (const TransitionError&) {
                ++illegal;
            }
        }
    bool sequence_ok = legal == 3 && illegal == 6 &&
                       step(SystemState::idle, SpineEvent::start_grow) ==
                           SystemState::growing &&
                       step(SystemState::growing, SpineEvent::jam) == SystemState::jammed &&
                       step(SystemState::jammed, SpineEvent::release) == SystemState::idle;

    char detail[96];
    std::snprintf(detail, sizeof(detail), "truth table %s, %d/9 transitions legal",
                  table_ok ? "exact" : "WRONG", legal);
    report(6, table_ok && sequence_ok, "valve table and transition guards", detail);
}

// 7. Monte Carlo growth statistics against the bench table.
void check_length_statistics() {
    auto start = std::chrono::steady_clock::now();
    LengthErrorModel model = default_error_model();
    const std::vector<double> targets = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
    std::vector<GrowthRealization> runs;
    runs.reserve(targets.size() * 10000);
    for (size_t t = 0; t < targets.size(); ++t)
        for (int i = 0; i < 10000; ++i)
            runs.push_back(
                simulate_growth(targets[t], model, static_cast<uint64_t>(t) * 100003 + i));
    ErrorStats stats = error_stats(runs);

    // Re-run a slice with the same seeds; the log bytes must not move.
    std::vector<GrowthRealization> again;
    for (int i = 0; i < 1000; ++i) again.push_back(simulate_growth(0.20, model, 300009 + i));
    std::vector<GrowthRealization> expect;
    for (int i = 0; i < 1000; ++i) expect.push_back(simulate_growth(0.20, model, 300009 + i));
    bool deterministic = realization_log_csv(again) == realization_log_csv(expect);

    double elapsed = seconds_since(start);
    double mean_pct = stats.mean_rel_error * 100.0;
    double max_std_cm = m_to_cm(stats.max_std);
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "mean rel err %.3f%% (gate 5.18+-0.30), max std %.3f cm (gate 0.39+-0.05), "
                  "%s, %.2f s",
                  mean_pct, max_std_cm, deterministic ? "deterministic" : "NONDETERMINISTIC",
                  elapsed);
    report(7,
           std::abs(mean_pct - 5.18) <= 0.30 && std::abs(max_std_cm - 0.39) <= 0.05 &&
               deterministic && elapsed < 10.0,
           "growth statistics match the bench table", detail);
}

// 8. Planner round trip over workspace-sampled targets, with every
// emitted command sequence replaying cleanly.
void check_planner_round_trip() {
    RobotModels models = default_models();
    std::mt19937_64 rng(108);
    std::uniform_real_distribution<double> len(0.0, 0.30);
    std::uniform_real_distribution<double> mag(10e3, 250e3);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.14159265358979323846);

    int solved = 0;
    int planned = 0;
    int replayed = 0;
    double worst_seconds = 0.0;
    const int cases = 200;
    for (int i = 0; i < cases; ++i) {
        GroupPressures p = pressures_for_plane(mag(rng), ang(rng));
        BendConfig cfg = bend_config(models.geometry, models.material, models.curve,
                                     models.actuation, len(rng), p);
        TipPose pose = forward_kinematics(cfg, models.geometry);

        PlanRequest request;
        request.target = pose.position;
        auto t0 = std::chrono::steady_clock::now();
        try {
            Plan result = plan(request, models);
            ++planned;
            if (result.tip_error < 0.001) ++solved;
            Scenario scenario =
                parse_scenario_text(scenario_script(result.commands), "roundtrip");
            replay(scenario, models, default_error_model(), 1000 + i);
            ++replayed;
        } catch (const UnreachableError&) {
            // counts as unsolved
        }
        double dt = seconds_since(t0);
        if (dt > worst_seconds) worst_seconds = dt;
    }
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "%d/%d under 1 mm, %d/%d replays clean, max %.2f s", solved, cases,
                  replayed, planned, worst_seconds);
    report(8, solved >= 190 && replayed == planned && worst_seconds < 1.0,
           "planner round trip", detail);
}

// 9. Bundled demonstration scenarios: direction of the bend sweep and
// byte-stable logs.
void check_scenarios() {
    RobotModels models = default_models();
    LengthErrorModel error_model = default_error_model();

    Scenario a = parse_scenario_text(bundled_scenario_text("fig9a"), "fig9a");
    TrajectoryLog log_a = replay(a, models, error_model, 12345);
    bool a_monotone = true;
    for (size_t i = 1; i < log_a.rows.size(); ++i)
        if (log_a.rows[i].bend_angle > log_a.rows[i - 1].bend_angle + 1e-12)
            a_monotone = false;

    Scenario b = parse_scenario_text(bundled_scenario_text("fig9b"), "fig9b");
    TrajectoryLog log_b = replay(b, models, error_model, 12345);
    bool b_monotone = true;
    for (size_t i = 1; i < log_b.rows.size(); ++i)
        if (log_b.rows[i].bend_angle < log_b.rows[i - 1].bend_angle - 1e-12)
            b_monotone = false;

    bool stable = trajectory_csv(replay(a, models, error_model, 99)) ==
                      trajectory_csv(replay(a, models, error_model, 99)) &&
                  trajectory_csv(replay(b, models, error_model, 99)) ==
                      trajectory_csv(replay(b, models, error_model, 99));

    char detail[128];
    std::snprintf(detail, sizeof(detail), "release sweep %s, ramp-up %s, logs %s",
                  a_monotone ? "nonincreasing" : "WRONG",
                  b_monotone ? "nondecreasing" : "WRONG",
                  stable ? "byte-stable" : "UNSTABLE");
    report(9, a_monotone && b_monotone && stable, "bundled scenarios deterministic", detail);
}

}  // namespace

int main() {
    check_beam_oracle();
    check_modulus_round_trip();
    check_bench_moduli();
    check_bending_anchors();
    check_tip_anchors();
    check_pneumatics();
    check_length_statistics();
    check_planner_round_trip();
    check_scenarios();
    if (failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
