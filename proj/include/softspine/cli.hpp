#ifndef SOFTSPINE_CLI_HPP
#define SOFTSPINE_CLI_HPP

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "softspine/calibration.hpp"
#include "softspine/config.hpp"
#include "softspine/errors.hpp"
#include "softspine/planner.hpp"
#include "softspine/scenario.hpp"
#include "softspine/svg.hpp"
#include "softspine/text.hpp"
#include "softspine/units.hpp"

// Command-line front end. Exit codes: 0 success, 2 bad input (files,
// domains, malformed flags), 3 target unreachable, 4 scenario replay
// violation. stdout numbers are rounded to 4 significant figures; files
// keep full precision.

namespace softspine {

namespace cli_detail {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 2;
inline constexpr int exit_unreachable = 3;
inline constexpr int exit_replay = 4;

struct ModelFlags {
    std::string config_path;
    std::string curve_path;
    std::string fit_path;
};

inline void add_model_flags(CLI::App* cmd, ModelFlags& flags) {
    cmd->add_option("--config", flags.config_path, "robot geometry/material config file");
    cmd->add_option("--curve", flags.curve_path, "stiffness curve CSV (length_cm,modulus_kpa)");
    cmd->add_option("--fit", flags.fit_path, "actuation fit CSV (parameter,value)");
}

inline StiffnessCurve load_curve_csv(const std::string& path) {
    auto lines = split_lines(read_text_file(path));
    if (lines.empty() || trim(lines[0]) != "length_cm,modulus_kpa")
        throw IngestError("expected header length_cm,modulus_kpa in " + path, 1);
    std::vector<StiffnessSample> samples;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::string line = trim(lines[i]);
        if (line.empty()) continue;
        auto cells = split(line, ',');
        double length_cm, modulus_kpa;
        if (cells.size() != 2 || !parse_double(cells[0], length_cm) ||
            !parse_double(cells[1], modulus_kpa))
            throw IngestError("bad row in " + path, static_cast<int>(i) + 1);
        samples.push_back({cm_to_m(length_cm), kpa_to_pa(modulus_kpa)});
    }
    return make_stiffness_curve(std::move(samples));
}

inline std::string curve_csv(const StiffnessCurve& curve) {
    std::string out = "length_cm,modulus_kpa\n";
    for (const auto& s : curve.samples)
        out += fmt_full(m_to_cm(s.length)) + "," + fmt_full(pa_to_kpa(s.modulus)) + "\n";
    return out;
}

inline ActuationModel load_fit_csv(const std::string& path) {
    auto lines = split_lines(read_text_file(path));
    if (lines.empty() || trim(lines[0]) != "parameter,value")
        throw IngestError("expected header parameter,value in " + path, 1);
    std::optional<double> gain, scale;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::string line = trim(lines[i]);
        if (line.empty()) continue;
        auto cells = split(line, ',');
        double v;
        if (cells.size() != 2 || !parse_double(cells[1], v))
            throw IngestError("bad row in " + path, static_cast<int>(i) + 1);
        std::string key = trim(cells[0]);
        if (key == "moment_gain_nm_per_pa") gain = v;
        if (key == "rigidity_scale") scale = v;
    }
    if (!gain || !scale)
        throw IngestError("fit file " + path +
                          " must provide moment_gain_nm_per_pa and rigidity_scale");
    return {*gain, *scale};
}

inline std::string fit_csv(const FitResult& fit) {
    std::string out = "parameter,value\n";
    out += "moment_gain_nm_per_pa," + fmt_full(fit.moment_gain) + "\n";
    out += "rigidity_scale," + fmt_full(fit.rigidity_scale) + "\n";
    out += "rms_error_rad," + fmt_full(fit.rms_error) + "\n";
    out += std::string("scale_fixed,") + (fit.scale_fixed ? "1" : "0") + "\n";
    return out;
}

inline RobotModels resolve_models(const ModelFlags& flags) {
    RobotModels models;
    if (!flags.config_path.empty()) {
        RobotConfig cfg = load_config(flags.config_path);
        models.geometry = cfg.geometry;
        models.material = cfg.material;
    }
    if (!flags.curve_path.empty()) models.curve = load_curve_csv(flags.curve_path);
    if (!flags.fit_path.empty())
        models.actuation = load_fit_csv(flags.fit_path);
    else
        models.actuation = anchor_calibration(models.geometry, models.material, models.curve);
    return models;
}

inline std::string plan_csv_header() {
    return "spine_length_cm,p1_kpa,p2_kpa,p3_kpa,tip_x_cm,tip_y_cm,tip_z_cm,tip_error_mm";
}

inline std::string plan_csv_row(const Plan& p, std::string (*fmt)(double)) {
    std::string out;
    out += fmt(m_to_cm(p.spine_length));
    for (double v : {pa_to_kpa(p.pressures.p1), pa_to_kpa(p.pressures.p2),
                     pa_to_kpa(p.pressures.p3), m_to_cm(p.predicted_tip.x),
                     m_to_cm(p.predicted_tip.y), m_to_cm(p.predicted_tip.z),
                     p.tip_error * 1000.0})
        out += "," + fmt(v);
    return out;
}

inline std::vector<std::pair<double, double>> profile_xz(const BendConfig& cfg) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : backbone_points(cfg))
        pts.push_back({m_to_cm(std::hypot(p.x, p.y)), m_to_cm(p.z)});
    return pts;
}

// --- subcommand bodies ----------------------------------------------------

struct CalibrateArgs {
    std::string spine_csv;
    std::string bending_csv;
    std::string out_dir = ".";
    std::string config_path;
};

inline int run_calibrate(const CalibrateArgs& args, std::ostream& out, std::ostream& err) {
    if (args.spine_csv.empty() && args.bending_csv.empty()) {
        err << "calibrate: need --spine-csv and/or --bending-csv\n";
        return exit_input;
    }
    RobotGeometry geom;
    MaterialParams mat;
    if (!args.config_path.empty()) {
        RobotConfig cfg = load_config(args.config_path);
        geom = cfg.geometry;
        mat = cfg.material;
    }
    std::filesystem::create_directories(args.out_dir);
    StiffnessCurve curve = default_curve();

    if (!args.spine_csv.empty()) {
        auto records = ingest_force_deflection(args.spine_csv, geom);
        std::vector<std::string> warnings;
        auto samples = estimate_moduli(records, geom, &warnings);
        for (const auto& w : warnings) err << "warning: " << w << "\n";
        curve = make_stiffness_curve(samples);
        std::string path = args.out_dir + "/stiffness_curve.csv";
        write_text_file(path, curve_csv(curve));
        out << "stiffness curve (" << samples.size() << " lengths) -> " << path << "\n";
        if (auto gap = hysteresis_gap(records))
            out << "hysteresis gap (unloading vs loading): " << fmt_sig4(*gap * 100.0)
                << "%\n";
    }

    if (!args.bending_csv.empty()) {
        auto records = ingest_bending(args.bending_csv, geom);
        FitResult fit = fit_actuation(records, geom, mat, curve);
        std::string fit_path = args.out_dir + "/actuation_fit.csv";
        write_text_file(fit_path, fit_csv(fit));
        std::string report = residual_report(fit);

        // Tip-reach residuals for records that carry measured reach.
        ActuationModel model = to_actuation_model(fit);
        std::string reach_lines;
        for (const auto& rec : records) {
            if (!rec.tip_x) continue;
            BendConfig cfg = bend_config(geom, mat, curve, model, rec.spine_length,
                                         {rec.pressure, 0.0, 0.0});
            TipPose pose = forward_kinematics(cfg, geom);
            double predicted = std::hypot(pose.position.x, pose.position.y);
            double rel = (predicted - *rec.tip_x) / *rec.tip_x;
            reach_lines += "reach at " + fmt_sig4(m_to_cm(rec.spine_length)) + " cm, " +
                           fmt_sig4(pa_to_kpa(rec.pressure)) + " kPa: predicted " +
                           fmt_sig4(m_to_cm(predicted)) + " cm vs measured " +
                           fmt_sig4(m_to_cm(*rec.tip_x)) + " cm (" +
                           fmt_sig4(rel * 100.0) + "%)\n";
        }
        if (!reach_lines.empty()) report += reach_lines;

        std::string report_path = args.out_dir + "/residual_report.txt";
        write_text_file(report_path, report);
        out << report;
        out << "fit -> " << fit_path << "\n";
    }
    return exit_ok;
}

struct SimulateArgs {
    double spine_cm = 0.0;
    double pressure_kpa = 0.0;
    double phi_deg = 0.0;
    bool spine_set = false;
    bool pressure_set = false;
    bool table = false;
    std::string svg_path;
    ModelFlags models;
};

inline int run_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
    RobotModels models = resolve_models(args.models);
    const std::vector<double> table_lengths = {0.0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
    const std::vector<double> table_pressures = {50e3, 100e3, 150e3, 200e3, 250e3};

    if (args.table) {
        auto table = bend_angle_table(models.geometry, models.material, models.curve,
                                      models.actuation, table_lengths, table_pressures);
        out << "spine_cm";
        for (double p : table_pressures) out << ",theta_" << fmt_sig4(pa_to_kpa(p)) << "kpa";
        out << "\n";
        for (size_t i = 0; i < table_lengths.size(); ++i) {
            out << fmt_sig4(m_to_cm(table_lengths[i]));
            for (double v : table[i]) out << "," << fmt_sig4(v);
            out << "\n";
        }
        if (!args.svg_path.empty()) {
            std::vector<SvgSeries> series;
            for (double ls : table_lengths) {
                BendConfig cfg =
                    bend_config(models.geometry, models.material, models.curve,
                                models.actuation, ls, {table_pressures.back(), 0.0, 0.0});
                series.push_back({profile_xz(cfg), fmt_sig4(m_to_cm(ls)) + "cm"});
            }
            write_text_file(args.svg_path, polyline_svg(series));
            out << "profiles -> " << args.svg_path << "\n";
        }
        return exit_ok;
    }

    if (!args.spine_set || !args.pressure_set) {
        err << "simulate: need --spine-cm and --pressure-kpa (or --table)\n";
        return exit_input;
    }
    GroupPressures pressures =
        pressures_for_plane(kpa_to_pa(args.pressure_kpa), deg_to_rad(args.phi_deg));
    BendConfig cfg = bend_config(models.geometry, models.material, models.curve,
                                 models.actuation, cm_to_m(args.spine_cm), pressures);
    TipPose pose = forward_kinematics(cfg, models.geometry);
    out << "theta_deg: " << fmt_sig4(rad_to_deg(cfg.bend_angle)) << "\n";
    out << "tip_cm: " << fmt_sig4(m_to_cm(pose.position.x)) << " "
        << fmt_sig4(m_to_cm(pose.position.y)) << " " << fmt_sig4(m_to_cm(pose.position.z))
        << "\n";
    if (!args.svg_path.empty()) {
        write_text_file(args.svg_path, polyline_svg({{profile_xz(cfg), "profile"}}));
        out << "profile -> " << args.svg_path << "\n";
    }
    return exit_ok;
}

struct PlanArgs {
    std::vector<double> target_cm;
    double tol_mm = 5.0;
    double pressure_max_kpa = 250.0;
    std::optional<double> angle_deg;
    double angle_tol_deg = 2.0;
    std::string emit_scenario;
    std::string out_path;
    ModelFlags models;
};

inline int run_plan(const PlanArgs& args, std::ostream& out, std::ostream& err) {
    RobotModels models = resolve_models(args.models);
    PlanRequest request;
    request.target = {cm_to_m(args.target_cm[0]), cm_to_m(args.target_cm[1]),
                      cm_to_m(args.target_cm[2])};
    request.tolerance = args.tol_mm / 1000.0;
    request.pressure_max = kpa_to_pa(args.pressure_max_kpa);
    if (args.angle_deg)
        request.angle = AngleConstraint{deg_to_rad(*args.angle_deg),
                                        deg_to_rad(args.angle_tol_deg)};
    try {
        Plan p = plan(request, models);
        out << plan_csv_header() << "\n" << plan_csv_row(p, fmt_sig4) << "\n";
        out << "bend_angle_deg: " << fmt_sig4(rad_to_deg(p.bend_angle)) << "\n";
        if (p.interpolated) out << "note: spine length interpolated between samples\n";
        if (!args.out_path.empty())
            write_text_file(args.out_path, plan_csv_header() + "\n" +
                                                plan_csv_row(p, fmt_full) + "\n");
        if (!args.emit_scenario.empty()) {
            write_text_file(args.emit_scenario, scenario_script(p.commands));
            out << "scenario -> " << args.emit_scenario << "\n";
        }
        return exit_ok;
    } catch (const UnreachableError& e) {
        err << "unreachable: " << e.what() << " (best residual "
            << fmt_sig4(e.best_error_m * 1000.0) << " mm)\n";
        return exit_unreachable;
    }
}

struct RunScenarioArgs {
    std::string scenario;
    std::string log_path;
    std::string svg_path;
    uint64_t seed = 12345;
    ModelFlags models;
};

inline int run_run_scenario(const RunScenarioArgs& args, std::ostream& out, std::ostream& err) {
    RobotModels models = resolve_models(args.models);
    Scenario scenario;
    if (std::filesystem::exists(args.scenario)) {
        scenario = parse_scenario(args.scenario);
        scenario.name = std::filesystem::path(args.scenario).stem().string();
    } else if (const char* text = bundled_scenario_text(args.scenario)) {
        scenario = parse_scenario_text(text, args.scenario);
    } else {
        err << "run-scenario: no file or bundled scenario named '" << args.scenario << "'\n";
        return exit_input;
    }

    try {
        TrajectoryLog log = replay(scenario, models, default_error_model(), args.seed);
        std::string log_path = args.log_path.empty() ? scenario.name + "_log.csv"
                                                     : args.log_path;
        write_text_file(log_path, trajectory_csv(log));
        out << "replayed " << log.rows.size() << " commands -> " << log_path << "\n";
        if (!log.rows.empty()) {
            const auto& last = log.rows.back();
            out << "final state: " << to_string(last.state)
                << ", theta_deg: " << fmt_sig4(rad_to_deg(last.bend_angle)) << "\n";
        }
        if (!args.svg_path.empty()) {
            write_text_file(args.svg_path, tip_path_svg(log));
            out << "tip path -> " << args.svg_path << "\n";
        }
        return exit_ok;
    } catch (const TransitionError& e) {
        err << "replay violation: " << e.what() << "\n";
        return exit_replay;
    }
}

}  // namespace cli_detail

// Entry point shared by the binary and the tests. `args` excludes the
// program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"soft continuum robot with a jammable growing spine: "
                 "calibrate, simulate, plan, replay"};
    app.require_subcommand(1);

    CalibrateArgs cal;
    auto* cal_cmd = app.add_subcommand("calibrate", "estimate stiffness and actuation models");
    cal_cmd->add_option("--spine-csv", cal.spine_csv,
                        "force/deflection CSV (length_cm,force_n,deflection_cm,phase)");
    cal_cmd->add_option("--bending-csv", cal.bending_csv,
                        "bending CSV (length_cm,pressure_kpa,angle_deg,tip_x_cm,tip_y_cm)");
    cal_cmd->add_option("--out", cal.out_dir, "output directory");
    cal_cmd->add_option("--config", cal.config_path, "robot geometry/material config file");

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "forward-model one configuration");
    auto* spine_opt = sim_cmd->add_option("--spine-cm", sim.spine_cm, "jammed spine length");
    auto* pressure_opt =
        sim_cmd->add_option("--pressure-kpa", sim.pressure_kpa, "pressure-vector norm");
    sim_cmd->add_option("--phi-deg", sim.phi_deg, "bend plane azimuth");
    sim_cmd->add_flag("--table", sim.table, "emit the bend-angle grid as CSV");
    sim_cmd->add_option("--svg", sim.svg_path, "write bending profile SVG");
    add_model_flags(sim_cmd, sim.models);

    PlanArgs pl;
    auto* plan_cmd = app.add_subcommand("plan", "solve for a tip target");
    plan_cmd->add_option("--target-cm", pl.target_cm, "target tip x y z")
        ->expected(3)
        ->required();
    plan_cmd->add_option("--tol-mm", pl.tol_mm, "tip tolerance");
    plan_cmd->add_option("--pressure-max-kpa", pl.pressure_max_kpa, "per-group pressure cap");
    double angle_tmp = 0.0;
    auto* angle_opt = plan_cmd->add_option("--angle-deg", angle_tmp, "bend angle constraint");
    plan_cmd->add_option("--angle-tol-deg", pl.angle_tol_deg, "bend angle tolerance");
    plan_cmd->add_option("--emit-scenario", pl.emit_scenario, "write plan as scenario script");
    plan_cmd->add_option("--out", pl.out_path, "write plan CSV");
    add_model_flags(plan_cmd, pl.models);

    RunScenarioArgs rs;
    auto* rs_cmd = app.add_subcommand("run-scenario", "replay a timed command script");
    rs_cmd->add_option("--scenario", rs.scenario, "script path or bundled name")->required();
    rs_cmd->add_option("--log", rs.log_path, "trajectory log path");
    rs_cmd->add_option("--svg", rs.svg_path, "write tip path SVG");
    rs_cmd->add_option("--seed", rs.seed, "growth noise seed");
    add_model_flags(rs_cmd, rs.models);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::Success&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_input;
    }

    try {
        if (app.got_subcommand(cal_cmd)) return run_calibrate(cal, out, err);
        if (app.got_subcommand(sim_cmd)) {
            sim.spine_set = spine_opt->count() > 0;
            sim.pressure_set = pressure_opt->count() > 0;
            return run_simulate(sim, out, err);
        }
        if (app.got_subcommand(plan_cmd)) {
            if (angle_opt->count() > 0) pl.angle_deg = angle_tmp;
            return run_plan(pl, out, err);
        }
        if (app.got_subcommand(rs_cmd)) return run_run_scenario(rs, out, err);
        err << "no subcommand\n";
        return exit_input;
    } catch (const UnreachableError& e) {
        err << "unreachable: " << e.what() << "\n";
        return cli_detail::exit_unreachable;
    } catch (const TransitionError& e) {
        err << "replay violation: " << e.what() << "\n";
        return cli_detail::exit_replay;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return cli_detail::exit_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return cli_detail::exit_input;
    }
}

}  // namespace softspine

#endif
