#ifndef SOFTSPINE_SCENARIO_HPP
#define SOFTSPINE_SCENARIO_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "softspine/errors.hpp"
#include "softspine/kinematics.hpp"
#include "softspine/length_control.hpp"
#include "softspine/planner.hpp"
#include "softspine/pneumatics.hpp"
#include "softspine/svg.hpp"
#include "softspine/text.hpp"
#include "softspine/units.hpp"

// Scenario scripts drive the timed command interface:
//   t<seconds> <command> [args]
// with commands start_grow, grow_to <cm>, jam, release,
// set_pressures <kPa> <kPa> <kPa>, wait. `#` starts a comment.
// Timestamps must not decrease. Replay runs every command through the
// pneumatic state machine and logs one row per command.

namespace softspine {

struct ScenarioCommand {
    enum class Kind { start_grow, grow_to, jam, release, set_pressures, wait };
    double time = 0.0;  // s
    Kind kind = Kind::wait;
    double length = 0.0;  // m, grow_to only
    GroupPressures pressures;  // set_pressures only
    int line = 0;  // 1-based script line
};

struct Scenario {
    std::string name;
    std::vector<ScenarioCommand> commands;
};

inline Scenario parse_scenario_text(const std::string& text, const std::string& name) {
    Scenario scenario;
    scenario.name = name;
    auto lines = split_lines(text);
    double last_time = 0.0;
    bool have_any = false;
    for (size_t i = 0; i < lines.size(); ++i) {
        int line_no = static_cast<int>(i) + 1;
        std::string line = lines[i];
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] != 't') throw ConfigError("expected t<seconds> prefix", line_no);

        std::replace(line.begin(), line.end(), '\t', ' ');
        std::vector<std::string> tokens;
        for (const auto& tok : split(line, ' '))
            if (!trim(tok).empty()) tokens.push_back(trim(tok));

        ScenarioCommand cmd;
        cmd.line = line_no;
        if (!parse_double(tokens[0].substr(1), cmd.time))
            throw ConfigError("bad timestamp '" + tokens[0] + "'", line_no);
        if (have_any && cmd.time < last_time)
            throw ConfigError("timestamps must not decrease", line_no);
        last_time = cmd.time;
        have_any = true;

        if (tokens.size() < 2) throw ConfigError("missing command", line_no);
        const std::string& op = tokens[1];
        auto expect_args = [&](size_t n) {
            if (tokens.size() != 2 + n)
                throw ConfigError("'" + op + "' takes " + std::to_string(n) + " argument(s)",
                                  line_no);
        };
        if (op == "start_grow") {
            expect_args(0);
            cmd.kind = ScenarioCommand::Kind::start_grow;
        } else if (op == "jam") {
            expect_args(0);
            cmd.kind = ScenarioCommand::Kind::jam;
        } else if (op == "release") {
            expect_args(0);
            cmd.kind = ScenarioCommand::Kind::release;
        } else if (op == "wait") {
            expect_args(0);
            cmd.kind = ScenarioCommand::Kind::wait;
        } else if (op == "grow_to") {
            expect_args(1);
            double cm;
            if (!parse_double(tokens[2], cm)) throw ConfigError("bad length", line_no);
            cmd.kind = ScenarioCommand::Kind::grow_to;
            cmd.length = cm_to_m(cm);
        } else if (op == "set_pressures") {
            expect_args(3);
            double kpa[3];
            for (int k = 0; k < 3; ++k)
                if (!parse_double(tokens[2 + k], kpa[k]))
                    throw ConfigError("bad pressure", line_no);
            cmd.kind = ScenarioCommand::Kind::set_pressures;
            cmd.pressures = {kpa_to_pa(kpa[0]), kpa_to_pa(kpa[1]), kpa_to_pa(kpa[2])};
        } else {
            throw ConfigError("unknown command '" + op + "'", line_no);
        }
        scenario.commands.push_back(cmd);
    }
    return scenario;
}

inline Scenario parse_scenario(const std::string& path) {
    return parse_scenario_text(read_text_file(path), path);
}

// Demo scripts shipped with the tool. fig9a ramps a jammed 20 cm
// configuration down from 250 kPa; fig9b ramps the spineless robot up to
// 250 kPa. 1 s per 25 kPa step.
inline const char* bundled_scenario_text(const std::string& name) {
    static const char* fig9a =
        "# jammed 20 cm spine released from 250 kPa to 0 kPa\n"
        "t0.0 set_pressures 250 0 0\n"
        "t1.0 start_grow\n"
        "t3.0 grow_to 20\n"
        "t5.0 jam\n"
        "t6.0 set_pressures 250 0 0\n"
        "t7.0 set_pressures 225 0 0\n"
        "t8.0 set_pressures 200 0 0\n"
        "t9.0 set_pressures 175 0 0\n"
        "t10.0 set_pressures 150 0 0\n"
        "t11.0 set_pressures 125 0 0\n"
        "t12.0 set_pressures 100 0 0\n"
        "t13.0 set_pressures 75 0 0\n"
        "t14.0 set_pressures 50 0 0\n"
        "t15.0 set_pressures 25 0 0\n"
        "t16.0 set_pressures 0 0 0\n"
        "t17.0 wait\n";
    static const char* fig9b =
        "# no spine, one group pressurized from 0 kPa to 250 kPa\n"
        "t0.0 set_pressures 0 0 0\n"
        "t1.0 set_pressures 25 0 0\n"
        "t2.0 set_pressures 50 0 0\n"
        "t3.0 set_pressures 75 0 0\n"
        "t4.0 set_pressures 100 0 0\n"
        "t5.0 set_pressures 125 0 0\n"
        "t6.0 set_pressures 150 0 0\n"
        "t7.0 set_pressures 175 0 0\n"
        "t8.0 set_pressures 200 0 0\n"
        "t9.0 set_pressures 225 0 0\n"
        "t10.0 set_pressures 250 0 0\n"
        "t11.0 wait\n";
    if (name == "fig9a") return fig9a;
    if (name == "fig9b") return fig9b;
    return nullptr;
}

struct TrajectoryRow {
    double time = 0.0;
    SystemState state = SystemState::idle;
    double spine_length = 0.0;  // m, realized
    GroupPressures pressures;
    double bend_angle = 0.0;  // rad
    Vec3 tip;
};

struct TrajectoryLog {
    std::vector<TrajectoryRow> rows;
};

// Replays a scenario. Growth is stochastic but reproducible: each grow_to
// draws from a stream derived from (seed, script line). The spine only
// stiffens the body while jammed; while idle or growing the packed medium
// is fluid and the body bends alone.
inline TrajectoryLog replay(const Scenario& scenario, const RobotModels& models,
                            const LengthErrorModel& error_model, uint64_t seed) {
    PneumaticStateMachine machine;
    TrajectoryLog log;
    double spine_length = 0.0;
    GroupPressures pressures;

    for (const auto& cmd : scenario.commands) {
        auto fail = [&](const std::string& what) {
            throw TransitionError(scenario.name + " line " + std::to_string(cmd.line) + ": " +
                                  what);
        };
        switch (cmd.kind) {
            case ScenarioCommand::Kind::start_grow:
            case ScenarioCommand::Kind::jam:
            case ScenarioCommand::Kind::release: {
                SpineEvent event = cmd.kind == ScenarioCommand::Kind::start_grow
                                       ? SpineEvent::start_grow
                                       : cmd.kind == ScenarioCommand::Kind::jam
                                             ? SpineEvent::jam
                                             : SpineEvent::release;
                try {
                    machine.apply(event);
                } catch (const TransitionError& e) {
                    fail(e.what());
                }
                if (cmd.kind == ScenarioCommand::Kind::release) spine_length = 0.0;
                break;
            }
            case ScenarioCommand::Kind::grow_to: {
                if (!machine.may_change_length())
                    fail("grow_to requires the growing state");
                if (cmd.length == 0.0) {
                    spine_length = 0.0;  // full retraction is exact
                } else {
                    uint64_t stream = seed ^ (0x9e3779b97f4a7c15ULL *
                                              static_cast<uint64_t>(cmd.line));
                    spine_length = simulate_growth(cmd.length, error_model, stream,
                                                   models.geometry.spine_max_length)
                                       .realized;
                    if (spine_length > models.geometry.spine_max_length)
                        spine_length = models.geometry.spine_max_length;
                }
                break;
            }
            case ScenarioCommand::Kind::set_pressures:
                cmd.pressures.validate();
                pressures = cmd.pressures;
                break;
            case ScenarioCommand::Kind::wait:
                break;
        }

        double jammed_length =
            machine.state() == SystemState::jammed ? spine_length : 0.0;
        BendConfig cfg = bend_config(models.geometry, models.material, models.curve,
                                     models.actuation, jammed_length, pressures);
        TipPose pose = forward_kinematics(cfg, models.geometry);
        log.rows.push_back({cmd.time, machine.state(), spine_length, pressures,
                            cfg.bend_angle, pose.position});
    }
    return log;
}

// CSV columns: the valve/setpoint block first, then the kinematic block.
inline std::string trajectory_csv(const TrajectoryLog& log) {
    std::string out =
        "t_s,state,v1,v2,v3,v4,setpoint_kpa,spine_cm,p1_kpa,p2_kpa,p3_kpa,theta_deg,"
        "tip_x_cm,tip_y_cm,tip_z_cm\n";
    for (const auto& row : log.rows) {
        ValveConfig vc = valve_config(row.state);
        out += fmt_full(row.time);
        out += ',';
        out += to_string(row.state);
        for (ValveState v : {vc.v1, vc.v2, vc.v3, vc.v4}) {
            out += ',';
            out += to_string(v);
        }
        out += ',';
        out += fmt_full(pa_to_kpa(setpoint(row.state).gauge));
        out += ',';
        out += fmt_full(m_to_cm(row.spine_length));
        for (double p : {row.pressures.p1, row.pressures.p2, row.pressures.p3}) {
            out += ',';
            out += fmt_full(pa_to_kpa(p));
        }
        out += ',';
        out += fmt_full(rad_to_deg(row.bend_angle));
        for (double c : {row.tip.x, row.tip.y, row.tip.z}) {
            out += ',';
            out += fmt_full(m_to_cm(c));
        }
        out += '\n';
    }
    return out;
}

// Tip path over the replay, projected on (in-plane reach, height).
inline std::string tip_path_svg(const TrajectoryLog& log) {
    SvgSeries series;
    series.label = "tip path";
    for (const auto& row : log.rows) {
        double reach = std::hypot(row.tip.x, row.tip.y);
        series.points.push_back({m_to_cm(reach), m_to_cm(row.tip.z)});
    }
    return polyline_svg({series});
}

// Renders a plan's command list as a replayable script, one second apart.
inline std::string scenario_script(const std::vector<PlanCommand>& commands) {
    std::string out;
    double t = 0.0;
    for (const auto& cmd : commands) {
        out += 't' + fmt_sig4(t);
        switch (cmd.kind) {
            case PlanCommand::Kind::start_grow: out += " start_grow"; break;
            case PlanCommand::Kind::grow_to:
                out += " grow_to " + fmt_full(m_to_cm(cmd.length));
                break;
            case PlanCommand::Kind::jam: out += " jam"; break;
            case PlanCommand::Kind::set_pressures:
                out += " set_pressures " + fmt_full(pa_to_kpa(cmd.pressures.p1)) + ' ' +
                       fmt_full(pa_to_kpa(cmd.pressures.p2)) + ' ' +
                       fmt_full(pa_to_kpa(cmd.pressures.p3));
                break;
        }
        out += '\n';
        t += 1.0;
    }
    return out;
}

}  // namespace softspine

#endif
