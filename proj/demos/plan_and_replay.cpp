// Plans a reach to a tip target, converts the plan to a timed command
// script, and replays it through the pneumatic state machine.

#include <iostream>

#include "softspine/softspine.hpp"

using namespace softspine;

int main() {
    RobotModels models = default_models();

    PlanRequest request;
    request.target = {0.15, 0.0, 0.35};
    request.tolerance = 0.005;

    Plan p = plan(request, models);
    std::cout << "spine length: " << fmt_sig4(m_to_cm(p.spine_length)) << " cm\n";
    std::cout << "pressures [kPa]: " << fmt_sig4(pa_to_kpa(p.pressures.p1)) << " "
              << fmt_sig4(pa_to_kpa(p.pressures.p2)) << " "
              << fmt_sig4(pa_to_kpa(p.pressures.p3)) << "\n";
    std::cout << "predicted tip [cm]: " << fmt_sig4(m_to_cm(p.predicted_tip.x)) << " "
              << fmt_sig4(m_to_cm(p.predicted_tip.y)) << " "
              << fmt_sig4(m_to_cm(p.predicted_tip.z)) << "\n";
    std::cout << "tip error: " << fmt_sig4(p.tip_error * 1000.0) << " mm\n";

    std::string script = scenario_script(p.commands);
    std::cout << "\ncommand script:\n" << script;

    Scenario scenario = parse_scenario_text(script, "plan");
    TrajectoryLog log = replay(scenario, models, default_error_model(), 42);
    const auto& last = log.rows.back();
    std::cout << "\nreplayed tip [cm]: " << fmt_sig4(m_to_cm(last.tip.x)) << " "
              << fmt_sig4(m_to_cm(last.tip.y)) << " " << fmt_sig4(m_to_cm(last.tip.z))
              << "  (growth noise shifts it off the plan)\n";
    return 0;
}
