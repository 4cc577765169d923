// Prints the bend-angle grid (spine length x pressure) for the default
// robot and writes the 250 kPa bending profiles to bend_profiles.svg.

#include <iostream>

#include "softspine/softspine.hpp"

using namespace softspine;

int main() {
    RobotModels models = default_models();
    const std::vector<double> lengths = {0.0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
    const std::vector<double> pressures = {50e3, 100e3, 150e3, 200e3, 250e3};

    auto table = bend_angle_table(models.geometry, models.material, models.curve,
                                  models.actuation, lengths, pressures);
    std::cout << "bend angle [deg], rows = spine length, cols = pressure\n";
    std::cout << "spine_cm";
    for (double p : pressures) std::cout << "\t" << fmt_sig4(pa_to_kpa(p)) << "kPa";
    std::cout << "\n";
    for (size_t i = 0; i < lengths.size(); ++i) {
        std::cout << fmt_sig4(m_to_cm(lengths[i]));
        for (double v : table[i]) std::cout << "\t" << fmt_sig4(v);
        std::cout << "\n";
    }

    std::vector<SvgSeries> series;
    for (double ls : lengths) {
        BendConfig cfg = bend_config(models.geometry, models.material, models.curve,
                                     models.actuation, ls, {250e3, 0.0, 0.0});
        SvgSeries s;
        s.label = fmt_sig4(m_to_cm(ls)) + "cm";
        for (const auto& p : backbone_points(cfg))
            s.points.push_back({m_to_cm(p.x), m_to_cm(p.z)});
        series.push_back(std::move(s));
    }
    write_text_file("bend_profiles.svg", polyline_svg(series));
    std::cout << "wrote bend_profiles.svg\n";
    return 0;
}
