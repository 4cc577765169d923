#ifndef SOFTSPINE_CALIBRATION_HPP
#define SOFTSPINE_CALIBRATION_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "softspine/beam.hpp"
#include "softspine/errors.hpp"
#include "softspine/geometry.hpp"
#include "softspine/kinematics.hpp"
#include "softspine/stiffness.hpp"
#include "softspine/text.hpp"
#include "softspine/units.hpp"

// Calibration has two stages. Bench force/deflection sweeps of the jammed
// spine give its effective modulus per deployed length (loading phase
// only; unloading rows feed a reported hysteresis gap). Whole-robot
// bending records then fit the two actuation scalars: the moment gain and
// the body rigidity scale. Given the scale, the gain is linear, so the
// fit is a 1-D search over the scale with a closed-form gain per step.

namespace softspine {

enum class Phase { loading, unloading };

struct ForceDeflectionRecord {
    double spine_length;  // m
    double force;         // N
    double deflection;    // m at the tip
    Phase phase;
};

struct BendingRecord {
    double spine_length;          // m
    double pressure;              // Pa on one group (vector norm for multi-group)
    double bend_angle;            // rad
    std::optional<double> tip_x;  // m, in-plane reach if measured
    std::optional<double> tip_y;  // m, height if measured
};

// --- CSV ingest ---------------------------------------------------------

// Header: length_cm,force_n,deflection_cm,phase
inline std::vector<ForceDeflectionRecord> ingest_force_deflection_text(
    const std::string& text, const RobotGeometry& geom = {}) {
    auto lines = split_lines(text);
    if (lines.empty()) throw IngestError("empty file", 1);
    if (trim(lines[0]) != "length_cm,force_n,deflection_cm,phase")
        throw IngestError("expected header length_cm,force_n,deflection_cm,phase", 1);
    std::vector<ForceDeflectionRecord> records;
    for (size_t i = 1; i < lines.size(); ++i) {
        int row = static_cast<int>(i) + 1;
        std::string line = trim(lines[i]);
        if (line.empty()) continue;
        auto cells = split(line, ',');
        if (cells.size() != 4) throw IngestError("expected 4 columns", row);
        double length_cm, force, deflection_cm;
        if (!parse_double(cells[0], length_cm) || !parse_double(cells[1], force) ||
            !parse_double(cells[2], deflection_cm))
            throw IngestError("bad number", row);
        std::string phase_str = trim(cells[3]);
        std::transform(phase_str.begin(), phase_str.end(), phase_str.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        Phase phase;
        if (phase_str == "loading") phase = Phase::loading;
        else if (phase_str == "unloading") phase = Phase::unloading;
        else throw IngestError("phase must be loading or unloading", row);

        ForceDeflectionRecord rec{cm_to_m(length_cm), force, cm_to_m(deflection_cm), phase};
        if (!(rec.spine_length > 0) || !(rec.spine_length <= geom.spine_max_length))
            throw ValidationError("length_cm", "outside (0, spine max] at row " +
                                                   std::to_string(row));
        if (!(rec.force >= 0))
            throw ValidationError("force_n", "negative at row " + std::to_string(row));
        if (!(rec.deflection >= 0))
            throw ValidationError("deflection_cm", "negative at row " + std::to_string(row));
        records.push_back(rec);
    }
    return records;
}

inline std::vector<ForceDeflectionRecord> ingest_force_deflection(
    const std::string& path, const RobotGeometry& geom = {}) {
    return ingest_force_deflection_text(read_text_file(path), geom);
}

// Header: length_cm,pressure_kpa,angle_deg,tip_x_cm,tip_y_cm
// (tip cells may be blank when unmeasured).
inline std::vector<BendingRecord> ingest_bending_text(const std::string& text,
                                                      const RobotGeometry& geom = {}) {
    auto lines = split_lines(text);
    if (lines.empty()) throw IngestError("empty file", 1);
    if (trim(lines[0]) != "length_cm,pressure_kpa,angle_deg,tip_x_cm,tip_y_cm")
        throw IngestError("expected header length_cm,pressure_kpa,angle_deg,tip_x_cm,tip_y_cm",
                          1);
    std::vector<BendingRecord> records;
    for (size_t i = 1; i < lines.size(); ++i) {
        int row = static_cast<int>(i) + 1;
        std::string line = trim(lines[i]);
        if (line.empty()) continue;
        auto cells = split(line, ',');
        if (cells.size() != 5) throw IngestError("expected 5 columns", row);
        double length_cm, pressure_kpa, angle_deg;
        if (!parse_double(cells[0], length_cm) || !parse_double(cells[1], pressure_kpa) ||
            !parse_double(cells[2], angle_deg))
            throw IngestError("bad number", row);
        BendingRecord rec;
        rec.spine_length = cm_to_m(length_cm);
        rec.pressure = kpa_to_pa(pressure_kpa);
        rec.bend_angle = deg_to_rad(angle_deg);
        for (int c : {3, 4}) {
            if (trim(cells[c]).empty()) continue;
            double v;
            if (!parse_double(cells[c], v)) throw IngestError("bad number", row);
            (c == 3 ? rec.tip_x : rec.tip_y) = cm_to_m(v);
        }
        if (!(rec.spine_length >= 0) || !(rec.spine_length <= geom.spine_max_length))
            throw ValidationError("length_cm", "outside [0, spine max] at row " +
                                                   std::to_string(row));
        if (!(rec.pressure >= 0))
            throw ValidationError("pressure_kpa", "negative at row " + std::to_string(row));
        records.push_back(rec);
    }
    return records;
}

inline std::vector<BendingRecord> ingest_bending(const std::string& path,
                                                 const RobotGeometry& geom = {}) {
    return ingest_bending_text(read_text_file(path), geom);
}

// --- stage 1: spine moduli ----------------------------------------------

// Per deployed length, the mean cantilever modulus over loading records.
// Zero-force or zero-deflection rows carry no modulus information and are
// skipped with a note in `warnings`.
inline std::vector<StiffnessSample> estimate_moduli(
    const std::vector<ForceDeflectionRecord>& records, const RobotGeometry& geom = {},
    std::vector<std::string>* warnings = nullptr) {
    std::vector<std::pair<double, std::vector<double>>> groups;  // length -> moduli
    for (const auto& rec : records) {
        if (rec.phase != Phase::loading) continue;
        if (!(rec.force > 0) || !(rec.deflection > 0)) {
            if (warnings)
                warnings->push_back("skipped loading record at length " +
                                    fmt_sig4(m_to_cm(rec.spine_length)) +
                                    " cm with zero force or deflection");
            continue;
        }
        double modulus =
            modulus_from_tip(rec.force, rec.spine_length, geom.spine_radius, rec.deflection);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == rec.spine_length; });
        if (it == groups.end()) groups.push_back({rec.spine_length, {modulus}});
        else it->second.push_back(modulus);
    }
    if (groups.empty())
        throw FitError("no usable loading records; cannot estimate spine moduli");
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<StiffnessSample> samples;
    for (const auto& [length, moduli] : groups) {
        double mean = 0.0;
        for (double m : moduli) mean += m;
        samples.push_back({length, mean / static_cast<double>(moduli.size())});
    }
    return samples;
}

// Mean relative deflection gap between unloading and loading rows at
// matching (length, force) points; empty when phases never overlap.
inline std::optional<double> hysteresis_gap(const std::vector<ForceDeflectionRecord>& records) {
    double gap_sum = 0.0;
    int count = 0;
    for (const auto& up : records) {
        if (up.phase != Phase::unloading) continue;
        for (const auto& down : records) {
            if (down.phase != Phase::loading) continue;
            if (down.spine_length != up.spine_length || down.force != up.force) continue;
            if (!(down.deflection > 0)) continue;
            gap_sum += (up.deflection - down.deflection) / down.deflection;
            ++count;
        }
    }
    if (count == 0) return std::nullopt;
    return gap_sum / count;
}

// --- stage 2: actuation fit ---------------------------------------------

struct FitResidual {
    BendingRecord record;
    double predicted;  // rad
    double error;      // rad, predicted - measured
};

struct FitResult {
    double moment_gain = 0.0;     // N*m per Pa
    double rigidity_scale = 1.0;
    bool scale_fixed = false;     // true when the scale was not identifiable (or pinned)
    std::vector<FitResidual> residuals;
    double rms_error = 0.0;       // rad
};

struct FitOptions {
    std::optional<double> fix_scale;  // pin rigidity_scale instead of searching
};

namespace detail {

// Angle per unit moment for a given rigidity scale: sum of len/EI with the
// body term scaled. Matches bend_config's segment model.
inline double angle_per_moment(const RobotGeometry& geom, const MaterialParams& mat,
                               const StiffnessCurve& curve, double spine_length, double scale) {
    MaterialParams scaled = mat;
    scaled.body_modulus *= scale;
    RigidityProfile profile = rigidity_profile(geom, scaled, curve, spine_length);
    double s = 0.0;
    for (const auto& seg : profile.segments) s += (seg.end - seg.start) / seg.ei();
    return s;
}

struct GainFit {
    double gain;
    double sse;
};

// Closed-form least-squares gain for a fixed scale.
inline GainFit gain_for_scale(const std::vector<BendingRecord>& records,
                              const RobotGeometry& geom, const MaterialParams& mat,
                              const StiffnessCurve& curve, double scale) {
    double num = 0.0, den = 0.0;
    for (const auto& rec : records) {
        double a = rec.pressure * angle_per_moment(geom, mat, curve, rec.spine_length, scale);
        num += a * rec.bend_angle;
        den += a * a;
    }
    if (den == 0.0)
        throw FitError("moment gain unidentifiable: all records have zero pressure");
    double gain = num / den;
    double sse = 0.0;
    for (const auto& rec : records) {
        double predicted =
            gain * rec.pressure * angle_per_moment(geom, mat, curve, rec.spine_length, scale);
        double e = predicted - rec.bend_angle;
        sse += e * e;
    }
    return {gain, sse};
}

}  // namespace detail

inline FitResult fit_actuation(const std::vector<BendingRecord>& records,
                               const RobotGeometry& geom, const MaterialParams& mat,
                               const StiffnessCurve& curve, const FitOptions& options = {}) {
    if (records.empty()) throw FitError("no bending records");

    std::vector<double> lengths;
    for (const auto& rec : records)
        if (std::find(lengths.begin(), lengths.end(), rec.spine_length) == lengths.end())
            lengths.push_back(rec.spine_length);

    FitResult result;
    double scale;
    if (options.fix_scale) {
        scale = *options.fix_scale;
        if (!(scale > 0)) throw FitError("rigidity scale must be positive");
        result.scale_fixed = true;
    } else if (lengths.size() < 2) {
        // Single spine length: gain and scale trade off exactly; pin the
        // scale and solve the gain.
        scale = 1.0;
        result.scale_fixed = true;
    } else {
        // Coarse log-spaced sweep, then golden-section refinement between
        // the bracketing neighbours of the best coarse point.
        constexpr double lo = 1e-3, hi = 1e3;
        constexpr int coarse = 181;
        double best_sse = std::numeric_limits<double>::infinity();
        int best_i = 0;
        auto scale_at = [&](int i) {
            return lo * std::pow(hi / lo, static_cast<double>(i) / (coarse - 1));
        };
        for (int i = 0; i < coarse; ++i) {
            double sse = detail::gain_for_scale(records, geom, mat, curve, scale_at(i)).sse;
            if (sse < best_sse) {
                best_sse = sse;
                best_i = i;
            }
        }
        double a = scale_at(std::max(0, best_i - 1));
        double b = scale_at(std::min(coarse - 1, best_i + 1));
        constexpr double gr = 0.6180339887498949;
        double x1 = b - gr * (b - a);
        double x2 = a + gr * (b - a);
        double f1 = detail::gain_for_scale(records, geom, mat, curve, x1).sse;
        double f2 = detail::gain_for_scale(records, geom, mat, curve, x2).sse;
        for (int iter = 0; iter < 200 && (b - a) > 1e-14 * b; ++iter) {
            if (f1 < f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - gr * (b - a);
                f1 = detail::gain_for_scale(records, geom, mat, curve, x1).sse;
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (b - a);
                f2 = detail::gain_for_scale(records, geom, mat, curve, x2).sse;
            }
        }
        scale = 0.5 * (a + b);
    }

    auto fit = detail::gain_for_scale(records, geom, mat, curve, scale);
    result.moment_gain = fit.gain;
    result.rigidity_scale = scale;
    double sse = 0.0;
    for (const auto& rec : records) {
        double predicted = fit.gain * rec.pressure *
                           detail::angle_per_moment(geom, mat, curve, rec.spine_length, scale);
        result.residuals.push_back({rec, predicted, predicted - rec.bend_angle});
        sse += (predicted - rec.bend_angle) * (predicted - rec.bend_angle);
    }
    result.rms_error = std::sqrt(sse / static_cast<double>(records.size()));
    return result;
}

inline ActuationModel to_actuation_model(const FitResult& fit) {
    return {fit.moment_gain, fit.rigidity_scale};
}

// The two reference bending measurements every default model is anchored
// to: 65.64 deg at (0 cm, 250 kPa) and 41.50 deg at (30 cm, 250 kPa),
// with the matching measured reaches 20.87 cm and 10.51 cm.
inline std::vector<BendingRecord> anchor_bending_records() {
    return {
        {0.00, 250e3, deg_to_rad(65.64), cm_to_m(20.87), std::nullopt},
        {0.30, 250e3, deg_to_rad(41.50), cm_to_m(10.51), std::nullopt},
    };
}

inline ActuationModel anchor_calibration(const RobotGeometry& geom = {},
                                         const MaterialParams& mat = {},
                                         const StiffnessCurve& curve = default_curve()) {
    return to_actuation_model(fit_actuation(anchor_bending_records(), geom, mat, curve));
}

// --- reporting -----------------------------------------------------------

inline std::string residual_report(const FitResult& fit) {
    std::string out;
    out += "length_cm  pressure_kpa  measured_deg  predicted_deg  rel_error\n";
    for (const auto& r : fit.residuals) {
        char line[160];
        double measured = rad_to_deg(r.record.bend_angle);
        double predicted = rad_to_deg(r.predicted);
        double rel = r.record.bend_angle != 0.0 ? r.error / r.record.bend_angle : 0.0;
        std::snprintf(line, sizeof(line), "%9.4g  %12.4g  %12.6g  %13.6g  %9.3g\n",
                      m_to_cm(r.record.spine_length), pa_to_kpa(r.record.pressure), measured,
                      predicted, rel);
        out += line;
    }
    out += "rms_error_deg = " + fmt_sig4(rad_to_deg(fit.rms_error)) + "\n";
    out += "moment_gain_nm_per_pa = " + fmt_full(fit.moment_gain) + "\n";
    out += "rigidity_scale = " + fmt_full(fit.rigidity_scale) +
           (fit.scale_fixed ? " (fixed)\n" : "\n");
    return out;
}

}  // namespace softspine

#endif
