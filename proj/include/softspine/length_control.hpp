#ifndef SOFTSPINE_LENGTH_CONTROL_HPP
#define SOFTSPINE_LENGTH_CONTROL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "softspine/errors.hpp"
#include "softspine/text.hpp"

// Spine length actuation: a stepper spools the spine through a gearbox,
// so commanded length maps to whole motor steps. Realized growth is
// modelled from bench trials as a proportional bias plus Gaussian noise
// whose spread depends on the commanded length.

namespace softspine {

struct StepperParams {
    double steps_per_rev = 200.0;
    double gearbox_ratio = 15.0;
    double shaft_radius = 0.01;  // m, spool the spine winds on
};

inline long steps_for_length(double delta_length, const StepperParams& params = {}) {
    if (!(delta_length >= 0)) throw DomainError("steps_for_length: delta must be >= 0");
    double revs = delta_length * params.gearbox_ratio /
                  (2.0 * std::numbers::pi * params.shaft_radius);
    return std::lround(revs * params.steps_per_rev);
}

// Retraction variant: same magnitude law, sign preserved.
inline long signed_steps_for_length(double delta_length, const StepperParams& params = {}) {
    long steps = steps_for_length(std::abs(delta_length), params);
    return delta_length < 0 ? -steps : steps;
}

inline double length_from_steps(long steps, const StepperParams& params = {}) {
    return static_cast<double>(steps) * 2.0 * std::numbers::pi * params.shaft_radius /
           (params.gearbox_ratio * params.steps_per_rev);
}

// One bench trial summary: commanded reference length, realized mean and
// spread over repeated runs.
struct LengthTrialStats {
    double reference;  // m
    double mean;       // m
    double std_dev;    // m
};

inline const std::vector<LengthTrialStats>& default_length_trials() {
    static const std::vector<LengthTrialStats> trials = {
        {0.05, 0.0525, 0.0030}, {0.10, 0.1053, 0.0032}, {0.15, 0.1577, 0.0031},
        {0.20, 0.2106, 0.0034}, {0.25, 0.2642, 0.0039}, {0.30, 0.3143, 0.0036},
    };
    return trials;
}

struct LengthErrorModel {
    double bias_factor = 1.0518;  // grand mean of realized/commanded over the trials
    std::vector<std::pair<double, double>> sigma_samples;  // (commanded m, sigma m)

    // Linear between samples, clamped at the ends.
    double sigma_at(double length) const {
        if (sigma_samples.empty()) return 0.0;
        if (length <= sigma_samples.front().first) return sigma_samples.front().second;
        if (length >= sigma_samples.back().first) return sigma_samples.back().second;
        for (size_t i = 1; i < sigma_samples.size(); ++i) {
            if (length <= sigma_samples[i].first) {
                auto [l0, s0] = sigma_samples[i - 1];
                auto [l1, s1] = sigma_samples[i];
                double t = (length - l0) / (l1 - l0);
                return s0 + t * (s1 - s0);
            }
        }
        return sigma_samples.back().second;  // unreachable
    }
};

inline LengthErrorModel default_error_model() {
    LengthErrorModel model;
    for (const auto& t : default_length_trials())
        model.sigma_samples.emplace_back(t.reference, t.std_dev);
    return model;
}

namespace detail {

// Self-contained RNG so realizations are bit-identical everywhere:
// splitmix64 stream seeded per draw, Box-Muller for the normal.
inline uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline double uniform01(uint64_t& state) {
    // 53 random bits, offset half a ulp so the result sits in (0, 1).
    return (static_cast<double>(splitmix64(state) >> 11) + 0.5) * 0x1.0p-53;
}

inline double standard_normal(uint64_t& state) {
    double u1 = uniform01(state);
    double u2 = uniform01(state);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace detail

struct GrowthRealization {
    double commanded;  // m
    double realized;   // m
    uint64_t seed;
};

// Samples one realized growth for a commanded target. Deterministic per
// (target, seed); realizations never go negative.
inline GrowthRealization simulate_growth(double target, const LengthErrorModel& model,
                                         uint64_t seed, double max_length = 0.30) {
    if (!(target > 0) || !(target <= max_length))
        throw DomainError("simulate_growth: target outside (0, max_length]");
    uint64_t state = seed;
    double noise = detail::standard_normal(state) * model.sigma_at(target);
    double realized = target * model.bias_factor + noise;
    if (realized < 0.0) realized = 0.0;
    return {target, realized, seed};
}

struct ErrorStats {
    double mean_rel_error;  // mean of |realized - commanded| / commanded
    double max_std;         // largest per-target sample standard deviation, m
};

inline ErrorStats error_stats(const std::vector<GrowthRealization>& realizations) {
    if (realizations.empty()) throw DomainError("error_stats: no realizations");
    double rel_sum = 0.0;
    for (const auto& r : realizations)
        rel_sum += std::abs(r.realized - r.commanded) / r.commanded;

    // Group by commanded target (targets are exact command values).
    std::vector<std::pair<double, std::vector<double>>> groups;
    for (const auto& r : realizations) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == r.commanded; });
        if (it == groups.end()) {
            groups.push_back({r.commanded, {r.realized}});
        } else {
            it->second.push_back(r.realized);
        }
    }
    double max_std = 0.0;
    for (const auto& [target, values] : groups) {
        if (values.size() < 2) continue;
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double ss = 0.0;
        for (double v : values) ss += (v - mean) * (v - mean);
        double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
        if (sd > max_std) max_std = sd;
    }
    return {rel_sum / static_cast<double>(realizations.size()), max_std};
}

// CSV with one row per realization; full precision so identical seeds
// reproduce identical bytes.
inline std::string realization_log_csv(const std::vector<GrowthRealization>& realizations) {
    std::string out = "seed,commanded_cm,realized_cm\n";
    for (const auto& r : realizations) {
        out += std::to_string(r.seed);
        out += ',';
        out += fmt_full(r.commanded * 100.0);
        out += ',';
        out += fmt_full(r.realized * 100.0);
        out += '\n';
    }
    return out;
}

}  // namespace softspine

#endif
