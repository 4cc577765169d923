#ifndef SOFTSPINE_PNEUMATICS_HPP
#define SOFTSPINE_PNEUMATICS_HPP

#include <string>
#include <string_view>

#include "softspine/errors.hpp"

// Spine pneumatics: a four-valve circuit that either vents the spine box
// (idle), feeds it with low positive pressure so the spine can grow, or
// pulls vacuum to jam the packed medium. Transitions follow the physical
// cycle strictly: idle -> growing -> jammed -> idle.
//
//   valve 1: box vent          valve 2: box supply
//   valve 3: spine vent        valve 4: spine vacuum

namespace softspine {

enum class SystemState { idle, growing, jammed };
enum class SpineEvent { start_grow, jam, release };
enum class ValveState { open, closed };

struct ValveConfig {
    ValveState v1;
    ValveState v2;
    ValveState v3;
    ValveState v4;

    bool operator==(const ValveConfig&) const = default;
};

// Regulator target, pascals gauge. The inline sensor reads -100..100 kPa.
struct RegulatorSetpoint {
    double gauge = 0.0;
};

inline constexpr double sensor_range_pa = 100e3;
inline constexpr double growing_setpoint_pa = 10e3;
inline constexpr double jammed_setpoint_pa = -70e3;

constexpr ValveConfig valve_config(SystemState state) {
    switch (state) {
        case SystemState::idle:
            return {ValveState::open, ValveState::closed, ValveState::open, ValveState::closed};
        case SystemState::growing:
            return {ValveState::closed, ValveState::open, ValveState::open, ValveState::closed};
        case SystemState::jammed:
            return {ValveState::open, ValveState::closed, ValveState::closed, ValveState::open};
    }
    return {};  // unreachable
}

constexpr RegulatorSetpoint setpoint(SystemState state) {
    switch (state) {
        case SystemState::idle: return {0.0};
        case SystemState::growing: return {growing_setpoint_pa};
        case SystemState::jammed: return {jammed_setpoint_pa};
    }
    return {};  // unreachable
}

constexpr bool may_change_length(SystemState state) { return state == SystemState::growing; }

constexpr std::string_view to_string(SystemState state) {
    switch (state) {
        case SystemState::idle: return "idle";
        case SystemState::growing: return "growing";
        case SystemState::jammed: return "jammed";
    }
    return "?";  // unreachable
}

constexpr std::string_view to_string(SpineEvent event) {
    switch (event) {
        case SpineEvent::start_grow: return "start_grow";
        case SpineEvent::jam: return "jam";
        case SpineEvent::release: return "release";
    }
    return "?";  // unreachable
}

constexpr std::string_view to_string(ValveState v) {
    return v == ValveState::open ? "open" : "closed";
}

// Applies an event; anything off the forward cycle throws.
inline SystemState step(SystemState state, SpineEvent event) {
    if (state == SystemState::idle && event == SpineEvent::start_grow)
        return SystemState::growing;
    if (state == SystemState::growing && event == SpineEvent::jam) return SystemState::jammed;
    if (state == SystemState::jammed && event == SpineEvent::release) return SystemState::idle;
    throw TransitionError("illegal event '" + std::string(to_string(event)) + "' in state '" +
                          std::string(to_string(state)) + "'");
}

class PneumaticStateMachine {
public:
    SystemState state() const { return state_; }
    ValveConfig valves() const { return valve_config(state_); }
    RegulatorSetpoint regulator() const { return setpoint(state_); }
    bool may_change_length() const { return softspine::may_change_length(state_); }
    void apply(SpineEvent event) { state_ = step(state_, event); }

private:
    SystemState state_ = SystemState::idle;
};

}  // namespace softspine

#endif
