#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "softspine/pneumatics.hpp"

using namespace softspine;

TEST_CASE("valve truth table") {
    ValveConfig idle = valve_config(SystemState::idle);
    CHECK(idle.v1 == ValveState::open);
    CHECK(idle.v2 == ValveState::closed);
    CHECK(idle.v3 == ValveState::open);
    CHECK(idle.v4 == ValveState::closed);

    ValveConfig growing = valve_config(SystemState::growing);
    CHECK(growing.v1 == ValveState::closed);
    CHECK(growing.v2 == ValveState::open);
    CHECK(growing.v3 == ValveState::open);
    CHECK(growing.v4 == ValveState::closed);

    ValveConfig jammed = valve_config(SystemState::jammed);
    CHECK(jammed.v1 == ValveState::open);
    CHECK(jammed.v2 == ValveState::closed);
    CHECK(jammed.v3 == ValveState::closed);
    CHECK(jammed.v4 == ValveState::open);
}

TEST_CASE("regulator setpoints") {
    CHECK(setpoint(SystemState::idle).gauge == 0.0);
    CHECK(setpoint(SystemState::growing).gauge == 10e3);
    CHECK(setpoint(SystemState::jammed).gauge == -70e3);
    // Both live setpoints sit inside the sensor range.
    CHECK(std::abs(setpoint(SystemState::growing).gauge) <= sensor_range_pa);
    CHECK(std::abs(setpoint(SystemState::jammed).gauge) <= sensor_range_pa);
}

TEST_CASE("exactly three of nine transitions are legal") {
    const std::vector<SystemState> states = {SystemState::idle, SystemState::growing,
                                             SystemState::jammed};
    const std::vector<SpineEvent> events = {SpineEvent::start_grow, SpineEvent::jam,
                                            SpineEvent::release};
    int legal = 0;
    for (SystemState s : states)
        for (SpineEvent e : events) {
            bool ok = (s == SystemState::idle && e == SpineEvent::start_grow) ||
                      (s == SystemState::growing && e == SpineEvent::jam) ||
                      (s == SystemState::jammed && e == SpineEvent::release);
            if (ok) {
                CHECK_NOTHROW(step(s, e));
                ++legal;
            } else {
                CHECK_THROWS_AS(step(s, e), TransitionError);
            }
        }
    CHECK(legal == 3);

    CHECK(step(SystemState::idle, SpineEvent::start_grow) == SystemState::growing);
    CHECK(step(SystemState::growing, SpineEvent::jam) == SystemState::jammed);
    CHECK(step(SystemState::jammed, SpineEvent::release) == SystemState::idle);
}

TEST_CASE("illegal transitions name both state and event") {
    try {
        step(SystemState::idle, SpineEvent::jam);
        FAIL("expected TransitionError");
    } catch (const TransitionError& e) {
        std::string what = e.what();
        CHECK(what.find("jam") != std::string::npos);
        CHECK(what.find("idle") != std::string::npos);
    }
}

TEST_CASE("growth is allowed only while growing") {
    CHECK_FALSE(may_change_length(SystemState::idle));
    CHECK(may_change_length(SystemState::growing));
    CHECK_FALSE(may_change_length(SystemState::jammed));
}

TEST_CASE("state machine cycles back to idle") {
    PneumaticStateMachine machine;
    CHECK(machine.state() == SystemState::idle);
    CHECK(machine.valves() == valve_config(SystemState::idle));

    machine.apply(SpineEvent::start_grow);
    CHECK(machine.state() == SystemState::growing);
    CHECK(machine.may_change_length());
    CHECK(machine.regulator().gauge == 10e3);

    machine.apply(SpineEvent::jam);
    CHECK(machine.state() == SystemState::jammed);
    CHECK(machine.regulator().gauge == -70e3);

    machine.apply(SpineEvent::release);
    CHECK(machine.state() == SystemState::idle);
    // Full cycle restores the idle valve row exactly.
    CHECK(machine.valves() == valve_config(SystemState::idle));
    CHECK(machine.regulator().gauge == 0.0);

    CHECK_THROWS_AS(machine.apply(SpineEvent::release), TransitionError);
    CHECK(machine.state() == SystemState::idle);
}

TEST_CASE("state names serialize") {
    CHECK(to_string(SystemState::idle) == "idle");
    CHECK(to_string(SystemState::growing) == "growing");
    CHECK(to_string(SystemState::jammed) == "jammed");
    CHECK(to_string(SpineEvent::start_grow) == "start_grow");
    CHECK(to_string(ValveState::open) == "open");
    CHECK(to_string(ValveState::closed) == "closed");
}
