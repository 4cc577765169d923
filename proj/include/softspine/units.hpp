#ifndef SOFTSPINE_UNITS_HPP
#define SOFTSPINE_UNITS_HPP

#include <numbers>
#include <string>
#include <string_view>

#include "softspine/errors.hpp"

// All internal quantities are SI (metres, pascals, radians, newtons).
// Centimetres, kilopascals and degrees exist only at the I/O boundary.

namespace softspine {

enum class Unit { meter, centimeter, pascal, kilopascal, radian, degree, newton };

enum class Dimension { length, pressure, angle, force };

constexpr Dimension dimension(Unit u) {
    switch (u) {
        case Unit::meter:
        case Unit::centimeter: return Dimension::length;
        case Unit::pascal:
        case Unit::kilopascal: return Dimension::pressure;
        case Unit::radian:
        case Unit::degree: return Dimension::angle;
        case Unit::newton: return Dimension::force;
    }
    return Dimension::force;  // unreachable
}

constexpr double si_factor(Unit u) {
    switch (u) {
        case Unit::meter: return 1.0;
        case Unit::centimeter: return 0.01;
        case Unit::pascal: return 1.0;
        case Unit::kilopascal: return 1000.0;
        case Unit::radian: return 1.0;
        case Unit::degree: return std::numbers::pi / 180.0;
        case Unit::newton: return 1.0;
    }
    return 1.0;  // unreachable
}

constexpr std::string_view unit_name(Unit u) {
    switch (u) {
        case Unit::meter: return "m";
        case Unit::centimeter: return "cm";
        case Unit::pascal: return "Pa";
        case Unit::kilopascal: return "kPa";
        case Unit::radian: return "rad";
        case Unit::degree: return "deg";
        case Unit::newton: return "N";
    }
    return "?";  // unreachable
}

inline double convert(double value, Unit from, Unit to) {
    if (dimension(from) != dimension(to))
        throw UnitError("cannot convert " + std::string(unit_name(from)) + " to " +
                        std::string(unit_name(to)));
    if (from == to) return value;
    return value * (si_factor(from) / si_factor(to));
}

// Shorthands for the conversions the I/O layer actually performs.
inline double cm_to_m(double v) { return convert(v, Unit::centimeter, Unit::meter); }
inline double m_to_cm(double v) { return convert(v, Unit::meter, Unit::centimeter); }
inline double kpa_to_pa(double v) { return convert(v, Unit::kilopascal, Unit::pascal); }
inline double pa_to_kpa(double v) { return convert(v, Unit::pascal, Unit::kilopascal); }
inline double deg_to_rad(double v) { return convert(v, Unit::degree, Unit::radian); }
inline double rad_to_deg(double v) { return convert(v, Unit::radian, Unit::degree); }

}  // namespace softspine

#endif
