#ifndef SOFTSPINE_SOFTSPINE_HPP
#define SOFTSPINE_SOFTSPINE_HPP

// Umbrella header for the soft continuum robot toolkit: beam-based
// calibration, granular-jamming spine stiffness, constant-curvature
// kinematics, pneumatic sequencing, growth simulation, planning, and
// scenario replay.

#include "softspine/beam.hpp"
#include "softspine/calibration.hpp"
#include "softspine/config.hpp"
#include "softspine/errors.hpp"
#include "softspine/geometry.hpp"
#include "softspine/kinematics.hpp"
#include "softspine/length_control.hpp"
#include "softspine/pneumatics.hpp"
#include "softspine/planner.hpp"
#include "softspine/scenario.hpp"
#include "softspine/stiffness.hpp"
#include "softspine/svg.hpp"
#include "softspine/text.hpp"
#include "softspine/units.hpp"

#endif
