#pragma once

#include <string>
#include <vector>

#include "majring/config.hpp"
#include "majring/stability.hpp"

namespace majring {

enum class RenderFormat { Text, Svg, Pgm };

struct RenderSpec {
    RenderFormat format = RenderFormat::Text;
    bool overlay = false; // stability letters S/W/U
    int cell_size = 8;    // pixels per cell for svg/pgm
};

// Space-time diagram of a trajectory, one row per time step.
//   text: '.' for state 0 and '#' for state 1; with overlay, each row is
//         followed by two spaces and the row of stability letters.
//   svg:  one rect per cell, gray fill for state 0 and dark fill for state 1,
//         optionally a centered stability letter.
//   pgm:  binary P5, one cell_size x cell_size block per cell, no overlay
//         (requesting one throws OverlayUnavailable).
// With overlay on, maps must hold one stability map per trajectory state.
// Identical inputs produce identical bytes.
std::string render_spacetime(const Trajectory& traj, const std::vector<StabilityMap>& maps,
                             const RenderSpec& spec);

} // namespace majring
