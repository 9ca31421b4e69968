#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "naxes/projective.hpp"

namespace naxes {

struct RenderOptions {
    bool show_circles = true;
    bool show_axes = true;
    bool show_parallel_construction = false;
    // SVG user units (min-x, min-y, width, height); fitted to the drawing
    // with a 5% margin when absent.
    std::optional<std::array<double, 4>> viewbox;
    double size = 640.0; // longer edge of the rendered image, px
};

// Draws a configuration: vertices, sides, the corner circles through
// A_i, B_{i,i+1}, A_{i+1} (tangent circles where a corner collapses onto a
// vertex), the axes and the pencil center if there is one. Accepts valid
// configurations and the degenerate five-point shape with A_5 on
// <A_1,A_4>. This is the only place exact values become floats.
std::string render_svg(const std::vector<ProjPoint>& points, const RenderOptions& opts = {});

} // namespace naxes
