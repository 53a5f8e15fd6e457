#pragma once

#include <string>
#include <vector>

#include "sympack/geometry.hpp"

namespace sympack {

// 2D: container triangle, unit grid, gray-shaded numbered shapes. 3D: an
// orthographic projection with numbered tetrahedra; the JSON placement stays
// the authoritative artifact. When the placement fails verify_packing the
// output carries an overlap-warning comment and `warned` is set.
std::string render_svg(const std::vector<SimplexShape>& shapes,
                       const Placement& placement, bool* warned = nullptr);

// Standalone-compilable TikZ document in the same visual style.
std::string render_tikz(const std::vector<SimplexShape>& shapes,
                        const Placement& placement, bool* warned = nullptr);

}  // namespace sympack
