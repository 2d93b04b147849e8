#pragma once

#include <string>

#include "windmill/nat.hpp"
#include "windmill/triple.hpp"

namespace windmill {

enum class RenderFormat { SVG, ASCII };

struct RenderSpec {
    Triple triple;
    RenderFormat format = RenderFormat::SVG;
    Nat cell_size = 12;  // SVG pixels per unit square
    bool show_mind = false;
};

/// Draw the windmill of a proper triple: an x-by-x central square with
/// four congruent y-by-z arms placed clockwise (right arm attached at the
/// top-right corner going right, bottom arm below-right, left arm at the
/// bottom-left going left, top arm above-left), so the image is invariant
/// under 90-degree rotation about the square's center.
///
/// SVG output is a standalone document of exactly five rect elements
/// (six with show_mind: a dashed square of side mind(triple) centered on
/// the windmill's center). ASCII output is a character grid, one cell per
/// unit: '#' for the central square, 'o' for arms, blank elsewhere;
/// show_mind has no ASCII form and is ignored.
///
/// Throws ImproperTriple when any component is zero.
std::string render_windmill(const RenderSpec& spec);

/// The iteration chain from (1, 1, n div 4), one line per flip or zagier
/// half-step, ending at the first flip-fixed iterate (with the resulting
/// two-squares identity) or zagier-fixed iterate (with the factor it
/// reveals). Preconditions and errors as orbit_exit.
std::string render_orbit(const Nat& n);

}  // namespace windmill
