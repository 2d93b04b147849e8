#include "windmill/render.hpp"

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "windmill/errors.hpp"
#include "windmill/solver.hpp"

namespace windmill {

namespace {

struct Rect {
    Nat x0;
    Nat y0;
    Nat w;
    Nat h;
};

struct Layout {
    Nat side;               // bounding square, in unit cells
    Rect center;
    std::array<Rect, 4> arms;  // right, bottom, left, top
};

/// Unit-cell geometry of the windmill, shifted so every coordinate is
/// non-negative. The four arms are the images of the right arm under
/// successive 90-degree rotations about the square's center, which keeps
/// the whole figure rotation-invariant and overlap-free.
Layout layout_windmill(const Triple& t) {
    const Nat& x = t.x;
    const Nat& y = t.y;
    const Nat& z = t.z;
    Nat xmin = std::min(Nat(-y), Nat(x - z));
    Nat xmax = std::max(Nat(x + y), z);
    Nat o = -xmin;

    Layout l;
    l.side = xmax - xmin;
    l.center = {o, o, x, x};
    l.arms = {{
        {o + x, o, y, z},          // right, attached top-right going right
        {o + x - z, o + x, z, y},  // bottom, below-right going down
        {o - y, o + x - z, y, z},  // left, at bottom-left going left
        {o, o - y, z, y},          // top, above-left going up
    }};
    return l;
}

void fill_rect(std::vector<std::string>& grid, const Rect& r, char c) {
    std::uint64_t x0 = to_u64(r.x0);
    std::uint64_t y0 = to_u64(r.y0);
    std::uint64_t w = to_u64(r.w);
    std::uint64_t h = to_u64(r.h);
    for (std::uint64_t row = y0; row < y0 + h; ++row) {
        for (std::uint64_t col = x0; col < x0 + w; ++col) {
            grid[row][col] = c;
        }
    }
}

std::string render_ascii(const Triple& t) {
    Layout l = layout_windmill(t);
    constexpr std::uint64_t kMaxSide = 4096;
    if (!fits_u64(l.side) || to_u64(l.side) > kMaxSide) {
        throw DomainError("render_windmill: triple too large to rasterize as text (side " +
                          to_string(l.side) + " cells, limit " + std::to_string(kMaxSide) + ")");
    }
    std::uint64_t side = to_u64(l.side);
    std::vector<std::string> grid(side, std::string(side, ' '));
    fill_rect(grid, l.center, '#');
    for (const Rect& arm : l.arms) fill_rect(grid, arm, 'o');
    std::string out;
    for (const std::string& row : grid) {
        out += row;
        out += '\n';
    }
    return out;
}

void svg_rect(std::ostream& os, const Rect& r, const Nat& cell, const std::string& attrs) {
    os << "  <rect x=\"" << r.x0 * cell << "\" y=\"" << r.y0 * cell << "\" width=\"" << r.w * cell
       << "\" height=\"" << r.h * cell << "\" " << attrs << "/>\n";
}

std::string render_svg(const RenderSpec& spec) {
    const Triple& t = spec.triple;
    const Nat& cell = spec.cell_size;
    Layout l = layout_windmill(t);
    Nat px = l.side * cell;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px
       << "\" viewBox=\"0 0 " << px << " " << px << "\">\n";
    svg_rect(os, l.center, cell, "fill=\"#666666\" stroke=\"#000000\" stroke-width=\"1\"");
    for (const Rect& arm : l.arms) {
        svg_rect(os, arm, cell, "fill=\"#c8c8c8\" stroke=\"#000000\" stroke-width=\"1\"");
    }
    if (spec.show_mind) {
        Nat m = mind(t);
        Nat corner = -std::min(Nat(-t.y), Nat(t.x - t.z)) + (t.x - m) / 2;
        Rect mind_rect{corner, corner, m, m};
        svg_rect(os, mind_rect, cell,
                 "fill=\"none\" stroke=\"#cc3333\" stroke-width=\"2\" stroke-dasharray=\"6,4\"");
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render_windmill(const RenderSpec& spec) {
    if (!is_proper(spec.triple)) {
        throw ImproperTriple("render_windmill: triple " + to_string(spec.triple) +
                             " has a zero component");
    }
    if (spec.cell_size < 1) {
        throw DomainError("render_windmill: cell_size must be at least 1");
    }
    if (spec.format == RenderFormat::ASCII) return render_ascii(spec.triple);
    return render_svg(spec);
}

std::string render_orbit(const Nat& n) {
    OrbitExit exit = orbit_exit(n);
    Triple t{1, 1, n / 4};
    std::ostringstream os;
    os << to_string(t) << '\n';
    for (Nat i = 1; i <= exit.steps; ++i) {
        Triple flipped = flip(t);
        os << "  flip   -> " << to_string(flipped) << '\n';
        Triple next = zagier(flipped);
        if (!(next == flipped)) {
            os << "  zagier -> " << to_string(next) << '\n';
        }
        t = next;
    }
    if (exit.kind == ExitKind::FlipFixed) {
        os << "flip-fixed: " << n << " = " << exit.triple.x << "^2 + " << exit.triple.y + exit.triple.z
           << "^2\n";
    } else {
        os << "zagier-fixed: factor " << exit.triple.x << '\n';
    }
    return os.str();
}

}  // namespace windmill
