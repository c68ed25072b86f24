#include "confhom/surface.hpp"

#include <stdexcept>

namespace confhom {

SurfaceSpec make_surface(int genus, int boundaries) {
    if (genus < 0)
        throw std::invalid_argument("make_surface: genus must be >= 0");
    if (boundaries < 1)
        throw std::invalid_argument("make_surface: need at least one boundary curve");

    SurfaceSpec s;
    s.genus = genus;
    s.boundaries = boundaries;
    s.arc_count = 2 * genus + boundaries - 1;
    s.arc_labels.reserve(static_cast<std::size_t>(s.arc_count));
    for (int i = 1; i <= genus; ++i) {
        s.arc_labels.push_back("U" + std::to_string(i));
        s.arc_labels.push_back("V" + std::to_string(i));
    }
    for (int k = 1; k <= boundaries - 1; ++k)
        s.arc_labels.push_back("W" + std::to_string(k));
    return s;
}

int first_homology_rank(const SurfaceSpec& s) { return s.arc_count; }

} // namespace confhom
