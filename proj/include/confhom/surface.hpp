#ifndef CONFHOM_SURFACE_HPP
#define CONFHOM_SURFACE_HPP

#include <string>
#include <vector>

namespace confhom {

// Combinatorial model of an orientable surface with boundary: a square whose
// vertical sides are cut into r = 2g + n - 1 pairs of identified intervals.
// Configuration points live either on interior vertical lines or on the open
// arcs coming from the identified intervals.
struct SurfaceSpec {
    int genus = 0;
    int boundaries = 1;
    int arc_count = 0; // r = 2g + n - 1

    // Canonical arc order: U_1, V_1, ..., U_g, V_g, then W_1, ..., W_{n-1}.
    std::vector<std::string> arc_labels;

    bool operator==(const SurfaceSpec& other) const {
        return genus == other.genus && boundaries == other.boundaries;
    }
};

// Rejects n = 0: the model needs at least one boundary curve.
SurfaceSpec make_surface(int genus, int boundaries);

// rank of H_1 of the surface over GF(2); equals the arc count.
int first_homology_rank(const SurfaceSpec& s);

} // namespace confhom

#endif
