#ifndef CONFHOM_CELLS_HPP
#define CONFHOM_CELLS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "confhom/common.hpp"
#include "confhom/surface.hpp"

namespace confhom {

// One cell of the CW structure on the compactified configuration space:
// `lines` holds the point counts x_1..x_l on the occupied vertical lines
// (left to right, each >= 1), `arcs` the occupancies of the r arcs in
// canonical order. The basepoint cell at infinity is never stored.
struct CellTuple {
    std::vector<int> lines;
    std::vector<int> arcs;

    int line_count() const { return static_cast<int>(lines.size()); }

    int weight() const {
        int w = 0;
        for (int x : lines) w += x;
        for (int s : arcs) w += s;
        return w;
    }

    int dimension() const { return weight() + line_count(); }

    // number of points on vertical lines; the filtration parameter
    int norm() const {
        int p = 0;
        for (int x : lines) p += x;
        return p;
    }

    bool operator==(const CellTuple& other) const {
        return lines == other.lines && arcs == other.arcs;
    }

    // canonical order: line count, then lines lexicographically, then arcs
    bool operator<(const CellTuple& other) const {
        if (lines.size() != other.lines.size())
            return lines.size() < other.lines.size();
        if (lines != other.lines)
            return lines < other.lines;
        return arcs < other.arcs;
    }

    std::string to_string() const;
};

// All cells of one weight, grouped and sorted per dimension. Dimensions run
// from `weight` (no lines) to 2*weight (all points on separate lines); both
// ends may be empty, e.g. the disc has no cells of dimension == weight for
// weight >= 1.
class CellIndex {
public:
    CellIndex() = default;
    CellIndex(SurfaceSpec surface, int weight, std::vector<std::vector<CellTuple>> by_dim);

    const SurfaceSpec& surface() const { return surface_; }
    int weight() const { return weight_; }
    int min_dim() const { return weight_; }
    int max_dim() const { return 2 * weight_; }

    // empty list for dimensions outside [min_dim, max_dim]
    const std::vector<CellTuple>& cells(int dim) const;

    std::size_t total_cells() const { return total_; }

    // position of a tuple within its dimension's sorted list
    std::optional<std::size_t> find_in_dim(const CellTuple& t) const;

    // global id: dimensions concatenated in increasing order
    std::size_t global_index(const CellTuple& t) const;
    const CellTuple& tuple_at(std::size_t global_id) const;

private:
    SurfaceSpec surface_;
    int weight_ = 0;
    std::vector<std::vector<CellTuple>> by_dim_; // index: dim - weight
    std::vector<std::size_t> dim_offset_;
    std::size_t total_ = 0;
    static const std::vector<CellTuple> empty_;
};

// Enumerates every tuple of the given weight in canonical order. Throws
// ResourceLimitError when the total cell count would exceed `cap`.
CellIndex enumerate_cells(const SurfaceSpec& surface, int weight,
                          std::uint64_t cap = kDefaultCellCap);

// Combinatorial count of cells of one dimension, without enumerating:
// sum over p of (#compositions of p into d-weight positive parts) *
// (#compositions of weight-p into arc_count nonnegative parts).
// Saturates at UINT64_MAX.
std::uint64_t cell_count(const SurfaceSpec& surface, int weight, int dim);

// Total over all dimensions, same saturation.
std::uint64_t total_cell_count(const SurfaceSpec& surface, int weight);

} // namespace confhom

#endif
