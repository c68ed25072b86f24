#ifndef CONFHOM_HOMOLOGY_HPP
#define CONFHOM_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "confhom/boundary.hpp"
#include "confhom/cells.hpp"
#include "confhom/gf2.hpp"
#include "confhom/report.hpp"

namespace confhom {

// Reduced cellular chain complex of one (surface, weight) instance: the cell
// index plus one boundary matrix per dimension. The matrix leaving dimension d
// has one row per d-cell and one column per (d-1)-cell.
struct ChainComplex {
    CellIndex index;
    std::vector<BitMatrix> boundaries; // slot k: matrix leaving dimension weight+1+k

    const SurfaceSpec& surface() const { return index.surface(); }
    int weight() const { return index.weight(); }

    // zero-size matrix outside (weight, 2*weight]
    const BitMatrix& boundary_from(int dim) const;
};

ChainComplex build_complex(const SurfaceSpec& surface, int weight,
                           std::uint64_t cap = kDefaultCellCap);

// Betti numbers on both sides of Poincare-Lefschetz duality:
// compactified[d - weight] = dim of reduced homology of the compactification
// in dimension d; open[q] = dim H_q of the open configuration space, which
// equals compactified at dimension 2*weight - q.
struct BettiTable {
    SurfaceSpec surface;
    int weight = 0;
    std::vector<std::size_t> compactified; // size weight+1, dims weight..2*weight
    std::vector<std::size_t> open;         // size weight+1, degrees 0..weight
    std::vector<std::size_t> cells_by_dim; // size weight+1, dims weight..2*weight
    long long euler = 0;

    std::size_t compactified_at(int dim) const {
        if (dim < weight || dim > 2 * weight)
            return 0;
        return compactified[static_cast<std::size_t>(dim - weight)];
    }
    std::size_t open_at(int degree) const {
        if (degree < 0 || degree > weight)
            return 0;
        return open[static_cast<std::size_t>(degree)];
    }
};

BettiTable betti_from_complex(const ChainComplex& complex);
BettiTable betti(const SurfaceSpec& surface, int weight,
                 std::uint64_t cap = kDefaultCellCap);

// betti for weight = 0..weight_max
std::vector<BettiTable> betti_table_sweep(const SurfaceSpec& surface, int weight_max,
                                          std::uint64_t cap = kDefaultCellCap);

// coordinates of a chain over the sorted cell list of its dimension,
// word-packed to match BitMatrix rows
std::vector<std::uint64_t> chain_to_row(const CellIndex& index, const Chain& c);

// every product of consecutive boundary matrices is zero
Report verify_d_squared(const ChainComplex& complex);

} // namespace confhom

#endif
