#ifndef CONFHOM_FILTRATION_HPP
#define CONFHOM_FILTRATION_HPP

#include <utility>
#include <vector>

#include "confhom/homology.hpp"
#include "confhom/report.hpp"
#include "confhom/symchains.hpp"

namespace confhom {

// The filtration stratum F_p/F_{p-1}: cells of norm exactly p carrying only
// the norm-preserving (inner) differentials. Splits as a direct sum over the
// arc occupancies s with sum(s) == weight - p of degree-shifted copies of the
// disc complex on p points.
struct StratumComplex {
    SurfaceSpec surface;
    int weight = 0;
    int norm = 0;
    std::vector<std::vector<CellTuple>> cells_by_dim; // index: dim - weight
    std::vector<BitMatrix> boundaries;                // slot k: leaving dim weight+1+k

    const std::vector<CellTuple>& cells(int dim) const;
    const BitMatrix& boundary_from(int dim) const;

    // dim of the homology of the stratum, per dimension (index: dim - weight)
    std::vector<std::size_t> homology_dims() const;
};

StratumComplex stratum_complex(const SurfaceSpec& surface, int weight, int norm);

// Per arc occupancy s, matches the stratum differential against the disc
// differential under the cell bijection (l, x, s) <-> (l, x).
Report verify_stratum_isomorphism(const SurfaceSpec& surface, int weight, int norm);

// E^1 collapse as a dimension count: for every dimension, the stratum
// homology dimensions summed over all norms equal the Betti number of the
// full complex.
Report verify_e1_collapse(const SurfaceSpec& surface, int weight,
                          std::uint64_t cap = kDefaultCellCap);

// GF(2) sum of product cells (disc tuple of weight disc_weight) x (arc-only
// tuple of weight arc_weight); the target of the chain-level pushforward.
struct TensorChain {
    int disc_weight = 0;
    int arc_weight = 0;
    std::vector<std::pair<CellTuple, CellTuple>> support; // sorted

    bool empty() const { return support.empty(); }
    bool operator==(const TensorChain& other) const = default;
};

// Chain-level pushforward of the collapse map at the given split norm:
// tuples of norm < split_norm map to zero, tuples (l, x, s) of norm exactly
// split_norm map to (l, x) x (0, s). Chains containing a tuple of norm
// above the split are outside the map's domain and rejected.
TensorChain mu_infinity_pushforward(const Chain& c, int split_norm);

// For every basis string (p, alpha, s): the pushforward at split p equals
// symmetric_chain(alpha) tensor (0, s); every lower-norm basis chain dies at
// split p; and within each (dimension, norm) block the pushforward images are
// pairwise distinct, so the block pairing matrix is the identity.
Report verify_pushforward(const SurfaceSpec& surface, int weight);

} // namespace confhom

#endif
