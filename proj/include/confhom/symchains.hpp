#ifndef CONFHOM_SYMCHAINS_HPP
#define CONFHOM_SYMCHAINS_HPP

#include <string>
#include <vector>

#include "confhom/boundary.hpp"
#include "confhom/homology.hpp"
#include "confhom/report.hpp"

namespace confhom {

// Multiplicities of the powers of 2 in a partition p = sum_j alpha[j] * 2^j.
// Trailing zeros are trimmed. Line count and point count are always derived.
struct AlphaVector {
    std::vector<int> counts;

    AlphaVector() = default;
    explicit AlphaVector(std::vector<int> c) : counts(std::move(c)) { trim(); }

    void trim() {
        while (!counts.empty() && counts.back() == 0) counts.pop_back();
    }

    // counts every part, the 2^0 ones included
    int line_count() const {
        int l = 0;
        for (int a : counts) l += a;
        return l;
    }

    int point_count() const {
        int p = 0;
        for (std::size_t j = 0; j < counts.size(); ++j)
            p += counts[j] << j;
        return p;
    }

    bool operator==(const AlphaVector& other) const { return counts == other.counts; }

    std::string to_string() const;
};

// Sum of all tuples whose line multiplicities arrange the multiset
// {2^j with multiplicity alpha_j}; a cycle in the disc complex.
Chain symmetric_chain(const AlphaVector& alpha);

// Same arrangements with fixed arc occupancies appended; weight is
// alpha.point_count() + sum(arcs). arcs must have surface.arc_count entries.
Chain generalized_symmetric_chain(const SurfaceSpec& surface, const AlphaVector& alpha,
                                  const std::vector<int>& arcs);

bool is_cycle(const Chain& c);

// The string (p, alpha, s) indexing one basis class, plus its chain.
struct BasisChain {
    int norm = 0; // p = alpha.point_count()
    AlphaVector alpha;
    std::vector<int> arcs;
    Chain chain;

    int dimension() const { return chain.dimension; }
    std::string label() const;
};

// One generalized symmetric chain per string (p, alpha, s) with
// alpha.point_count() == p and sum(s) == weight - p, for p = 0..weight,
// in deterministic order (p ascending).
std::vector<BasisChain> enumerate_basis_chains(const SurfaceSpec& surface, int weight);

// cycle check per enumerated chain
Report verify_cycles(const SurfaceSpec& surface, int weight);

// cycle check per chain, then per dimension: chain count and the rank of the
// chains' span in the quotient by the boundaries both equal the compactified
// Betti number.
Report verify_basis(const SurfaceSpec& surface, int weight,
                    std::uint64_t cap = kDefaultCellCap);

} // namespace confhom

#endif
