#ifndef CONFHOM_PREDICT_HPP
#define CONFHOM_PREDICT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "confhom/common.hpp"
#include "confhom/report.hpp"
#include "confhom/surface.hpp"

namespace confhom {

// A monomial in the polynomial ring on the classes Q^j eps tensored with the
// symmetric algebra on H_1 of the surface. Q^j eps contributes (2^j - 1, 2^j)
// to (degree, weight); each arc generator contributes (1, 1).
struct MonomialSpec {
    std::vector<int> alpha;         // exponents of Q^j eps, indexed by j
    std::vector<int> arc_exponents; // length arc_count

    int degree() const {
        int q = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j)
            q += alpha[j] * ((1 << j) - 1);
        for (int e : arc_exponents) q += e;
        return q;
    }
    int weight() const {
        int w = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j)
            w += alpha[j] << j;
        for (int e : arc_exponents) w += e;
        return w;
    }

    bool operator==(const MonomialSpec& other) const = default;

    std::string to_string() const;
};

// Number of monomials of the given bidegree. Counted as: over p from
// (weight - degree) to weight, partitions of p into exactly weight - degree
// powers of 2, times compositions of weight - p over the arcs.
std::uint64_t count_monomials(const SurfaceSpec& surface, int degree, int weight);

// the counted list, deterministic order (p ascending)
std::vector<MonomialSpec> enumerate_monomials(const SurfaceSpec& surface, int degree,
                                              int weight);

// predicted open Betti numbers for degrees 0..weight
std::vector<std::size_t> predicted_open(const SurfaceSpec& surface, int weight);

// computed Betti numbers against the prediction, per degree
Report compare(const SurfaceSpec& surface, int weight,
               std::uint64_t cap = kDefaultCellCap);

} // namespace confhom

#endif
