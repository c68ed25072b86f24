#ifndef CONFHOM_BOUNDARY_HPP
#define CONFHOM_BOUNDARY_HPP

#include <cstdint>
#include <vector>

#include "confhom/cells.hpp"
#include "confhom/compositions.hpp"

namespace confhom {

// GF(2) formal sum of cells sharing one weight and dimension. Addition is
// symmetric difference; the support stays sorted in canonical cell order.
struct Chain {
    int weight = 0;
    int dimension = 0;
    std::vector<CellTuple> support;

    bool empty() const { return support.empty(); }
    bool operator==(const Chain& other) const {
        return weight == other.weight && dimension == other.dimension &&
               support == other.support;
    }
};

// toggles membership of t in c.support, keeping the order
void chain_toggle(Chain& c, const CellTuple& t);

// c += d over GF(2); dimensions and weights must agree unless one side is empty
Chain chain_add(const Chain& a, const Chain& b);

// Parity of C(a, b) by the Lucas criterion: odd iff (a-b) and b share no bits.
// Requires b <= a.
bool binom_mod2(std::uint64_t a, std::uint64_t b);

// Inner boundary terms of h with coefficient 1: adjacent lines i, i+1 merge
// into one line carrying x_i + x_{i+1}, coefficient C(x_i + x_{i+1}, x_i)
// mod 2. Inner terms preserve the norm and the arc occupancies.
template <class Fn>
void for_each_inner_term(const CellTuple& h, Fn&& fn) {
    const int l = h.line_count();
    for (int i = 0; i + 1 < l; ++i) {
        if (!binom_mod2(static_cast<std::uint64_t>(h.lines[i] + h.lines[i + 1]),
                        static_cast<std::uint64_t>(h.lines[i])))
            continue;
        CellTuple merged;
        merged.lines.reserve(static_cast<std::size_t>(l) - 1);
        for (int j = 0; j < l; ++j) {
            if (j == i)
                merged.lines.push_back(h.lines[i] + h.lines[i + 1]);
            else if (j != i + 1)
                merged.lines.push_back(h.lines[j]);
        }
        merged.arcs = h.arcs;
        fn(merged);
    }
}

// Outer boundary terms of h with coefficient 1, visited once per incidence: an
// extremal line discharges onto the arcs along a composition t of its point
// count, arc k gaining t_k, coefficient prod_k C(s_k + t_k, s_k) mod 2. Left
// (first line) and right (last line) discharges are both visited; a cell
// reached from both sides appears twice, and GF(2) accumulation in the caller
// cancels the pair. No outer terms exist when the surface has no arcs.
template <class Fn>
void for_each_outer_term(const CellTuple& h, Fn&& fn) {
    const int l = h.line_count();
    const int r = static_cast<int>(h.arcs.size());
    if (l == 0 || r == 0)
        return; // a positive x_i admits no splitting over zero arcs

    auto outer = [&](bool left) {
        const int discharged = left ? h.lines.front() : h.lines.back();
        for_each_weak_composition(discharged, r, [&](const std::vector<int>& t) {
            for (int k = 0; k < r; ++k)
                if ((static_cast<unsigned>(t[static_cast<std::size_t>(k)]) &
                     static_cast<unsigned>(h.arcs[static_cast<std::size_t>(k)])) != 0)
                    return; // some factor C(s_k + t_k, s_k) is even
            CellTuple out;
            out.lines.assign(left ? h.lines.begin() + 1 : h.lines.begin(),
                             left ? h.lines.end() : h.lines.end() - 1);
            out.arcs.resize(static_cast<std::size_t>(r));
            for (int k = 0; k < r; ++k)
                out.arcs[static_cast<std::size_t>(k)] =
                    h.arcs[static_cast<std::size_t>(k)] + t[static_cast<std::size_t>(k)];
            fn(out);
        });
    };
    outer(true);
    outer(false);
}

// all boundary terms, inner then outer
template <class Fn>
void for_each_boundary_term(const CellTuple& h, Fn&& fn) {
    for_each_inner_term(h, fn);
    for_each_outer_term(h, fn);
}

// boundary of a single cell as a chain, all cancellations applied
Chain boundary_tuple(const CellTuple& h);

// linear extension over the support
Chain boundary_chain(const Chain& c);

} // namespace confhom

#endif
