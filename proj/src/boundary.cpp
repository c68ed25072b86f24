#include "confhom/boundary.hpp"

#include <algorithm>
#include <stdexcept>

namespace confhom {

bool binom_mod2(std::uint64_t a, std::uint64_t b) {
    if (b > a)
        throw std::invalid_argument("binom_mod2: require b <= a");
    return ((a - b) & b) == 0;
}

void chain_toggle(Chain& c, const CellTuple& t) {
    auto it = std::lower_bound(c.support.begin(), c.support.end(), t);
    if (it != c.support.end() && *it == t)
        c.support.erase(it);
    else
        c.support.insert(it, t);
}

Chain chain_add(const Chain& a, const Chain& b) {
    if (!a.empty() && !b.empty() && (a.weight != b.weight || a.dimension != b.dimension))
        throw std::invalid_argument("chain_add: mixed weight or dimension");
    Chain out;
    out.weight = a.empty() ? b.weight : a.weight;
    out.dimension = a.empty() ? b.dimension : a.dimension;
    std::set_symmetric_difference(a.support.begin(), a.support.end(),
                                  b.support.begin(), b.support.end(),
                                  std::back_inserter(out.support));
    return out;
}

Chain boundary_tuple(const CellTuple& h) {
    Chain out;
    out.weight = h.weight();
    out.dimension = h.dimension() - 1;
    for_each_boundary_term(h, [&](const CellTuple& t) { chain_toggle(out, t); });
    return out;
}

Chain boundary_chain(const Chain& c) {
    Chain out;
    out.weight = c.weight;
    out.dimension = c.dimension - 1;
    for (const CellTuple& h : c.support)
        for_each_boundary_term(h, [&](const CellTuple& t) { chain_toggle(out, t); });
    return out;
}

} // namespace confhom
