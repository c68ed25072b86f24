#include "confhom/symchains.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "confhom/compositions.hpp"

namespace confhom {

namespace {

std::string int_list(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

// ascending multiset of powers of 2 described by alpha
std::vector<int> multiset_of(const AlphaVector& alpha) {
    std::vector<int> parts;
    for (std::size_t j = 0; j < alpha.counts.size(); ++j)
        for (int k = 0; k < alpha.counts[j]; ++k)
            parts.push_back(1 << j);
    return parts;
}

} // namespace

std::string AlphaVector::to_string() const { return int_list(counts); }

std::string BasisChain::label() const {
    return "p=" + std::to_string(norm) + " alpha=" + alpha.to_string() +
           " s=" + int_list(arcs);
}

Chain generalized_symmetric_chain(const SurfaceSpec& surface, const AlphaVector& alpha,
                                  const std::vector<int>& arcs) {
    if (static_cast<int>(arcs.size()) != surface.arc_count)
        throw std::invalid_argument("generalized_symmetric_chain: arc list length != arc count");
    for (int s : arcs)
        if (s < 0)
            throw std::invalid_argument("generalized_symmetric_chain: negative arc occupancy");

    int arc_weight = 0;
    for (int s : arcs) arc_weight += s;

    Chain chain;
    chain.weight = alpha.point_count() + arc_weight;
    chain.dimension = chain.weight + alpha.line_count();

    // distinct arrangements of the sorted multiset, in lexicographic order
    std::vector<int> parts = multiset_of(alpha);
    if (parts.empty()) {
        chain.support.push_back(CellTuple{{}, arcs});
        return chain;
    }
    do {
        chain.support.push_back(CellTuple{parts, arcs});
    } while (std::next_permutation(parts.begin(), parts.end()));
    // lex order on equal-length line vectors matches the canonical cell order
    return chain;
}

Chain symmetric_chain(const AlphaVector& alpha) {
    return generalized_symmetric_chain(make_surface(0, 1), alpha, {});
}

bool is_cycle(const Chain& c) { return boundary_chain(c).empty(); }

std::vector<BasisChain> enumerate_basis_chains(const SurfaceSpec& surface, int weight) {
    std::vector<BasisChain> out;
    for (int p = 0; p <= weight; ++p) {
        std::vector<std::vector<int>> alphas;
        enumerate_pow2_multiplicities(p, alphas);
        for (const auto& counts : alphas) {
            AlphaVector alpha(counts);
            for_each_weak_composition(weight - p, surface.arc_count,
                                      [&](const std::vector<int>& s) {
                                          BasisChain b;
                                          b.norm = p;
                                          b.alpha = alpha;
                                          b.arcs = s;
                                          b.chain = generalized_symmetric_chain(surface, alpha, s);
                                          out.push_back(std::move(b));
                                      });
        }
    }
    return out;
}

Report verify_cycles(const SurfaceSpec& surface, int weight) {
    Report report;
    for (const BasisChain& b : enumerate_basis_chains(surface, weight)) {
        const Chain d = boundary_chain(b.chain);
        report.add("cycle " + b.label(), d.empty(),
                   d.empty() ? "" : "boundary has " + std::to_string(d.support.size()) + " terms");
    }
    return report;
}

Report verify_basis(const SurfaceSpec& surface, int weight, std::uint64_t cap) {
    Report report;
    const ChainComplex complex = build_complex(surface, weight, cap);
    const BettiTable table = betti_from_complex(complex);
    const std::vector<BasisChain> chains = enumerate_basis_chains(surface, weight);

    std::map<int, std::vector<const BasisChain*>> by_dim;
    for (const BasisChain& b : chains) {
        const Chain d = boundary_chain(b.chain);
        report.add("cycle " + b.label(), d.empty(),
                   d.empty() ? "" : "boundary has " + std::to_string(d.support.size()) + " terms");
        by_dim[b.dimension()].push_back(&b);
    }

    for (int dim = weight; dim <= 2 * weight; ++dim) {
        const std::size_t betti_d = table.compactified_at(dim);
        auto it = by_dim.find(dim);
        const std::size_t count = it == by_dim.end() ? 0 : it->second.size();

        BitMatrix span(count, complex.index.cells(dim).size());
        if (it != by_dim.end()) {
            for (std::size_t i = 0; i < count; ++i) {
                const auto row = chain_to_row(complex.index, it->second[i]->chain);
                std::copy(row.begin(), row.end(), span.row_data(i));
            }
        }
        BitMatrix image = complex.boundary_from(dim + 1);
        if (dim + 1 > 2 * weight)
            image = BitMatrix(0, complex.index.cells(dim).size());
        const std::size_t quotient_rank = rank_of_span_in_quotient(span, image);

        const bool pass = count == betti_d && quotient_rank == betti_d;
        report.add("basis dim=" + std::to_string(dim) + " chains=" + std::to_string(count) +
                       " rank=" + std::to_string(quotient_rank) +
                       " betti=" + std::to_string(betti_d),
                   pass);
    }
    return report;
}

} // namespace confhom
