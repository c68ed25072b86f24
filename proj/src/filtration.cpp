#include "confhom/filtration.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "confhom/compositions.hpp"

namespace confhom {

namespace {

const std::vector<CellTuple> kNoCells{};
const BitMatrix kNoMatrix{};

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

} // namespace

const std::vector<CellTuple>& StratumComplex::cells(int dim) const {
    if (dim < weight || dim > 2 * weight)
        return kNoCells;
    return cells_by_dim[static_cast<std::size_t>(dim - weight)];
}

const BitMatrix& StratumComplex::boundary_from(int dim) const {
    if (dim <= weight || dim > 2 * weight)
        return kNoMatrix;
    return boundaries[static_cast<std::size_t>(dim - weight - 1)];
}

std::vector<std::size_t> StratumComplex::homology_dims() const {
    std::vector<std::size_t> ranks(static_cast<std::size_t>(weight) + 2, 0);
    for (int d = weight + 1; d <= 2 * weight; ++d)
        ranks[static_cast<std::size_t>(d - weight)] = rank(boundary_from(d));
    std::vector<std::size_t> dims(static_cast<std::size_t>(weight) + 1, 0);
    for (int d = weight; d <= 2 * weight; ++d) {
        const std::size_t slot = static_cast<std::size_t>(d - weight);
        dims[slot] = cells(d).size() - ranks[slot] - ranks[slot + 1];
    }
    return dims;
}

StratumComplex stratum_complex(const SurfaceSpec& surface, int weight, int norm) {
    if (norm < 0 || norm > weight)
        throw std::invalid_argument("stratum_complex: norm must lie in [0, weight]");

    StratumComplex st;
    st.surface = surface;
    st.weight = weight;
    st.norm = norm;
    st.cells_by_dim.resize(static_cast<std::size_t>(weight) + 1);

    // cells of norm p: x a positive composition of p, s a composition of
    // weight - p; dimension weight + l
    const int l_min = norm == 0 ? 0 : 1;
    for (int l = l_min; l <= norm; ++l) {
        auto& bucket = st.cells_by_dim[static_cast<std::size_t>(l)];
        for_each_weak_composition(norm - l, l, [&](const std::vector<int>& shifted) {
            std::vector<int> x(shifted);
            for (int& xi : x) ++xi;
            for_each_weak_composition(weight - norm, surface.arc_count,
                                      [&](const std::vector<int>& s) {
                                          bucket.push_back(CellTuple{x, s});
                                      });
        });
        // nested lex enumeration leaves each bucket in canonical order
    }

    for (int d = weight + 1; d <= 2 * weight; ++d) {
        const auto& rows = st.cells(d);
        const auto& cols = st.cells(d - 1);
        BitMatrix m(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for_each_inner_term(rows[r], [&](const CellTuple& t) {
                auto it = std::lower_bound(cols.begin(), cols.end(), t);
                if (it == cols.end() || !(*it == t))
                    throw std::logic_error("stratum inner term left the stratum: " +
                                           t.to_string());
                m.flip(r, static_cast<std::size_t>(it - cols.begin()));
            });
        }
        st.boundaries.push_back(std::move(m));
    }
    return st;
}

Report verify_stratum_isomorphism(const SurfaceSpec& surface, int weight, int norm) {
    Report report;
    const SurfaceSpec disc = make_surface(0, 1);
    const CellIndex disc_index = enumerate_cells(disc, norm);

    // the copies tile the stratum: one disc complex per arc occupancy
    std::size_t copies = 0;
    for_each_weak_composition(weight - norm, surface.arc_count,
                              [&](const std::vector<int>&) { ++copies; });
    std::size_t stratum_cells = 0;
    const StratumComplex st = stratum_complex(surface, weight, norm);
    for (int d = weight; d <= 2 * weight; ++d) stratum_cells += st.cells(d).size();
    const bool tiles = stratum_cells == copies * disc_index.total_cells();
    report.add("stratum-count p=" + std::to_string(norm) + " cells=" +
                   std::to_string(stratum_cells) + " copies=" + std::to_string(copies) +
                   " disc=" + std::to_string(disc_index.total_cells()),
               tiles);

    for_each_weak_composition(weight - norm, surface.arc_count, [&](const std::vector<int>& s) {
        bool pass = true;
        std::string detail;

        for (int dd = norm; dd <= 2 * norm && pass; ++dd) {
            for (const CellTuple& disc_cell : disc_index.cells(dd)) {
                // image of the disc cell under the copy labelled by s
                const CellTuple image{disc_cell.lines, s};

                Chain from_disc; // disc differential, transported
                from_disc.weight = weight;
                from_disc.dimension = image.dimension() - 1;
                for_each_inner_term(disc_cell, [&](const CellTuple& t) {
                    chain_toggle(from_disc, CellTuple{t.lines, s});
                });

                Chain in_stratum; // stratum differential applied to the image
                in_stratum.weight = weight;
                in_stratum.dimension = image.dimension() - 1;
                for_each_inner_term(image, [&](const CellTuple& t) {
                    chain_toggle(in_stratum, t);
                });

                if (!(from_disc == in_stratum)) {
                    pass = false;
                    detail = "differentials disagree at " + image.to_string();
                    break;
                }
            }
        }
        report.add("stratum p=" + std::to_string(norm) + " s=" + int_list(s), pass, detail);
    });
    return report;
}

Report verify_e1_collapse(const SurfaceSpec& surface, int weight, std::uint64_t cap) {
    Report report;
    const BettiTable table = betti(surface, weight, cap);

    std::vector<std::size_t> sums(static_cast<std::size_t>(weight) + 1, 0);
    for (int p = 0; p <= weight; ++p) {
        const auto dims = stratum_complex(surface, weight, p).homology_dims();
        for (std::size_t i = 0; i < dims.size(); ++i) sums[i] += dims[i];
    }

    for (int d = weight; d <= 2 * weight; ++d) {
        const std::size_t sum = sums[static_cast<std::size_t>(d - weight)];
        const std::size_t betti_d = table.compactified_at(d);
        report.add("collapse dim=" + std::to_string(d) + " sum=" + std::to_string(sum) +
                       " betti=" + std::to_string(betti_d),
                   sum == betti_d);
    }
    return report;
}

namespace {

void tensor_toggle(TensorChain& tc, std::pair<CellTuple, CellTuple> term) {
    auto it = std::lower_bound(tc.support.begin(), tc.support.end(), term);
    if (it != tc.support.end() && *it == term)
        tc.support.erase(it);
    else
        tc.support.insert(it, std::move(term));
}

} // namespace

TensorChain mu_infinity_pushforward(const Chain& c, int split_norm) {
    TensorChain out;
    out.disc_weight = split_norm;
    out.arc_weight = c.weight - split_norm;
    for (const CellTuple& t : c.support) {
        const int p = t.norm();
        if (p > split_norm)
            throw std::invalid_argument(
                "mu_infinity_pushforward: chain leaves the filtration stage, tuple " +
                t.to_string() + " has norm " + std::to_string(p) + " > " +
                std::to_string(split_norm));
        if (p < split_norm)
            continue; // collapsed to the basepoint
        tensor_toggle(out, {CellTuple{t.lines, {}}, CellTuple{{}, t.arcs}});
    }
    return out;
}

Report verify_pushforward(const SurfaceSpec& surface, int weight) {
    Report report;
    const std::vector<BasisChain> chains = enumerate_basis_chains(surface, weight);

    // identity on the diagonal: kappa(p, alpha, s) |-> kappa(alpha) x (0, s)
    for (const BasisChain& b : chains) {
        TensorChain expected;
        expected.disc_weight = b.norm;
        expected.arc_weight = weight - b.norm;
        for (const CellTuple& t : symmetric_chain(b.alpha).support)
            tensor_toggle(expected, {t, CellTuple{{}, b.arcs}});

        const TensorChain actual = mu_infinity_pushforward(b.chain, b.norm);
        report.add("pushforward " + b.label(), actual == expected,
                   actual == expected ? "" : "pushforward misses its tensor chain");
    }

    // strictly below the diagonal: lower-norm chains die at each split
    for (int p = 1; p <= weight; ++p) {
        bool any = false;
        bool all_zero = true;
        std::string offender;
        for (const BasisChain& b : chains) {
            if (b.norm >= p)
                continue;
            any = true;
            if (!mu_infinity_pushforward(b.chain, p).empty()) {
                all_zero = false;
                offender = b.label();
                break;
            }
        }
        if (any)
            report.add("pushforward-zero split=" + std::to_string(p), all_zero,
                       all_zero ? "" : "nonzero image of " + offender);
    }

    // block diagonals are identity matrices: within one (dimension, norm)
    // block the images are pairwise distinct
    std::map<std::pair<int, int>, std::vector<const BasisChain*>> blocks;
    for (const BasisChain& b : chains)
        blocks[{b.dimension(), b.norm}].push_back(&b);
    for (const auto& [key, members] : blocks) {
        bool distinct = true;
        std::string clash;
        for (std::size_t i = 0; i < members.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (mu_infinity_pushforward(members[i]->chain, key.second) ==
                    mu_infinity_pushforward(members[j]->chain, key.second)) {
                    distinct = false;
                    clash = members[i]->label() + " vs " + members[j]->label();
                    break;
                }
            }
        report.add("pushforward-block dim=" + std::to_string(key.first) +
                       " p=" + std::to_string(key.second) +
                       " size=" + std::to_string(members.size()),
                   distinct, distinct ? "" : "equal images: " + clash);
    }
    return report;
}

} // namespace confhom
