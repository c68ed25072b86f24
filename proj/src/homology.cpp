#include "confhom/homology.hpp"

#include <stdexcept>

namespace confhom {

namespace {
const BitMatrix kNoMatrix{};
}

const BitMatrix& ChainComplex::boundary_from(int dim) const {
    const int m = index.weight();
    if (dim <= m || dim > 2 * m)
        return kNoMatrix;
    return boundaries[static_cast<std::size_t>(dim - m - 1)];
}

ChainComplex build_complex(const SurfaceSpec& surface, int weight, std::uint64_t cap) {
    ChainComplex complex;
    complex.index = enumerate_cells(surface, weight, cap);
    const CellIndex& index = complex.index;

    complex.boundaries.reserve(static_cast<std::size_t>(weight));
    for (int d = weight + 1; d <= 2 * weight; ++d) {
        const auto& rows = index.cells(d);
        const auto& cols = index.cells(d - 1);
        BitMatrix m(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for_each_boundary_term(rows[r], [&](const CellTuple& t) {
                auto c = index.find_in_dim(t);
                if (!c)
                    throw std::logic_error("boundary term missing from cell index: " +
                                           t.to_string());
                m.flip(r, *c);
            });
        }
        complex.boundaries.push_back(std::move(m));
    }
    return complex;
}

BettiTable betti_from_complex(const ChainComplex& complex) {
    const CellIndex& index = complex.index;
    const int m = index.weight();

    BettiTable table;
    table.surface = index.surface();
    table.weight = m;
    table.compactified.assign(static_cast<std::size_t>(m) + 1, 0);
    table.cells_by_dim.assign(static_cast<std::size_t>(m) + 1, 0);

    std::vector<std::size_t> ranks(static_cast<std::size_t>(m) + 2, 0);
    for (int d = m + 1; d <= 2 * m; ++d)
        ranks[static_cast<std::size_t>(d - m)] = rank(complex.boundary_from(d));

    table.euler = 0;
    for (int d = m; d <= 2 * m; ++d) {
        const std::size_t cells = index.cells(d).size();
        const std::size_t slot = static_cast<std::size_t>(d - m);
        table.cells_by_dim[slot] = cells;
        table.compactified[slot] = cells - ranks[slot] - ranks[slot + 1];
        const long long signed_betti =
            (d % 2 == 0) ? static_cast<long long>(table.compactified[slot])
                         : -static_cast<long long>(table.compactified[slot]);
        table.euler += signed_betti;
    }

    table.open.assign(static_cast<std::size_t>(m) + 1, 0);
    for (int q = 0; q <= m; ++q)
        table.open[static_cast<std::size_t>(q)] = table.compactified_at(2 * m - q);
    return table;
}

BettiTable betti(const SurfaceSpec& surface, int weight, std::uint64_t cap) {
    if (weight == 0) {
        // one empty configuration; S^0 after compactifying
        BettiTable table;
        table.surface = surface;
        table.weight = 0;
        table.compactified = {1};
        table.open = {1};
        table.cells_by_dim = {1};
        table.euler = 1;
        return table;
    }
    return betti_from_complex(build_complex(surface, weight, cap));
}

std::vector<BettiTable> betti_table_sweep(const SurfaceSpec& surface, int weight_max,
                                          std::uint64_t cap) {
    std::vector<BettiTable> tables;
    tables.reserve(static_cast<std::size_t>(weight_max) + 1);
    for (int m = 0; m <= weight_max; ++m) tables.push_back(betti(surface, m, cap));
    return tables;
}

std::vector<std::uint64_t> chain_to_row(const CellIndex& index, const Chain& c) {
    const std::size_t cols = index.cells(c.dimension).size();
    std::vector<std::uint64_t> row((cols + 63) / 64, 0);
    for (const CellTuple& t : c.support) {
        auto pos = index.find_in_dim(t);
        if (!pos)
            throw std::invalid_argument("chain_to_row: tuple not in index: " + t.to_string());
        row[*pos / 64] ^= std::uint64_t{1} << (*pos % 64);
    }
    return row;
}

Report verify_d_squared(const ChainComplex& complex) {
    Report report;
    const int m = complex.weight();
    for (int d = m + 2; d <= 2 * m; ++d) {
        const BitMatrix& outer = complex.boundary_from(d);
        const BitMatrix& inner = complex.boundary_from(d - 1);
        const BitMatrix product = multiply(outer, inner);
        bool zero = true;
        for (std::size_t r = 0; r < product.rows() && zero; ++r)
            zero = product.row_is_zero(r);
        report.add("d-squared dim=" + std::to_string(d), zero,
                   zero ? "" : "product of consecutive boundary matrices is nonzero");
    }
    return report;
}

} // namespace confhom
