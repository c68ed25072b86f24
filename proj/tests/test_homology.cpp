#include <doctest.h>

#include "confhom/homology.hpp"
#include "confhom/predict.hpp"
#include "confhom/surface.hpp"

using namespace confhom;

namespace {

bool all_boundaries_zero(const ChainComplex& complex) {
    for (const BitMatrix& m : complex.boundaries)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!m.row_is_zero(r))
                return false;
    return true;
}

} // namespace

TEST_CASE("two points on the disc: a single even merge") {
    const ChainComplex complex = build_complex(make_surface(0, 1), 2);
    REQUIRE(complex.boundary_from(4).rows() == 1);
    REQUIRE(complex.boundary_from(4).cols() == 1);
    CHECK(all_boundaries_zero(complex));
    CHECK(betti_from_complex(complex).open == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("one point on the torus-with-boundary") {
    const ChainComplex complex = build_complex(make_surface(1, 1), 1);
    CHECK(complex.index.cells(1).size() == 2);
    CHECK(complex.index.cells(2).size() == 1);
    REQUIRE(complex.boundary_from(2).rows() == 1);
    REQUIRE(complex.boundary_from(2).cols() == 2);
    CHECK(all_boundaries_zero(complex));
    CHECK(betti(make_surface(1, 1), 1).open == std::vector<std::size_t>{1, 2});
}

TEST_CASE("one point on the disc") {
    const ChainComplex complex = build_complex(make_surface(0, 1), 1);
    CHECK(complex.index.total_cells() == 1);
    CHECK(betti_from_complex(complex).open == std::vector<std::size_t>{1, 0});
}

TEST_CASE("three points on the disc") {
    const BettiTable table = betti(make_surface(0, 1), 3);
    CHECK(table.open == std::vector<std::size_t>{1, 1, 0, 0});
    CHECK(table.compactified == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("hand-verified instance: two points, genus one") {
    const ChainComplex complex = build_complex(make_surface(1, 1), 2);
    CHECK(all_boundaries_zero(complex));
    const BettiTable table = betti_from_complex(complex);
    CHECK(table.open == std::vector<std::size_t>{1, 3, 3});
    CHECK(table.compactified == std::vector<std::size_t>{3, 3, 1});
    CHECK(table.cells_by_dim == std::vector<std::size_t>{3, 3, 1});
    CHECK(table.euler == 1);
}

TEST_CASE("weight zero is the one-point table") {
    const BettiTable table = betti(make_surface(2, 1), 0);
    CHECK(table.open == std::vector<std::size_t>{1});
    CHECK(table.compactified == std::vector<std::size_t>{1});
    CHECK(table.euler == 1);
}

TEST_CASE("sweeps") {
    const auto disc = betti_table_sweep(make_surface(0, 1), 4);
    REQUIRE(disc.size() == 5);
    CHECK(disc[0].open == std::vector<std::size_t>{1});
    CHECK(disc[1].open == std::vector<std::size_t>{1, 0});
    CHECK(disc[4].open == std::vector<std::size_t>{1, 1, 1, 1, 0});

    const auto genus2 = betti_table_sweep(make_surface(2, 1), 2);
    CHECK(genus2[2].open == std::vector<std::size_t>{1, 5, 10});
}

TEST_CASE("euler characteristic equals the alternating cell count") {
    for (int g = 0; g <= 2; ++g)
        for (int m = 1; m <= 5; ++m) {
            const SurfaceSpec s = make_surface(g, 1);
            const BettiTable table = betti(s, m);
            long long from_cells = 0;
            const CellIndex index = enumerate_cells(s, m);
            for (int d = index.min_dim(); d <= index.max_dim(); ++d) {
                const long long count = static_cast<long long>(index.cells(d).size());
                from_cells += d % 2 == 0 ? count : -count;
            }
            CHECK(table.euler == from_cells);
        }
}

TEST_CASE("top disc classes: one in degree 2^j - 1 at weight 2^j") {
    const SurfaceSpec disc = make_surface(0, 1);
    for (int j = 0; j <= 3; ++j) {
        const int m = 1 << j;
        const BettiTable table = betti(disc, m);
        CHECK(table.open_at(m - 1) == 1);
    }
}

TEST_CASE("connectedness: open degree zero is one") {
    for (int g = 0; g <= 2; ++g)
        for (int n = 1; n <= 2; ++n)
            for (int m = 0; m <= 4; ++m)
                CHECK(betti(make_surface(g, n), m).open_at(0) == 1);
}

TEST_CASE("computed Betti numbers match the monomial count, small range") {
    for (int g = 0; g <= 1; ++g)
        for (int n = 1; n <= 2; ++n)
            for (int m = 0; m <= 4; ++m) {
                const SurfaceSpec s = make_surface(g, n);
                const BettiTable table = betti(s, m);
                for (int q = 0; q <= m; ++q)
                    CHECK(table.open_at(q) == count_monomials(s, q, m));
            }
    // deeper disc sweep, where the differentials have large ranks
    const SurfaceSpec disc = make_surface(0, 1);
    for (int m = 5; m <= 12; ++m) {
        const BettiTable table = betti(disc, m);
        for (int q = 0; q <= m; ++q)
            CHECK(table.open_at(q) == count_monomials(disc, q, m));
    }
}

TEST_CASE("d squared on matrices, small range") {
    for (int g = 0; g <= 2; ++g)
        for (int m = 0; m <= 5; ++m)
            CHECK(verify_d_squared(build_complex(make_surface(g, 1), m)).all_pass());
}

TEST_CASE("chain_to_row round trip through the index") {
    const SurfaceSpec s = make_surface(1, 1);
    const CellIndex index = enumerate_cells(s, 2);
    Chain c;
    c.weight = 2;
    c.dimension = 3;
    c.support = {CellTuple{{1}, {0, 1}}, CellTuple{{2}, {0, 0}}};
    const auto row = chain_to_row(index, c);
    REQUIRE(row.size() == 1);
    int bits = 0;
    for (std::size_t i = 0; i < index.cells(3).size(); ++i)
        bits += (row[0] >> i) & 1u;
    CHECK(bits == 2);
}
