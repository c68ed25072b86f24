#include <doctest.h>

#include "confhom/gf2.hpp"
#include "confhom/homology.hpp"
#include "confhom/surface.hpp"

#include <random>
#include <stdexcept>

using namespace confhom;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t seed) {
    std::mt19937 rng(seed);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1u)
                m.set(r, c, true);
    return m;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(BitMatrix::identity(5)) == 5);
    CHECK(rank(BitMatrix(3, 7)) == 0);
    CHECK(rank(BitMatrix(0, 4)) == 0);
    CHECK(rank(BitMatrix(4, 0)) == 0);
}

TEST_CASE("the dim-5 differential of the 3-point disc has rank 1") {
    const ChainComplex complex = build_complex(make_surface(0, 1), 3);
    const BitMatrix& d5 = complex.boundary_from(5);
    REQUIRE(d5.rows() == 2);
    REQUIRE(d5.cols() == 1);
    CHECK(d5.get(0, 0));
    CHECK(d5.get(1, 0));
    CHECK(rank(d5) == 1);
}

TEST_CASE("rank equals rank of the transpose") {
    for (std::uint32_t seed = 1; seed <= 3; ++seed) {
        for (std::size_t size : {17u, 64u, 130u, 512u}) {
            const BitMatrix m = random_matrix(size, size / 2 + 3, seed * 97 + size);
            CHECK(rank(m) == rank(m.transposed()));
        }
    }
}

TEST_CASE("rank is invariant under row operations") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix m = random_matrix(40, 60, rng());
        const std::size_t before = rank(m);
        m.swap_rows(rng() % 40, rng() % 40);
        std::size_t a = rng() % 40, b = rng() % 40;
        if (a != b)
            m.xor_row(a, b);
        CHECK(rank(m) == before);
    }
}

TEST_CASE("quotient rank identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const BitMatrix v = random_matrix(12, 30, rng());
        const BitMatrix w = random_matrix(9, 30, rng());
        CHECK(rank_of_span_in_quotient(v, w) + rank(w) == rank(BitMatrix::stack(v, w)));
    }
}

TEST_CASE("quotient rank examples") {
    CHECK(rank_of_span_in_quotient(BitMatrix::identity(2), BitMatrix(1, 2)) == 2);

    BitMatrix w(1, 3);
    w.set(0, 1, true); // e2
    CHECK(rank_of_span_in_quotient(w, w) == 0);

    BitMatrix v(1, 3);
    v.set(0, 0, true);
    v.set(0, 1, true); // e1 + e2
    CHECK(rank_of_span_in_quotient(v, w) == 1);

    CHECK_THROWS_AS(rank_of_span_in_quotient(BitMatrix(1, 3), BitMatrix(1, 4)),
                    std::invalid_argument);
}

TEST_CASE("membership") {
    BitMatrix w(2, 3);
    w.set(0, 0, true); // e1
    w.set(1, 1, true); // e2
    CHECK(solve_membership({0}, w));

    BitMatrix only_e2(1, 3);
    only_e2.set(0, 1, true);
    CHECK_FALSE(solve_membership({0b001}, only_e2)); // e1
    CHECK(solve_membership({0b011}, w));             // e1 + e2
}

TEST_CASE("multiply agrees with bitwise definition") {
    std::mt19937 rng(11);
    const BitMatrix a = random_matrix(9, 14, rng());
    const BitMatrix b = random_matrix(14, 21, rng());
    const BitMatrix p = multiply(a, b);
    REQUIRE(p.rows() == 9);
    REQUIRE(p.cols() == 21);
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 21; ++c) {
            bool bit = false;
            for (std::size_t k = 0; k < 14; ++k) bit ^= a.get(r, k) && b.get(k, c);
            CHECK(p.get(r, c) == bit);
        }
}

TEST_CASE("padding stays clear after stacking and transposing") {
    BitMatrix m(3, 70);
    m.set(0, 69, true);
    m.set(2, 0, true);
    const BitMatrix t = m.transposed();
    CHECK(t.get(69, 0));
    CHECK(t.get(0, 2));
    const BitMatrix s = BitMatrix::stack(m, m);
    CHECK(rank(s) == rank(m));
}
