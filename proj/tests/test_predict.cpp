#include <doctest.h>

#include "confhom/predict.hpp"
#include "confhom/surface.hpp"

#include <vector>

using namespace confhom;

namespace {

// Independent oracle: expand prod_j (1 - s^(2^j-1) t^(2^j))^(-1) * (1 - st)^(-r)
// as a truncated bivariate series, s tracking degree and t tracking weight.
// table[w][q] is the coefficient at weight w, degree q.
std::vector<std::vector<std::uint64_t>> monomial_series(int arc_count, int max_weight) {
    std::vector<std::vector<std::uint64_t>> table(
        static_cast<std::size_t>(max_weight) + 1,
        std::vector<std::uint64_t>(static_cast<std::size_t>(max_weight) + 1, 0));
    table[0][0] = 1;

    auto absorb_generator = [&](int dq, int dw) {
        // multiply by the geometric series on one generator of bidegree (dq, dw)
        for (int w = dw; w <= max_weight; ++w)
            for (int q = dq; q <= max_weight; ++q)
                table[static_cast<std::size_t>(w)][static_cast<std::size_t>(q)] +=
                    table[static_cast<std::size_t>(w - dw)][static_cast<std::size_t>(q - dq)];
    };

    for (int j = 0; (1 << j) <= max_weight; ++j)
        absorb_generator((1 << j) - 1, 1 << j);
    for (int k = 0; k < arc_count; ++k)
        absorb_generator(1, 1);
    return table;
}

} // namespace

TEST_CASE("monomial count examples") {
    CHECK(count_monomials(make_surface(0, 1), 3, 4) == 1); // Q^2 eps
    CHECK(count_monomials(make_surface(1, 1), 1, 2) == 3); // eps*u, eps*v, Q eps
    for (int m = 0; m <= 6; ++m) {
        CHECK(count_monomials(make_surface(0, 1), 0, m) == 1); // eps^m
        CHECK(count_monomials(make_surface(3, 1), 0, m) == 1);
    }
    CHECK(count_monomials(make_surface(0, 1), 5, 2) == 0); // degree above weight
}

TEST_CASE("monomial enumeration matches the count") {
    for (int g = 0; g <= 2; ++g)
        for (int n = 1; n <= 2; ++n)
            for (int m = 0; m <= 6; ++m) {
                const SurfaceSpec s = make_surface(g, n);
                for (int q = 0; q <= m; ++q) {
                    const auto list = enumerate_monomials(s, q, m);
                    CHECK(list.size() == count_monomials(s, q, m));
                    for (const MonomialSpec& mono : list) {
                        CHECK(mono.degree() == q);
                        CHECK(mono.weight() == m);
                        CHECK(mono.weight() >= mono.degree());
                    }
                }
            }
}

TEST_CASE("enumeration examples") {
    const auto sym2 = enumerate_monomials(make_surface(1, 1), 2, 2);
    REQUIRE(sym2.size() == 3); // u^2, uv, v^2
    for (const MonomialSpec& mono : sym2)
        CHECK(mono.alpha.empty());

    const auto q_eps = enumerate_monomials(make_surface(0, 1), 1, 2);
    REQUIRE(q_eps.size() == 1);
    CHECK(q_eps[0].alpha == std::vector<int>{0, 1});

    CHECK(enumerate_monomials(make_surface(0, 1), 5, 2).empty());
}

TEST_CASE("generating function identity") {
    for (int g = 0; g <= 2; ++g) {
        const SurfaceSpec s = make_surface(g, 1);
        const auto series = monomial_series(s.arc_count, 10);
        for (int m = 0; m <= 10; ++m)
            for (int q = 0; q <= m; ++q)
                CHECK(count_monomials(s, q, m) ==
                      series[static_cast<std::size_t>(m)][static_cast<std::size_t>(q)]);
    }
    const SurfaceSpec three_boundaries = make_surface(1, 3);
    const auto series = monomial_series(three_boundaries.arc_count, 8);
    for (int m = 0; m <= 8; ++m)
        for (int q = 0; q <= m; ++q)
            CHECK(count_monomials(three_boundaries, q, m) ==
                  series[static_cast<std::size_t>(m)][static_cast<std::size_t>(q)]);
}

TEST_CASE("top degree is the symmetric power dimension") {
    for (int g = 0; g <= 3; ++g)
        for (int n = 1; n <= 3; ++n) {
            const SurfaceSpec s = make_surface(g, n);
            const int r = s.arc_count;
            for (int m = 1; m <= 6; ++m) {
                // C(m + r - 1, r - 1)
                std::uint64_t expected = 1;
                for (int i = 1; i <= r - 1; ++i)
                    expected = expected * static_cast<std::uint64_t>(m + i) /
                               static_cast<std::uint64_t>(i);
                if (r == 0)
                    expected = 0; // no arc monomials can reach full degree
                CHECK(count_monomials(s, m, m) == expected);
            }
        }
}

TEST_CASE("counts grow with genus") {
    for (int m = 0; m <= 6; ++m)
        for (int q = 0; q <= m; ++q)
            for (int g = 0; g <= 3; ++g)
                CHECK(count_monomials(make_surface(g, 1), q, m) <=
                      count_monomials(make_surface(g + 1, 1), q, m));
}

TEST_CASE("comparison report on a known instance") {
    const Report report = compare(make_surface(1, 1), 2);
    CHECK(report.all_pass());
    REQUIRE(report.checks.size() == 3);
    CHECK(report.checks[1].label == "compare q=1 betti=3 predicted=3");
}

TEST_CASE("predicted_open mirrors count_monomials") {
    const SurfaceSpec s = make_surface(2, 1);
    const auto open = predicted_open(s, 5);
    REQUIRE(open.size() == 6);
    for (int q = 0; q <= 5; ++q)
        CHECK(open[static_cast<std::size_t>(q)] == count_monomials(s, q, 5));
}
