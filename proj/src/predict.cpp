#include "confhom/predict.hpp"

#include <limits>
#include <sstream>

#include "confhom/compositions.hpp"
#include "confhom/homology.hpp"

namespace confhom {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    if (b > std::numeric_limits<std::uint64_t>::max() - a)
        return std::numeric_limits<std::uint64_t>::max();
    return a + b;
}

std::uint64_t binom_u64(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t next = sat_mul(result, static_cast<std::uint64_t>(n - k + i));
        if (next == std::numeric_limits<std::uint64_t>::max())
            return next;
        result = next / static_cast<std::uint64_t>(i);
    }
    return result;
}

// partitions of p into exactly `parts` powers of 2, by knapsack over the
// distinct powers
std::uint64_t pow2_partition_count(int p, int parts) {
    if (p < 0 || parts < 0)
        return 0;
    std::vector<std::vector<std::uint64_t>> ways(
        static_cast<std::size_t>(p) + 1,
        std::vector<std::uint64_t>(static_cast<std::size_t>(parts) + 1, 0));
    ways[0][0] = 1;
    for (int part = 1; part <= p; part <<= 1)
        for (int w = part; w <= p; ++w)
            for (int c = 1; c <= parts; ++c)
                ways[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)] = sat_add(
                    ways[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)],
                    ways[static_cast<std::size_t>(w - part)][static_cast<std::size_t>(c - 1)]);
    return ways[static_cast<std::size_t>(p)][static_cast<std::size_t>(parts)];
}

// compositions of t over the arcs; for no arcs only t == 0 contributes
std::uint64_t arc_monomial_count(int t, int arc_count) {
    if (arc_count == 0)
        return t == 0 ? 1 : 0;
    return binom_u64(t + arc_count - 1, arc_count - 1);
}

} // namespace

std::string MonomialSpec::to_string() const {
    std::ostringstream os;
    os << "alpha=[";
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (j) os << ',';
        os << alpha[j];
    }
    os << "] e=[";
    for (std::size_t k = 0; k < arc_exponents.size(); ++k) {
        if (k) os << ',';
        os << arc_exponents[k];
    }
    os << ']';
    return os.str();
}

std::uint64_t count_monomials(const SurfaceSpec& surface, int degree, int weight) {
    if (degree < 0 || weight < 0 || degree > weight)
        return 0;
    const int parts = weight - degree; // line count of the dual basis chain
    std::uint64_t total = 0;
    for (int p = parts; p <= weight; ++p)
        total = sat_add(total, sat_mul(pow2_partition_count(p, parts),
                                       arc_monomial_count(weight - p, surface.arc_count)));
    return total;
}

std::vector<MonomialSpec> enumerate_monomials(const SurfaceSpec& surface, int degree,
                                              int weight) {
    std::vector<MonomialSpec> out;
    if (degree < 0 || weight < 0 || degree > weight)
        return out;
    const int parts = weight - degree;
    for (int p = parts; p <= weight; ++p) {
        std::vector<std::vector<int>> alphas;
        enumerate_pow2_multiplicities(p, alphas);
        for (const auto& alpha : alphas) {
            int used = 0;
            for (int a : alpha) used += a;
            if (used != parts)
                continue;
            for_each_weak_composition(weight - p, surface.arc_count,
                                      [&](const std::vector<int>& e) {
                                          out.push_back(MonomialSpec{alpha, e});
                                      });
        }
    }
    return out;
}

std::vector<std::size_t> predicted_open(const SurfaceSpec& surface, int weight) {
    std::vector<std::size_t> open(static_cast<std::size_t>(weight) + 1, 0);
    for (int q = 0; q <= weight; ++q)
        open[static_cast<std::size_t>(q)] =
            static_cast<std::size_t>(count_monomials(surface, q, weight));
    return open;
}

Report compare(const SurfaceSpec& surface, int weight, std::uint64_t cap) {
    Report report;
    const BettiTable table = betti(surface, weight, cap);
    const std::vector<std::size_t> predicted = predicted_open(surface, weight);
    for (int q = 0; q <= weight; ++q) {
        const std::size_t computed = table.open_at(q);
        const std::size_t expected = predicted[static_cast<std::size_t>(q)];
        report.add("compare q=" + std::to_string(q) + " betti=" + std::to_string(computed) +
                       " predicted=" + std::to_string(expected),
                   computed == expected);
    }
    return report;
}

} // namespace confhom
