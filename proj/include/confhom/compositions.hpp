#ifndef CONFHOM_COMPOSITIONS_HPP
#define CONFHOM_COMPOSITIONS_HPP

#include <vector>

namespace confhom {

// Iterative enumeration of weak compositions of `total` into `parts`
// nonnegative entries, in lexicographic order starting at (0,...,0,total).
// `parts == 0` yields the empty composition exactly when total == 0.
template <class Fn>
void for_each_weak_composition(int total, int parts, Fn&& fn) {
    if (parts == 0) {
        if (total == 0) {
            std::vector<int> empty;
            fn(static_cast<const std::vector<int>&>(empty));
        }
        return;
    }
    std::vector<int> c(static_cast<std::size_t>(parts), 0);
    c.back() = total;
    for (;;) {
        fn(static_cast<const std::vector<int>&>(c));
        // lex successor: bump the rightmost position that still has weight
        // strictly to its right, then park the remainder at the end.
        int i = parts - 2;
        int suffix = c[static_cast<std::size_t>(parts - 1)];
        while (i >= 0 && suffix == 0) {
            suffix += c[static_cast<std::size_t>(i)];
            --i;
        }
        if (i < 0)
            return;
        ++c[static_cast<std::size_t>(i)];
        int placed = 0;
        for (int j = 0; j <= i; ++j) placed += c[static_cast<std::size_t>(j)];
        for (int j = i + 1; j < parts - 1; ++j) c[static_cast<std::size_t>(j)] = 0;
        c[static_cast<std::size_t>(parts - 1)] = total - placed;
    }
}

// Iterative enumeration of vectors of `parts` entries >= 1 with sum <= max_sum,
// in lexicographic order starting at (1,...,1). Used for the line multiplicities
// x of a cell, where the leftover weight max_sum - sum(x) goes to the arcs.
template <class Fn>
void for_each_positive_bounded(int max_sum, int parts, Fn&& fn) {
    if (parts == 0) {
        std::vector<int> empty;
        fn(static_cast<const std::vector<int>&>(empty));
        return;
    }
    if (parts > max_sum)
        return;
    std::vector<int> x(static_cast<std::size_t>(parts), 1);
    for (;;) {
        fn(static_cast<const std::vector<int>&>(x));
        int prefix = 0;
        for (int j = 0; j < parts; ++j) prefix += x[static_cast<std::size_t>(j)];
        int i = parts - 1;
        // carry: find the rightmost slot that can grow once the tail resets to 1
        for (; i >= 0; --i) {
            prefix -= x[static_cast<std::size_t>(i)];
            int candidate = prefix + x[static_cast<std::size_t>(i)] + 1 + (parts - 1 - i);
            if (candidate <= max_sum)
                break;
        }
        if (i < 0)
            return;
        ++x[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < parts; ++j) x[static_cast<std::size_t>(j)] = 1;
    }
}

// Multiplicity vectors alpha with sum_j alpha_j * 2^j == total, enumerated with
// the weight packed into large powers first: (4), (2,2), (2,1,1), (1,1,1,1).
// alpha is indexed by j and has trailing zeros trimmed.
void enumerate_pow2_multiplicities(int total, std::vector<std::vector<int>>& out);

} // namespace confhom

#endif
