#include "confhom/compositions.hpp"

namespace confhom {

namespace {

void emit_pow2(int j, int remaining, std::vector<int>& alpha,
               std::vector<std::vector<int>>& out) {
    if (j == 0) {
        // parts of size 2^0 = 1 absorb whatever is left
        alpha[0] = remaining;
        std::vector<int> trimmed = alpha;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        out.push_back(std::move(trimmed));
        alpha[0] = 0;
        return;
    }
    const int part = 1 << j;
    for (int a = remaining / part; a >= 0; --a) {
        alpha[static_cast<std::size_t>(j)] = a;
        emit_pow2(j - 1, remaining - a * part, alpha, out);
    }
    alpha[static_cast<std::size_t>(j)] = 0;
}

} // namespace

void enumerate_pow2_multiplicities(int total, std::vector<std::vector<int>>& out) {
    out.clear();
    if (total == 0) {
        out.emplace_back();
        return;
    }
    int maxj = 0;
    while ((1 << (maxj + 1)) <= total) ++maxj;
    std::vector<int> alpha(static_cast<std::size_t>(maxj) + 1, 0);
    emit_pow2(maxj, total, alpha, out);
}

} // namespace confhom
