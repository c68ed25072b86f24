#include "confhom/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace confhom {

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::xor_row(std::size_t row_to, std::size_t row_from) {
    std::uint64_t* dst = row_data(row_to);
    const std::uint64_t* src = row_data(row_from);
    for (std::size_t w = 0; w < words_per_row_; ++w) dst[w] ^= src[w];
}

void BitMatrix::xor_into(std::uint64_t* dst, std::size_t r) const {
    const std::uint64_t* src = row_data(r);
    for (std::size_t w = 0; w < words_per_row_; ++w) dst[w] ^= src[w];
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    const std::uint64_t* src = row_data(r);
    for (std::size_t w = 0; w < words_per_row_; ++w)
        if (src[w])
            return false;
    return true;
}

std::size_t BitMatrix::row_lowest_bit(std::size_t r) const {
    const std::uint64_t* src = row_data(r);
    for (std::size_t w = 0; w < words_per_row_; ++w)
        if (src[w])
            return w * 64 + static_cast<std::size_t>(std::countr_zero(src[w]));
    return cols_;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    std::swap_ranges(row_data(a), row_data(a) + words_per_row_, row_data(b));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* src = row_data(r);
        for (std::size_t w = 0; w < words_per_row_; ++w) {
            std::uint64_t bits = src[w];
            while (bits) {
                const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                t.set(c, r, true);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::stack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols_ != bottom.cols_)
        throw std::invalid_argument("BitMatrix::stack: column mismatch");
    BitMatrix out(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
    return out;
}

std::size_t Gf2Echelon::reduce(std::vector<std::uint64_t>& row) const {
    for (;;) {
        std::size_t lowest = cols_;
        for (std::size_t w = 0; w < row.size(); ++w)
            if (row[w]) {
                lowest = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
                break;
            }
        if (lowest == cols_)
            return cols_;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lowest);
        if (it == pivots_.end() || *it != lowest)
            return lowest;
        const auto& basis_row = basis_[static_cast<std::size_t>(it - pivots_.begin())];
        for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= basis_row[w];
    }
}

bool Gf2Echelon::insert(std::vector<std::uint64_t> row) {
    const std::size_t pivot = reduce(row);
    if (pivot == cols_)
        return false;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, pivot);
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    return true;
}

bool Gf2Echelon::insert_row_of(const BitMatrix& m, std::size_t r) {
    std::vector<std::uint64_t> row(m.row_data(r), m.row_data(r) + m.words_per_row());
    return insert(std::move(row));
}

bool Gf2Echelon::contains(std::vector<std::uint64_t> row) const {
    return reduce(row) == cols_;
}

std::size_t rank(const BitMatrix& m) {
    Gf2Echelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert_row_of(m, r);
    return e.rank();
}

std::size_t rank_of_span_in_quotient(const BitMatrix& V, const BitMatrix& W) {
    if (V.cols() != W.cols())
        throw std::invalid_argument("rank_of_span_in_quotient: column mismatch");
    Gf2Echelon e(W.cols());
    for (std::size_t r = 0; r < W.rows(); ++r) e.insert_row_of(W, r);
    const std::size_t rank_w = e.rank();
    for (std::size_t r = 0; r < V.rows(); ++r) e.insert_row_of(V, r);
    return e.rank() - rank_w;
}

bool solve_membership(const std::vector<std::uint64_t>& v, const BitMatrix& W) {
    Gf2Echelon e(W.cols());
    for (std::size_t r = 0; r < W.rows(); ++r) e.insert_row_of(W, r);
    return e.contains(v);
}

BitMatrix multiply(const BitMatrix& A, const BitMatrix& B) {
    if (A.cols() != B.rows())
        throw std::invalid_argument("multiply: inner dimension mismatch");
    BitMatrix out(A.rows(), B.cols());
    for (std::size_t r = 0; r < A.rows(); ++r) {
        std::uint64_t* dst = out.row_data(r);
        const std::uint64_t* src = A.row_data(r);
        for (std::size_t w = 0; w < A.words_per_row(); ++w) {
            std::uint64_t bits = src[w];
            while (bits) {
                const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                B.xor_into(dst, k);
                bits &= bits - 1;
            }
        }
    }
    return out;
}

} // namespace confhom
