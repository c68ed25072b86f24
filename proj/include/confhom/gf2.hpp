#ifndef CONFHOM_GF2_HPP
#define CONFHOM_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace confhom {

// Dense GF(2) matrix, row-major, 64 bits per word. Padding bits past `cols`
// stay zero so whole-word XOR and popcount need no masking.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          data_(rows * words_per_row_, 0) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (word(r, c / 64) >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value) {
        std::uint64_t& w = data_[r * words_per_row_ + c / 64];
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        if (value)
            w |= mask;
        else
            w &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * words_per_row_ + c / 64] ^= std::uint64_t{1} << (c % 64);
    }

    // row_to ^= row_from
    void xor_row(std::size_t row_to, std::size_t row_from);
    // dst ^= row `r`; dst must hold words_per_row() words
    void xor_into(std::uint64_t* dst, std::size_t r) const;

    bool row_is_zero(std::size_t r) const;
    // column of the lowest set bit of row r, or cols() when the row is zero
    std::size_t row_lowest_bit(std::size_t r) const;

    void swap_rows(std::size_t a, std::size_t b);

    BitMatrix transposed() const;

    // rows of `top` followed by rows of `bottom`; column counts must match
    static BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom);

    std::size_t words_per_row() const { return words_per_row_; }
    const std::uint64_t* row_data(std::size_t r) const {
        return data_.data() + r * words_per_row_;
    }
    std::uint64_t* row_data(std::size_t r) { return data_.data() + r * words_per_row_; }

    bool operator==(const BitMatrix& other) const = default;

private:
    std::uint64_t word(std::size_t r, std::size_t w) const {
        return data_[r * words_per_row_ + w];
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

// Row echelon basis kept in increasing pivot order; incremental insertion
// backs rank, membership and quotient-rank queries.
class Gf2Echelon {
public:
    explicit Gf2Echelon(std::size_t cols) : cols_(cols) {}

    // reduces `row` (cols_ bits, word-packed) against the basis; if nonzero
    // remains, absorbs it and returns true
    bool insert(std::vector<std::uint64_t> row);
    bool insert_row_of(const BitMatrix& m, std::size_t r);

    // does v lie in the span? v given as word-packed bits
    bool contains(std::vector<std::uint64_t> row) const;

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }

private:
    std::size_t reduce(std::vector<std::uint64_t>& row) const; // returns pivot or cols_

    std::size_t cols_;
    std::vector<std::size_t> pivots_;                 // increasing
    std::vector<std::vector<std::uint64_t>> basis_;   // parallel to pivots_
};

std::size_t rank(const BitMatrix& m);

// dim of the image of row-space(V) in the quotient by row-space(W):
// rank(stack(V, W)) - rank(W). Column counts must match.
std::size_t rank_of_span_in_quotient(const BitMatrix& V, const BitMatrix& W);

// is v (packed, cols bits) in the row space of W?
bool solve_membership(const std::vector<std::uint64_t>& v, const BitMatrix& W);

// GF(2) product: rows of A combined by the rows of B; A.cols() == B.rows()
BitMatrix multiply(const BitMatrix& A, const BitMatrix& B);

} // namespace confhom

#endif
