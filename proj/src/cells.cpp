#include "confhom/cells.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "confhom/compositions.hpp"

namespace confhom {

const std::vector<CellTuple> CellIndex::empty_{};

std::string CellTuple::to_string() const {
    std::ostringstream os;
    os << "l=" << line_count() << " x=[";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) os << ',';
        os << lines[i];
    }
    os << "] s=[";
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (i) os << ',';
        os << arcs[i];
    }
    os << ']';
    return os.str();
}

CellIndex::CellIndex(SurfaceSpec surface, int weight,
                     std::vector<std::vector<CellTuple>> by_dim)
    : surface_(std::move(surface)), weight_(weight), by_dim_(std::move(by_dim)) {
    dim_offset_.resize(by_dim_.size() + 1, 0);
    for (std::size_t i = 0; i < by_dim_.size(); ++i)
        dim_offset_[i + 1] = dim_offset_[i] + by_dim_[i].size();
    total_ = dim_offset_.back();
}

const std::vector<CellTuple>& CellIndex::cells(int dim) const {
    if (dim < min_dim() || dim > max_dim())
        return empty_;
    return by_dim_[static_cast<std::size_t>(dim - weight_)];
}

std::optional<std::size_t> CellIndex::find_in_dim(const CellTuple& t) const {
    const auto& list = cells(t.dimension());
    auto it = std::lower_bound(list.begin(), list.end(), t);
    if (it == list.end() || !(*it == t))
        return std::nullopt;
    return static_cast<std::size_t>(it - list.begin());
}

std::size_t CellIndex::global_index(const CellTuple& t) const {
    auto local = find_in_dim(t);
    if (!local)
        throw std::invalid_argument("CellIndex: tuple not in index: " + t.to_string());
    return dim_offset_[static_cast<std::size_t>(t.dimension() - weight_)] + *local;
}

const CellTuple& CellIndex::tuple_at(std::size_t global_id) const {
    if (global_id >= total_)
        throw std::out_of_range("CellIndex: global id out of range");
    auto it = std::upper_bound(dim_offset_.begin(), dim_offset_.end(), global_id);
    std::size_t d = static_cast<std::size_t>(it - dim_offset_.begin()) - 1;
    return by_dim_[d][global_id - dim_offset_[d]];
}

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

// C(n, k) saturating at UINT64_MAX
std::uint64_t binom_u64(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // multiply first, divide by i afterwards; the running value is a
        // binomial coefficient so the division is exact unless saturated
        std::uint64_t next = sat_mul(result, static_cast<std::uint64_t>(n - k + i));
        if (next == std::numeric_limits<std::uint64_t>::max())
            return next;
        result = next / static_cast<std::uint64_t>(i);
    }
    return result;
}

// compositions of t into `parts` nonnegative entries; empty composition for parts == 0
std::uint64_t weak_composition_count(int t, int parts) {
    if (parts == 0)
        return t == 0 ? 1 : 0;
    return binom_u64(t + parts - 1, parts - 1);
}

// compositions of p into `parts` positive entries
std::uint64_t positive_composition_count(int p, int parts) {
    if (parts == 0)
        return p == 0 ? 1 : 0;
    return binom_u64(p - 1, parts - 1);
}

} // namespace

std::uint64_t cell_count(const SurfaceSpec& surface, int weight, int dim) {
    const int l = dim - weight;
    if (l < 0 || l > weight)
        return 0;
    std::uint64_t count = 0;
    for (int p = l; p <= weight; ++p)
        count = sat_add(count, sat_mul(positive_composition_count(p, l),
                                       weak_composition_count(weight - p, surface.arc_count)));
    return count;
}

std::uint64_t total_cell_count(const SurfaceSpec& surface, int weight) {
    std::uint64_t count = 0;
    for (int d = weight; d <= 2 * weight; ++d)
        count = sat_add(count, cell_count(surface, weight, d));
    return count;
}

CellIndex enumerate_cells(const SurfaceSpec& surface, int weight, std::uint64_t cap) {
    if (weight < 0)
        throw std::invalid_argument("enumerate_cells: weight must be >= 0");

    const std::uint64_t total = total_cell_count(surface, weight);
    if (total > cap)
        throw ResourceLimitError(surface.genus, surface.boundaries, weight, total, cap);

    const int r = surface.arc_count;
    std::vector<std::vector<CellTuple>> by_dim(static_cast<std::size_t>(weight) + 1);

    // dimension = weight + l, so one line count l per dimension slot; the
    // nested lex enumerations land each list already in canonical order
    for (int l = 0; l <= weight; ++l) {
        auto& bucket = by_dim[static_cast<std::size_t>(l)];
        bucket.reserve(static_cast<std::size_t>(cell_count(surface, weight, weight + l)));
        for_each_positive_bounded(weight, l, [&](const std::vector<int>& x) {
            int p = 0;
            for (int xi : x) p += xi;
            for_each_weak_composition(weight - p, r, [&](const std::vector<int>& s) {
                bucket.push_back(CellTuple{x, s});
            });
        });
    }
    return CellIndex(surface, weight, std::move(by_dim));
}

} // namespace confhom
