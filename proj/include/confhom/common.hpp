#ifndef CONFHOM_COMMON_HPP
#define CONFHOM_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace confhom {

// Version string baked into cache keys; bump when the cell ordering or the
// serialization schema changes.
inline constexpr const char* kCodeVersion = "confhom-1";

// Default guard on the total number of cells of one complex.
inline constexpr std::uint64_t kDefaultCellCap = std::uint64_t{1} << 24;

// Thrown when an instance would exceed the configured cell cap.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(int genus, int boundaries, int points, std::uint64_t count,
                       std::uint64_t cap)
        : std::runtime_error("instance too large: g=" + std::to_string(genus) +
                             " n=" + std::to_string(boundaries) +
                             " m=" + std::to_string(points) + " needs " +
                             std::to_string(count) + " cells, cap is " +
                             std::to_string(cap)),
          genus(genus), boundaries(boundaries), points(points) {}

    int genus;
    int boundaries;
    int points;
};

} // namespace confhom

#endif
