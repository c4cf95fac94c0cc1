#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

namespace swamp::zorder {

// Morton code of a cell within one 2^n x 2^n grid: bits of the column index i
// occupy even positions, bits of the row index j occupy odd positions.
using Morton = std::uint32_t;

// Index of a cell within the level-stacked hierarchy (all levels concatenated
// coarse to fine, each level in Morton order).
using ZIndex = std::uint32_t;

enum class Direction : std::uint8_t { West = 0, East = 1, North = 2, South = 3 };

inline constexpr int kMaxLevel = 13;  // keeps every z-index below 2^28

// Spreads the low 14 bits of x into the even bit positions of the result.
constexpr std::uint32_t spread_bits(std::uint32_t x) {
    x &= 0x00003fffu;
    x = (x | (x << 8)) & 0x00ff00ffu;
    x = (x | (x << 4)) & 0x0f0f0f0fu;
    x = (x | (x << 2)) & 0x33333333u;
    x = (x | (x << 1)) & 0x55555555u;
    return x;
}

// Inverse of spread_bits: gathers the even bit positions of x.
constexpr std::uint32_t compact_bits(std::uint32_t x) {
    x &= 0x55555555u;
    x = (x | (x >> 1)) & 0x33333333u;
    x = (x | (x >> 2)) & 0x0f0f0f0fu;
    x = (x | (x >> 4)) & 0x00ff00ffu;
    x = (x | (x >> 8)) & 0x0000ffffu;
    return x;
}

constexpr Morton interleave(std::uint32_t i, std::uint32_t j) {
    return spread_bits(i) | (spread_bits(j) << 1);
}

constexpr std::pair<std::uint32_t, std::uint32_t> deinterleave(Morton code) {
    return {compact_bits(code), compact_bits(code >> 1)};
}

inline Morton morton_encode(std::uint32_t i, std::uint32_t j, int level) {
    if (level < 0 || level > kMaxLevel)
        throw std::out_of_range("morton_encode: level out of range");
    const std::uint32_t side = 1u << level;
    if (i >= side || j >= side)
        throw std::out_of_range("morton_encode: cell index outside 2^level grid");
    return interleave(i, j);
}

inline std::pair<std::uint32_t, std::uint32_t> morton_decode(Morton code, int level) {
    if (level < 0 || level > kMaxLevel)
        throw std::out_of_range("morton_decode: level out of range");
    if (code >= (1u << (2 * level)))
        throw std::out_of_range("morton_decode: code outside 4^level range");
    return deinterleave(code);
}

// Number of cells on all levels coarser than n: (4^n - 1)/3.
constexpr ZIndex level_offset(int n) {
    return ((1u << (2 * n)) - 1u) / 3u;
}

constexpr ZIndex z_of(int n, Morton m) { return level_offset(n) + m; }

constexpr Morton morton_of(int n, ZIndex z) { return z - level_offset(n); }

// Total cell count of a hierarchy with finest level L.
constexpr std::size_t hierarchy_cells(int L) { return level_offset(L + 1); }

// Cells that carry details, i.e. levels 0..L-1.
constexpr std::size_t detail_cells(int L) { return level_offset(L); }

constexpr int level_of(ZIndex z) {
    int n = 0;
    while (level_offset(n + 1) <= z) ++n;
    return n;
}

// Children are contiguous: child k of (n, m) sits at offset(n+1) + 4m + k.
constexpr ZIndex child_z(int n, Morton m, int k) {
    return level_offset(n + 1) + 4 * m + static_cast<Morton>(k);
}

inline std::array<ZIndex, 4> child_z_indices(int n, Morton m, int L) {
    if (n < 0 || n >= L)
        throw std::out_of_range("child_z_indices: cell has no children below level L");
    return {child_z(n, m, 0), child_z(n, m, 1), child_z(n, m, 2), child_z(n, m, 3)};
}

inline ZIndex parent_z_index(int n, Morton m) {
    if (n <= 0) throw std::out_of_range("parent_z_index: root has no parent");
    return level_offset(n - 1) + m / 4;
}

// First finest-level Morton code covered by cell (n, m) of an L-level hierarchy,
// and the length of the covered (contiguous) Morton interval.
constexpr Morton finest_under(int n, Morton m, int L) {
    return m << (2 * (L - n));
}
constexpr std::uint32_t cells_under(int n, int L) { return 1u << (2 * (L - n)); }

// Same-level face neighbour; empty when the shift leaves the 2^n x 2^n grid.
inline std::optional<Morton> same_level_neighbour(int n, Morton m, Direction dir) {
    auto [i, j] = deinterleave(m);
    const std::uint32_t side = 1u << n;
    switch (dir) {
        case Direction::West:
            if (i == 0) return std::nullopt;
            return interleave(i - 1, j);
        case Direction::East:
            if (i + 1 >= side) return std::nullopt;
            return interleave(i + 1, j);
        case Direction::North:
            if (j + 1 >= side) return std::nullopt;
            return interleave(i, j + 1);
        case Direction::South:
            if (j == 0) return std::nullopt;
            return interleave(i, j - 1);
    }
    return std::nullopt;
}

}  // namespace swamp::zorder
