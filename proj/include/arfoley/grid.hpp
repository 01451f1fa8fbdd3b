#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace arfoley {

// Row-major integer matrix: rows are codebook layers, columns are frames or steps.
struct Grid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int32_t> cells;

    Grid() = default;
    Grid(std::size_t r, std::size_t c, std::int32_t fill = 0) : rows(r), cols(c), cells(r * c, fill) {}

    std::int32_t& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
    std::int32_t at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
    bool operator==(const Grid&) const = default;
};

// K x L codebook indices in [0, D).
using TokenGrid = Grid;
// K x (L + K - 1); layer j is shifted right by j, vacant cells hold PAD = D.
using DelayedGrid = Grid;

}  // namespace arfoley
