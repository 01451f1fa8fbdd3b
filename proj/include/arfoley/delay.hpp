#pragma once

// Staggered layout that lets one causal stream emit all K codebook layers:
// layer j is shifted right by j steps, so at step t layer j describes frame t - j.

#include <stdexcept>
#include <vector>

#include "arfoley/grid.hpp"

namespace arfoley::delay {

class MalformedStream : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Cell (j, t) of a K x (L + K - 1) delayed grid is padding iff t < j or t >= L + j.
inline bool is_mandated_pad(std::size_t j, std::size_t t, std::size_t L) { return t < j || t >= L + j; }

// Rejects grids holding values outside [0, D).
DelayedGrid apply_delay(const TokenGrid& grid, std::int32_t pad);
// Throws MalformedStream when padding is missing from, or present in, the wrong cells.
TokenGrid remove_delay(const DelayedGrid& delayed, std::int32_t pad);
std::vector<std::int32_t> step_view(const DelayedGrid& delayed, std::size_t t);

}  // namespace arfoley::delay
