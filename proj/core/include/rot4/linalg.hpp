#pragma once

#include <vector>

#include "rot4/matrix4.hpp"

namespace rot4 {

struct Elimination {
    int rank = 0;
    // One basis vector per free column, in the order the free columns were left.
    std::vector<Quaternion> kernel;
};

/// Gauss-Jordan elimination with full pivoting. Stops when the largest
/// remaining entry is below `pivot_threshold` (absolute) or after `max_rank`
/// pivots, whichever comes first; every column not used as a pivot spans one
/// kernel vector.
[[nodiscard]] Elimination eliminate(const Matrix4& a, double pivot_threshold, int max_rank = 4);

/// Rank with the pivot threshold taken relative to the largest row norm.
[[nodiscard]] int rank(const Matrix4& a, double relative_threshold);

}  // namespace rot4
