#include "rot4/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace rot4 {

Elimination eliminate(const Matrix4& a, double pivot_threshold, int max_rank) {
    auto work = a.m;
    std::array<int, 4> col_of{};
    std::iota(col_of.begin(), col_of.end(), 0);

    int rank = 0;
    const int limit = std::clamp(max_rank, 0, 4);
    for (int k = 0; k < limit; ++k) {
        int pr = k;
        int pc = k;
        double best = -1.0;
        for (int r = k; r < 4; ++r) {
            for (int c = k; c < 4; ++c) {
                if (std::abs(work[r][c]) > best) {
                    best = std::abs(work[r][c]);
                    pr = r;
                    pc = c;
                }
            }
        }
        if (best < pivot_threshold) break;

        std::swap(work[k], work[pr]);
        if (pc != k) {
            for (auto& row : work) std::swap(row[k], row[pc]);
            std::swap(col_of[k], col_of[pc]);
        }
        const double piv = work[k][k];
        for (double& x : work[k]) x /= piv;
        for (int r = 0; r < 4; ++r) {
            if (r == k) continue;
            const double f = work[r][k];
            if (f == 0.0) continue;
            for (int c = 0; c < 4; ++c) work[r][c] -= f * work[k][c];
        }
        ++rank;
    }

    Elimination out;
    out.rank = rank;
    for (int free = rank; free < 4; ++free) {
        std::array<double, 4> x{};
        x[col_of[free]] = 1.0;
        for (int p = 0; p < rank; ++p) x[col_of[p]] = -work[p][free];
        out.kernel.push_back(Quaternion::from_components(x));
    }
    return out;
}

int rank(const Matrix4& a, double relative_threshold) {
    double largest = 0.0;
    for (int r = 0; r < 4; ++r) largest = std::max(largest, norm(a.row(r)));
    if (largest == 0.0) return 0;
    return eliminate(a, relative_threshold * largest).rank;
}

}  // namespace rot4
