#pragma once

#include <vector>

#include "wha/hopfcore.hpp"
#include "wha/modalg.hpp"

namespace wha::testing {

inline HopfData kZ2() { return group_algebra(cyclic_group(2)); }
inline HopfData kS3() { return group_algebra(symmetric_group_s3()); }
inline HopfData k1() { return group_algebra(trivial_group()); }

/// S3 permuting three points: S3 element images as listed by symmetric_group_s3.
inline std::vector<std::vector<std::size_t>> s3_on_three_points() {
    return {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
}

inline ModuleAlgebraData k3_over_s3() { return permutation_module_algebra(symmetric_group_s3(), s3_on_three_points()); }

/// kZ2 swapping the two idempotents of k^2.
inline ModuleAlgebraData k2_over_z2() { return permutation_module_algebra(cyclic_group(2), {{0, 1}, {1, 0}}); }

inline Vec e(std::size_t n, std::size_t i) { return unit_vec(n, i); }

inline TensorElem two_leg(std::size_t n, std::size_t i, std::size_t j, Rat c = Rat(1)) {
    TensorElem t({n, n});
    t.at2(i, j) = c;
    return t;
}

/// Kernel dimension of the commutator maps x -> xb - bx for all basis b.
inline std::size_t center_dim(const StructureAlgebra& a) {
    const std::size_t n = a.dim;
    Mat sys(n * n, n);
    for (std::size_t b = 0; b < n; ++b) {
        Mat d = a.right_mult(unit_vec(n, b)) - a.left_mult(unit_vec(n, b));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) sys(b * n + r, c) = d(r, c);
    }
    return kernel_basis(sys).size();
}

}  // namespace wha::testing
