#pragma once

#include <cstddef>

namespace shrinker::simd {

// Hot loops of the numeric oracle. Coordinates are stored structure-of-arrays:
// coordinate c of sample i lives at data[c * n + i].
struct Kernels {
    const char* name;
    // scale each sample (row across `dim` arrays) to Euclidean length `radius`
    void (*normalize_rows)(double* data, std::size_t n, std::size_t dim, double radius);
    // value_i = prod_c data[c*n + i]^exps[c]; accumulate sum and sum of squares
    void (*monomial_moments)(const double* data, std::size_t n, const int* exps, std::size_t dim, double* sum,
                             double* sumsq);
    // sum_i w_i x_i
    double (*weighted_sum)(const double* w, const double* x, std::size_t n);
};

const Kernels& scalar_kernels();
// nullptr when the CPU (or the compiler) lacks AVX2+FMA
const Kernels* avx2_kernels();
// AVX2 when available unless SHRINKER_FORCE_SCALAR is set in the environment
const Kernels& active_kernels();

}  // namespace shrinker::simd
