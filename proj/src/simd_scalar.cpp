#include "shrinker/simd.hpp"

#include <cmath>
#include <cstdlib>

namespace shrinker::simd {

namespace {

void normalize_rows_scalar(double* data, std::size_t n, std::size_t dim, double radius) {
    for (std::size_t i = 0; i < n; ++i) {
        double ss = 0;
        for (std::size_t c = 0; c < dim; ++c) ss += data[c * n + i] * data[c * n + i];
        double scale = radius / std::sqrt(ss);
        for (std::size_t c = 0; c < dim; ++c) data[c * n + i] *= scale;
    }
}

void monomial_moments_scalar(const double* data, std::size_t n, const int* exps, std::size_t dim, double* sum,
                             double* sumsq) {
    double s = 0, q = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = 1;
        for (std::size_t c = 0; c < dim; ++c)
            for (int p = 0; p < exps[c]; ++p) v *= data[c * n + i];
        s += v;
        q += v * v;
    }
    *sum += s;
    *sumsq += q;
}

double weighted_sum_scalar(const double* w, const double* x, std::size_t n) {
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * x[i];
    return acc;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", normalize_rows_scalar, monomial_moments_scalar, weighted_sum_scalar};
    return k;
}

const Kernels& active_kernels() {
    static const Kernels& k = [&]() -> const Kernels& {
        if (std::getenv("SHRINKER_FORCE_SCALAR")) return scalar_kernels();
        if (const Kernels* v = avx2_kernels()) return *v;
        return scalar_kernels();
    }();
    return k;
}

}  // namespace shrinker::simd
