#include "shrinker/simd.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define SHRINKER_HAVE_AVX2_PATH 1
#include <immintrin.h>
#else
#define SHRINKER_HAVE_AVX2_PATH 0
#endif

#include <cmath>

namespace shrinker::simd {

#if SHRINKER_HAVE_AVX2_PATH

namespace {

#define AVX2_FN __attribute__((target("avx2,fma")))

AVX2_FN double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v), hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

AVX2_FN void normalize_rows_avx2(double* data, std::size_t n, std::size_t dim, double radius) {
    std::size_t i = 0;
    const __m256d r = _mm256_set1_pd(radius);
    for (; i + 4 <= n; i += 4) {
        __m256d ss = _mm256_setzero_pd();
        for (std::size_t c = 0; c < dim; ++c) {
            __m256d x = _mm256_loadu_pd(data + c * n + i);
            ss = _mm256_fmadd_pd(x, x, ss);
        }
        __m256d scale = _mm256_div_pd(r, _mm256_sqrt_pd(ss));
        for (std::size_t c = 0; c < dim; ++c) {
            double* p = data + c * n + i;
            _mm256_storeu_pd(p, _mm256_mul_pd(_mm256_loadu_pd(p), scale));
        }
    }
    for (; i < n; ++i) {
        double ss = 0;
        for (std::size_t c = 0; c < dim; ++c) ss += data[c * n + i] * data[c * n + i];
        double scale = radius / std::sqrt(ss);
        for (std::size_t c = 0; c < dim; ++c) data[c * n + i] *= scale;
    }
}

AVX2_FN void monomial_moments_avx2(const double* data, std::size_t n, const int* exps, std::size_t dim, double* sum,
                                   double* sumsq) {
    __m256d s = _mm256_setzero_pd(), q = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_set1_pd(1.0);
        for (std::size_t c = 0; c < dim; ++c) {
            if (!exps[c]) continue;
            __m256d x = _mm256_loadu_pd(data + c * n + i);
            for (int p = 0; p < exps[c]; ++p) v = _mm256_mul_pd(v, x);
        }
        s = _mm256_add_pd(s, v);
        q = _mm256_fmadd_pd(v, v, q);
    }
    double ts = hsum(s), tq = hsum(q);
    for (; i < n; ++i) {
        double v = 1;
        for (std::size_t c = 0; c < dim; ++c)
            for (int p = 0; p < exps[c]; ++p) v *= data[c * n + i];
        ts += v;
        tq += v * v;
    }
    *sum += ts;
    *sumsq += tq;
}

AVX2_FN double weighted_sum_avx2(const double* w, const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(x + i), acc);
    double out = hsum(acc);
    for (; i < n; ++i) out += w[i] * x[i];
    return out;
}

}  // namespace

const Kernels* avx2_kernels() {
    static const Kernels k{"avx2", normalize_rows_avx2, monomial_moments_avx2, weighted_sum_avx2};
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok ? &k : nullptr;
}

#else

const Kernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace shrinker::simd
