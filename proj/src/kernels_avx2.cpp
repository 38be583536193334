// Compiled with -mavx2; only reached after a runtime CPUID check.

#include <immintrin.h>

#include <cmath>

#include "starprof/kernels.hpp"

namespace starprof::kernels {

namespace {

inline __m256d abs_pd(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double l1_distance_avx2(const double* a, const double* b, std::size_t len) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        acc0 = _mm256_add_pd(acc0, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i))));
        acc1 = _mm256_add_pd(acc1, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4))));
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < len; ++i) s += std::fabs(a[i] - b[i]);
    return s;
}

double l1_deviation_avx2(const double* a, double c, std::size_t len) {
    const __m256d cv = _mm256_set1_pd(c);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        acc0 = _mm256_add_pd(acc0, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(a + i), cv)));
        acc1 = _mm256_add_pd(acc1, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(a + i + 4), cv)));
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < len; ++i) s += std::fabs(a[i] - c);
    return s;
}

void rotate_pair_avx2(double* x, double* y, double c, double s, std::size_t len) {
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sv = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d yv = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(x + i, _mm256_sub_pd(_mm256_mul_pd(cv, xv), _mm256_mul_pd(sv, yv)));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_mul_pd(sv, xv), _mm256_mul_pd(cv, yv)));
    }
    for (; i < len; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

void csr_matvec_avx2(const std::int64_t* row_ptr, const std::int32_t* cols,
                     const std::int32_t* weights, const double* x, double* y,
                     std::size_t rows, double inv_scale) {
    for (std::size_t r = 0; r < rows; ++r) {
        std::int64_t k = row_ptr[r];
        const std::int64_t end = row_ptr[r + 1];
        __m256d acc = _mm256_setzero_pd();
        for (; k + 4 <= end; k += 4) {
            const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cols + k));
            const __m128i w = _mm_loadu_si128(reinterpret_cast<const __m128i*>(weights + k));
            const __m256d xv = _mm256_i32gather_pd(x, idx, 8);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_cvtepi32_pd(w), xv));
        }
        double s = hsum(acc);
        for (; k < end; ++k) s += static_cast<double>(weights[k]) * x[cols[k]];
        y[r] = s * inv_scale;
    }
}

}  // namespace

const KernelTable* avx2_table() noexcept {
    static const KernelTable table{Isa::avx2,         "avx2",           &l1_distance_avx2,
                                   &l1_deviation_avx2, &rotate_pair_avx2, &csr_matvec_avx2};
    return &table;
}

}  // namespace starprof::kernels
