#pragma once

// Data-parallel inner loops of the exact-chain engine. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2 variant; the variant is picked
// once at runtime from CPUID and can be overridden for testing.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace starprof::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
    Isa isa;
    std::string_view name;

    /// sum_i |a_i - b_i|
    double (*l1_distance)(const double* a, const double* b, std::size_t len);
    /// sum_i |a_i - c|
    double (*l1_deviation)(const double* a, double c, std::size_t len);
    /// x <- c*x - s*y, y <- s*x + c*y (elementwise, using the old x)
    void (*rotate_pair)(double* x, double* y, double c, double s, std::size_t len);
    /// y_r = inv_scale * sum_{k in row r} w_k * x[col_k]
    void (*csr_matvec)(const std::int64_t* row_ptr, const std::int32_t* cols,
                       const std::int32_t* weights, const double* x, double* y,
                       std::size_t rows, double inv_scale);
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_table() noexcept;

bool cpu_supports(Isa isa) noexcept;

/// The table in use: the best supported ISA unless overridden.
const KernelTable& active() noexcept;
/// Pins the dispatch to `isa`; throws DomainError if unsupported on this CPU/build.
void force(Isa isa);
/// Restores automatic selection.
void reset();

inline double l1_distance(std::span<const double> a, std::span<const double> b) {
    return active().l1_distance(a.data(), b.data(), a.size());
}
inline double l1_deviation(std::span<const double> a, double c) {
    return active().l1_deviation(a.data(), c, a.size());
}
inline void rotate_pair(std::span<double> x, std::span<double> y, double c, double s) {
    active().rotate_pair(x.data(), y.data(), c, s, x.size());
}

}  // namespace starprof::kernels
