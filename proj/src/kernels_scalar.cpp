#include <cmath>

#include "starprof/kernels.hpp"

namespace starprof::kernels {

namespace {

double l1_distance_scalar(const double* a, const double* b, std::size_t len) {
    double s = 0.0;
    for (std::size_t i = 0; i < len; ++i) s += std::fabs(a[i] - b[i]);
    return s;
}

double l1_deviation_scalar(const double* a, double c, std::size_t len) {
    double s = 0.0;
    for (std::size_t i = 0; i < len; ++i) s += std::fabs(a[i] - c);
    return s;
}

void rotate_pair_scalar(double* x, double* y, double c, double s, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

void csr_matvec_scalar(const std::int64_t* row_ptr, const std::int32_t* cols,
                       const std::int32_t* weights, const double* x, double* y,
                       std::size_t rows, double inv_scale) {
    for (std::size_t r = 0; r < rows; ++r) {
        double acc = 0.0;
        for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            acc += static_cast<double>(weights[k]) * x[cols[k]];
        y[r] = acc * inv_scale;
    }
}

}  // namespace

const KernelTable& scalar_table() noexcept {
    static const KernelTable table{Isa::scalar,         "scalar",           &l1_distance_scalar,
                                   &l1_deviation_scalar, &rotate_pair_scalar, &csr_matvec_scalar};
    return table;
}

}  // namespace starprof::kernels
