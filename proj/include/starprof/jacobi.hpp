#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace starprof {

/// Row-major dense square matrix.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t d) : dim(d), data(d * d, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) noexcept { return data[r * dim + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data[r * dim + c]; }
    std::span<double> row(std::size_t r) noexcept { return {data.data() + r * dim, dim}; }
    std::span<const double> row(std::size_t r) const noexcept { return {data.data() + r * dim, dim}; }
};

struct EigenDecomposition {
    std::vector<double> values;  // unsorted, paired with rows of `vectors`
    DenseMatrix vectors;         // row k is the unit eigenvector for values[k]; empty if not requested
    int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// rel_tol * (Frobenius norm). Throws DomainError for a non-symmetric input.
EigenDecomposition jacobi_eigen(DenseMatrix a, bool want_vectors, double rel_tol = 1e-12,
                                int max_sweeps = 100);

/// Eigenvalues sorted ascending.
std::vector<double> jacobi_eigenvalues(DenseMatrix a, double rel_tol = 1e-12);

}  // namespace starprof
