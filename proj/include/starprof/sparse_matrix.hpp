#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace starprof {

/// Integer CSR matrix standing for (stored weights) / n^scale. Rows and columns
/// are Lehmer ranks of permutations of n symbols.
class SparseScaledMatrix {
public:
    struct Entry {
        std::int32_t col;
        std::int64_t weight;
    };

    SparseScaledMatrix() = default;
    /// Entries in each row are sorted by column and duplicates summed; zero weights dropped.
    SparseScaledMatrix(int n, int scale, std::vector<std::vector<Entry>> rows);

    int n() const noexcept { return n_; }
    int scale() const noexcept { return scale_; }
    std::size_t dim() const noexcept { return row_ptr_.empty() ? 0 : row_ptr_.size() - 1; }
    std::size_t nonzeros() const noexcept { return cols_.size(); }
    /// n^scale
    std::int64_t denominator() const noexcept { return denominator_; }

    std::span<const std::int64_t> row_ptr() const noexcept { return row_ptr_; }
    std::span<const std::int32_t> cols() const noexcept { return cols_; }
    std::span<const std::int32_t> weights() const noexcept { return weights_; }

    std::span<const std::int32_t> row_cols(std::size_t r) const noexcept;
    std::span<const std::int32_t> row_weights(std::size_t r) const noexcept;
    std::int64_t weight(std::size_t r, std::size_t c) const noexcept;

    /// Every row sums to n^scale exactly.
    bool is_stochastic() const noexcept;
    /// weight(r, c) == weight(c, r) for all entries.
    bool is_symmetric() const noexcept;

    friend bool operator==(const SparseScaledMatrix&, const SparseScaledMatrix&) = default;

private:
    int n_ = 0;
    int scale_ = 0;
    std::int64_t denominator_ = 1;
    std::vector<std::int64_t> row_ptr_;
    std::vector<std::int32_t> cols_;
    std::vector<std::int32_t> weights_;
};

/// Exact integer product; the result has scale a.scale() + b.scale().
/// Throws DomainError on size mismatch, SizeLimitError if a weight overflows 32 bits.
SparseScaledMatrix multiply(const SparseScaledMatrix& a, const SparseScaledMatrix& b);

}  // namespace starprof
