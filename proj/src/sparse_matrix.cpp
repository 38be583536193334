#include "starprof/sparse_matrix.hpp"

#include <algorithm>
#include <limits>

#include "starprof/error.hpp"

namespace starprof {

SparseScaledMatrix::SparseScaledMatrix(int n, int scale, std::vector<std::vector<Entry>> rows)
    : n_(n), scale_(scale) {
    if (scale < 0) throw DomainError("negative matrix scale");
    for (int k = 0; k < scale; ++k) denominator_ *= n;
    row_ptr_.reserve(rows.size() + 1);
    row_ptr_.push_back(0);
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
        for (std::size_t k = 0; k < row.size();) {
            std::int64_t w = 0;
            const std::int32_t c = row[k].col;
            for (; k < row.size() && row[k].col == c; ++k) w += row[k].weight;
            if (w == 0) continue;
            if (w > std::numeric_limits<std::int32_t>::max() || w < std::numeric_limits<std::int32_t>::min())
                throw SizeLimitError("matrix weight does not fit in 32 bits");
            cols_.push_back(c);
            weights_.push_back(static_cast<std::int32_t>(w));
        }
        row_ptr_.push_back(static_cast<std::int64_t>(cols_.size()));
    }
}

std::span<const std::int32_t> SparseScaledMatrix::row_cols(std::size_t r) const noexcept {
    return std::span<const std::int32_t>(cols_).subspan(
        static_cast<std::size_t>(row_ptr_[r]), static_cast<std::size_t>(row_ptr_[r + 1] - row_ptr_[r]));
}

std::span<const std::int32_t> SparseScaledMatrix::row_weights(std::size_t r) const noexcept {
    return std::span<const std::int32_t>(weights_).subspan(
        static_cast<std::size_t>(row_ptr_[r]), static_cast<std::size_t>(row_ptr_[r + 1] - row_ptr_[r]));
}

std::int64_t SparseScaledMatrix::weight(std::size_t r, std::size_t c) const noexcept {
    const auto rc = row_cols(r);
    const auto it = std::lower_bound(rc.begin(), rc.end(), static_cast<std::int32_t>(c));
    if (it == rc.end() || *it != static_cast<std::int32_t>(c)) return 0;
    return row_weights(r)[static_cast<std::size_t>(it - rc.begin())];
}

bool SparseScaledMatrix::is_stochastic() const noexcept {
    for (std::size_t r = 0; r < dim(); ++r) {
        std::int64_t s = 0;
        for (std::int32_t w : row_weights(r)) {
            if (w < 0) return false;
            s += w;
        }
        if (s != denominator_) return false;
    }
    return true;
}

bool SparseScaledMatrix::is_symmetric() const noexcept {
    for (std::size_t r = 0; r < dim(); ++r) {
        const auto rc = row_cols(r);
        const auto rw = row_weights(r);
        for (std::size_t k = 0; k < rc.size(); ++k)
            if (weight(static_cast<std::size_t>(rc[k]), r) != rw[k]) return false;
    }
    return true;
}

SparseScaledMatrix multiply(const SparseScaledMatrix& a, const SparseScaledMatrix& b) {
    if (a.n() != b.n() || a.dim() != b.dim()) throw DomainError("matrix size mismatch");
    const std::size_t dim = a.dim();
    std::vector<std::int64_t> acc(dim, 0);
    std::vector<std::int32_t> touched;
    std::vector<std::vector<SparseScaledMatrix::Entry>> rows(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        touched.clear();
        const auto ac = a.row_cols(r);
        const auto aw = a.row_weights(r);
        for (std::size_t k = 0; k < ac.size(); ++k) {
            const auto mid = static_cast<std::size_t>(ac[k]);
            const auto bc = b.row_cols(mid);
            const auto bw = b.row_weights(mid);
            for (std::size_t m = 0; m < bc.size(); ++m) {
                auto& slot = acc[static_cast<std::size_t>(bc[m])];
                if (slot == 0) touched.push_back(bc[m]);
                slot += static_cast<std::int64_t>(aw[k]) * bw[m];
            }
        }
        rows[r].reserve(touched.size());
        for (std::int32_t c : touched) {
            rows[r].push_back({c, acc[static_cast<std::size_t>(c)]});
            acc[static_cast<std::size_t>(c)] = 0;
        }
    }
    return SparseScaledMatrix(a.n(), a.scale() + b.scale(), std::move(rows));
}

}  // namespace starprof
