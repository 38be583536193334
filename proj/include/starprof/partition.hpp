#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace starprof {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultPartitionCap = 100;
inline constexpr int kExactDimCap = 30;

/// An integer partition of n: a non-increasing sequence of positive parts.
/// The empty sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument when the parts are not positive and non-increasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int n() const noexcept { return n_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    const std::vector<int>& parts() const noexcept { return parts_; }
    std::span<const int> view() const noexcept { return parts_; }

    /// 1-based row access, 0 past the last row.
    int row(std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// Comma-joined parts, e.g. "3,2". The empty partition serializes as "".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Removing the last box of row `row` (1-based) of a partition.
struct Corner {
    int row = 0;
    Partition reduced;
};

/// d_lambda, exact when n <= kExactDimCap, always in log form.
struct BigDim {
    std::optional<BigInt> value;
    double log_value = 0.0;

    bool has_exact() const noexcept { return value.has_value(); }
    /// Throws SizeLimitError when the exact value was not computed.
    const BigInt& exact() const;
};

/// Visits every partition of n in reverse-lexicographic order starting with (n).
/// The span passed to `visit` is only valid during the call.
void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit);

/// All partitions of n, reverse-lexicographic, starting with (n).
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultPartitionCap);

Partition transpose(const Partition& lambda);
void transpose_into(std::span<const int> parts, std::vector<int>& out);

/// Hook lengths in row-major box order.
std::vector<int> hooks(const Partition& lambda);

/// Corners in ascending row order.
std::vector<Corner> corners(const Partition& lambda);
/// Rows (1-based) whose last box is removable.
void corner_rows(std::span<const int> parts, std::vector<int>& rows);

BigDim dim(const Partition& lambda);
/// Exact d_lambda; throws SizeLimitError when n > kExactDimCap.
BigInt exact_dim(const Partition& lambda);
/// log d_lambda via the hook length formula.
double log_dim(std::span<const int> parts);
/// log d of the partition obtained by removing the last box of `row` (1-based).
double log_dim_without_corner(std::span<const int> parts, int row);

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Cached log k! and log k tables.
double log_factorial(int n);
double log_int(int k);

}  // namespace starprof
