#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace starprof {

inline constexpr int kMaxPermN = 10;

/// A permutation in one-line notation with 0-based images: sigma[i] is the image of i.
using Permutation = std::vector<int>;

/// Lehmer-code rank of a permutation of {0..n-1}; the identity has rank 0.
struct PermIndex {
    std::uint64_t rank = 0;
    int n = 0;

    friend bool operator==(const PermIndex&, const PermIndex&) = default;
};

std::uint64_t factorial_u64(int n);

/// Throws SizeLimitError for n > kMaxPermN, DomainError if sigma is not a permutation.
PermIndex perm_rank(std::span<const int> sigma);
Permutation perm_unrank(PermIndex index);

Permutation identity_permutation(int n);

}  // namespace starprof
