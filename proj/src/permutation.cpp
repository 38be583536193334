#include "starprof/permutation.hpp"

#include <numeric>
#include <string>

#include "starprof/error.hpp"

namespace starprof {

namespace {

void require_size(int n) {
    if (n < 0) throw DomainError("negative permutation size");
    if (n > kMaxPermN)
        throw SizeLimitError("permutation indexing supports n <= " + std::to_string(kMaxPermN) +
                             ", got " + std::to_string(n));
}

}  // namespace

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

PermIndex perm_rank(std::span<const int> sigma) {
    const int n = static_cast<int>(sigma.size());
    require_size(n);
    unsigned seen = 0;
    for (int v : sigma) {
        if (v < 0 || v >= n || (seen >> v) & 1u) throw DomainError("not a permutation");
        seen |= 1u << v;
    }
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) smaller += sigma[j] < sigma[i];
        rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return {rank, n};
}

Permutation perm_unrank(PermIndex index) {
    require_size(index.n);
    const int n = index.n;
    if (index.rank >= factorial_u64(n)) throw DomainError("rank out of range");
    std::vector<int> code(static_cast<std::size_t>(n));
    std::uint64_t r = index.rank;
    for (int i = n - 1; i >= 0; --i) {
        const auto radix = static_cast<std::uint64_t>(n - i);
        code[static_cast<std::size_t>(i)] = static_cast<int>(r % radix);
        r /= radix;
    }
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    Permutation sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto pos = static_cast<std::size_t>(code[static_cast<std::size_t>(i)]);
        sigma[static_cast<std::size_t>(i)] = pool[pos];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return sigma;
}

Permutation identity_permutation(int n) {
    Permutation id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    return id;
}

}  // namespace starprof
