#include "starprof/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "starprof/error.hpp"

namespace starprof {

namespace {

// log k and log k! for k up to this bound; larger arguments fall back to std::lgamma.
constexpr int kLogTableSize = 4096;

struct LogTables {
    std::vector<double> log_int;
    std::vector<double> log_fact;

    LogTables() : log_int(kLogTableSize + 1, 0.0), log_fact(kLogTableSize + 1, 0.0) {
        for (int k = 1; k <= kLogTableSize; ++k) {
            log_int[k] = std::log(static_cast<double>(k));
            log_fact[k] = std::lgamma(static_cast<double>(k) + 1.0);
        }
    }
};

const LogTables& tables() {
    static const LogTables t;
    return t;
}

double hook_log_sum(std::span<const int> parts, std::vector<int>& conj) {
    transpose_into(parts, conj);
    const auto& li = tables().log_int;
    double s = 0.0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int row = parts[i];
        for (int j = 0; j < row; ++j) {
            const int h = (row - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
            s += li[h];
        }
    }
    return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw DomainError("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw DomainError("partition parts must be non-increasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

const BigInt& BigDim::exact() const {
    if (!value)
        throw SizeLimitError("exact dimension is only available for n <= " + std::to_string(kExactDimCap));
    return *value;
}

void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit) {
    if (n < 0) throw DomainError("partitions of a negative integer");
    if (n == 0) {
        visit({});
        return;
    }
    std::vector<int> a;
    a.reserve(static_cast<std::size_t>(n));
    a.push_back(n);
    for (;;) {
        visit(a);
        // Rightmost part larger than 1.
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) return;
        const int v = --a.back();
        int rem = ones + 1;
        while (rem > v) {
            a.push_back(v);
            rem -= v;
        }
        if (rem > 0) a.push_back(rem);
    }
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
    if (n < 0) throw DomainError("partitions of a negative integer");
    if (n > cap)
        throw SizeLimitError("partition enumeration: n = " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const int> p) {
        out.emplace_back(std::vector<int>(p.begin(), p.end()));
    });
    return out;
}

void transpose_into(std::span<const int> parts, std::vector<int>& out) {
    out.clear();
    if (parts.empty()) return;
    out.assign(static_cast<std::size_t>(parts.front()), 0);
    for (int row : parts)
        for (int j = 0; j < row; ++j) ++out[j];
}

Partition transpose(const Partition& lambda) {
    std::vector<int> conj;
    transpose_into(lambda.view(), conj);
    return Partition(std::move(conj));
}

std::vector<int> hooks(const Partition& lambda) {
    std::vector<int> conj;
    transpose_into(lambda.view(), conj);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(lambda.n()));
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j)
            out.push_back((p[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1);
    return out;
}

void corner_rows(std::span<const int> parts, std::vector<int>& rows) {
    rows.clear();
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i + 1 == parts.size() || parts[i] > parts[i + 1]) rows.push_back(static_cast<int>(i) + 1);
}

std::vector<Corner> corners(const Partition& lambda) {
    std::vector<int> rows;
    corner_rows(lambda.view(), rows);
    std::vector<Corner> out;
    out.reserve(rows.size());
    for (int r : rows) {
        std::vector<int> reduced = lambda.parts();
        if (--reduced[r - 1] == 0) reduced.erase(reduced.begin() + (r - 1));
        out.push_back({r, Partition(std::move(reduced))});
    }
    return out;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

double log_int(int k) {
    if (k <= kLogTableSize) return tables().log_int[k];
    return std::log(static_cast<double>(k));
}

double log_factorial(int n) {
    if (n <= kLogTableSize) return tables().log_fact[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_dim(std::span<const int> parts) {
    thread_local std::vector<int> conj;
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    return log_factorial(n) - hook_log_sum(parts, conj);
}

double log_dim_without_corner(std::span<const int> parts, int row) {
    thread_local std::vector<int> reduced;
    reduced.assign(parts.begin(), parts.end());
    if (--reduced[static_cast<std::size_t>(row - 1)] == 0) reduced.erase(reduced.begin() + (row - 1));
    return log_dim(reduced);
}

BigInt exact_dim(const Partition& lambda) {
    if (lambda.n() > kExactDimCap)
        throw SizeLimitError("exact dimension requested for n = " + std::to_string(lambda.n()) +
                             " > " + std::to_string(kExactDimCap));
    BigInt hook_product = 1;
    for (int h : hooks(lambda)) hook_product *= h;
    return factorial(lambda.n()) / hook_product;
}

BigDim dim(const Partition& lambda) {
    BigDim d;
    d.log_value = log_dim(lambda.view());
    if (lambda.n() <= kExactDimCap) d.value = exact_dim(lambda);
    return d;
}

}  // namespace starprof
