#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "starprof/partition.hpp"

namespace starprof {

using Rational = boost::multiprecision::cpp_rational;

enum class Chain { rt, star };

std::string_view to_string(Chain chain) noexcept;
/// Accepts "rt" or "star"; throws DomainError otherwise.
Chain parse_chain(std::string_view name);

/// Reduced fraction with a positive denominator. Every eigenvalue of both chains
/// has numerator and denominator bounded by n^2, so 64 bits are always exact.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Fraction make(std::int64_t num, std::int64_t den);
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    Rational exact() const { return Rational(num, den); }

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
        // cross-multiplication cannot overflow for |num|, den <= 2^31
        return a.num * b.den <=> b.num * a.den;
    }
};

/// Random-transpositions eigenvalue of the isotypic block lambda.
struct RtEig {
    Partition lambda;
    Fraction r;
    Fraction s;
    std::optional<BigInt> mult;  // d_lambda^2, present when n <= kExactDimCap
    double log_mult = 0.0;
};

/// Star-transpositions eigenvalue attached to corner `corner_row` of lambda.
struct StarEig {
    Partition lambda;
    int corner_row = 0;
    Fraction s_bar;
    std::optional<BigInt> mult;  // d_lambda * d_{lambda^(i)}
    double log_mult = 0.0;
};

struct SpectralBlock {
    Partition lambda;
    RtEig rt;
    std::vector<StarEig> star;  // empty for rt-only spectra
};

/// Sum over boxes of (column - row), i.e. sum C(lambda_i,2) - sum C(lambda'_i,2).
std::int64_t content_sum(std::span<const int> parts);

/// s_lambda = (n + 2 * content_sum) / n^2.
Fraction rt_eigenvalue_of(std::span<const int> parts, int n);
/// s_bar = (lambda_row - row + 1) / n.
Fraction star_eigenvalue_of(std::span<const int> parts, int row, int n);
/// r_bar = (lambda_row - row) / (n - 1).
Fraction star_r_of(std::span<const int> parts, int row, int n);

RtEig rt_eigenvalue(const Partition& lambda);
std::vector<StarEig> star_eigenvalues(const Partition& lambda);

/// One block per partition of n, in enumeration order.
std::vector<SpectralBlock> full_spectrum(Chain chain, int n, int cap = kDefaultPartitionCap);

inline constexpr int kExactSpectrumCap = 12;

/// Sum of multiplicities over every block; equals n!.
BigInt spectrum_total_multiplicity(Chain chain, int n);
/// Sum of mult * eigenvalue over every block, exact; n <= kExactSpectrumCap.
Rational spectrum_trace(Chain chain, int n);

/// Eigenvalue -> multiplicity with equal eigenvalues merged, ascending; n <= kExactDimCap.
std::vector<std::pair<Fraction, BigInt>> eigenvalue_multiset(Chain chain, int n);

/// Log-space view of one block used by the large-n spectral sums.
struct LogCorner {
    int row = 0;
    Fraction s_bar;
    double log_dim_reduced = 0.0;
};

struct LogBlock {
    std::span<const int> parts;
    int lambda1 = 0;       // first row
    int conj_lambda1 = 0;  // first column (number of rows)
    double log_dim = 0.0;
    Fraction s;
    std::span<const LogCorner> corners;
};

/// Streams every partition of n as a LogBlock; spans are valid only during the call.
void for_each_log_block(int n, const std::function<void(const LogBlock&)>& visit,
                        int cap = kDefaultPartitionCap);

}  // namespace starprof
