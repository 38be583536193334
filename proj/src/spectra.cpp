#include "starprof/spectra.hpp"

#include <map>
#include <numeric>
#include <string>

#include "starprof/error.hpp"

namespace starprof {

namespace {

void require_n(int n, int cap) {
    if (n < 2) throw DomainError("spectra are defined for n >= 2, got " + std::to_string(n));
    if (n > cap)
        throw SizeLimitError("n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

std::string_view to_string(Chain chain) noexcept {
    return chain == Chain::rt ? "rt" : "star";
}

Chain parse_chain(std::string_view name) {
    if (name == "rt") return Chain::rt;
    if (name == "star") return Chain::star;
    throw DomainError("unknown chain '" + std::string(name) + "' (expected rt or star)");
}

Fraction Fraction::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return g > 1 ? Fraction{num / g, den / g} : Fraction{num, den};
}

std::int64_t content_sum(std::span<const int> parts) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::int64_t row = parts[i];
        // columns 0..row-1 at row index i
        sum += row * (row - 1) / 2 - static_cast<std::int64_t>(i) * row;
    }
    return sum;
}

Fraction rt_eigenvalue_of(std::span<const int> parts, int n) {
    const std::int64_t nn = n;
    return Fraction::make(nn + 2 * content_sum(parts), nn * nn);
}

Fraction star_eigenvalue_of(std::span<const int> parts, int row, int n) {
    return Fraction::make(parts[static_cast<std::size_t>(row - 1)] - row + 1, n);
}

Fraction star_r_of(std::span<const int> parts, int row, int n) {
    return Fraction::make(parts[static_cast<std::size_t>(row - 1)] - row, n - 1);
}

RtEig rt_eigenvalue(const Partition& lambda) {
    const int n = lambda.n();
    require_n(n, kDefaultPartitionCap);
    RtEig e;
    e.lambda = lambda;
    const std::int64_t nn = n;
    e.r = Fraction::make(2 * content_sum(lambda.view()), nn * (nn - 1));
    e.s = rt_eigenvalue_of(lambda.view(), n);
    const BigDim d = dim(lambda);
    e.log_mult = 2.0 * d.log_value;
    if (d.has_exact()) e.mult = d.exact() * d.exact();
    return e;
}

std::vector<StarEig> star_eigenvalues(const Partition& lambda) {
    const int n = lambda.n();
    require_n(n, kDefaultPartitionCap);
    const BigDim d = dim(lambda);
    std::vector<StarEig> out;
    for (const Corner& c : corners(lambda)) {
        StarEig e;
        e.lambda = lambda;
        e.corner_row = c.row;
        e.s_bar = star_eigenvalue_of(lambda.view(), c.row, n);
        const BigDim dr = dim(c.reduced);
        e.log_mult = d.log_value + dr.log_value;
        if (d.has_exact()) e.mult = d.exact() * dr.exact();
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<SpectralBlock> full_spectrum(Chain chain, int n, int cap) {
    require_n(n, cap);
    std::vector<SpectralBlock> blocks;
    for (Partition& lambda : enumerate_partitions(n, cap)) {
        SpectralBlock b;
        b.rt = rt_eigenvalue(lambda);
        if (chain == Chain::star) b.star = star_eigenvalues(lambda);
        b.lambda = std::move(lambda);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

BigInt spectrum_total_multiplicity(Chain chain, int n) {
    require_n(n, kExactDimCap);
    BigInt total = 0;
    for (const SpectralBlock& b : full_spectrum(chain, n)) {
        if (chain == Chain::rt) {
            total += *b.rt.mult;
        } else {
            for (const StarEig& e : b.star) total += *e.mult;
        }
    }
    return total;
}

Rational spectrum_trace(Chain chain, int n) {
    require_n(n, kExactSpectrumCap);
    Rational trace = 0;
    for (const SpectralBlock& b : full_spectrum(chain, n)) {
        if (chain == Chain::rt) {
            trace += b.rt.s.exact() * Rational(*b.rt.mult);
        } else {
            for (const StarEig& e : b.star) trace += e.s_bar.exact() * Rational(*e.mult);
        }
    }
    return trace;
}

std::vector<std::pair<Fraction, BigInt>> eigenvalue_multiset(Chain chain, int n) {
    require_n(n, kExactDimCap);
    std::map<Fraction, BigInt> merged;
    for (const SpectralBlock& b : full_spectrum(chain, n)) {
        if (chain == Chain::rt) {
            merged[b.rt.s] += *b.rt.mult;
        } else {
            for (const StarEig& e : b.star) merged[e.s_bar] += *e.mult;
        }
    }
    return {merged.begin(), merged.end()};
}

void for_each_log_block(int n, const std::function<void(const LogBlock&)>& visit, int cap) {
    require_n(n, cap);
    std::vector<int> rows;
    std::vector<LogCorner> lc;
    for_each_partition(n, [&](std::span<const int> parts) {
        LogBlock b;
        b.parts = parts;
        b.lambda1 = parts.front();
        b.conj_lambda1 = static_cast<int>(parts.size());
        b.log_dim = log_dim(parts);
        b.s = rt_eigenvalue_of(parts, n);
        corner_rows(parts, rows);
        lc.clear();
        for (int r : rows)
            lc.push_back({r, star_eigenvalue_of(parts, r, n), log_dim_without_corner(parts, r)});
        b.corners = lc;
        visit(b);
    });
}

}  // namespace starprof
