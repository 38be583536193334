#include "starprof/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "starprof/error.hpp"

namespace starprof {

namespace {

constexpr double kPoissonTailTolerance = 1e-13;

double log_poisson_pmf(int k, double mu, double log_mu) {
    return -mu + k * log_mu - log_factorial(k);
}

SignedLogReal fraction_power(const Fraction& f, long long t) {
    if (f.num == 0) return t == 0 ? SignedLogReal::one() : SignedLogReal::zero();
    const std::int64_t a = f.num < 0 ? -f.num : f.num;
    const double log_abs = (a <= 4096 ? log_int(static_cast<int>(a)) : std::log(static_cast<double>(a))) -
                           (f.den <= 4096 ? log_int(static_cast<int>(f.den)) : std::log(static_cast<double>(f.den)));
    return SignedLogReal::from_log(f.num < 0 ? -1 : 1, log_abs).pow(t);
}

void require_bound_n(int n) {
    if (n < 2) throw DomainError("spectral bounds need n >= 2");
    if (n > kMaxBoundN)
        throw SizeLimitError("full partition sums are guarded at n <= " + std::to_string(kMaxBoundN) +
                             ", got " + std::to_string(n));
}

void require_times(int t, int t_star) {
    if (t < 0 || t_star < 0) throw DomainError("times must be nonnegative");
}

void require_truncation(int n, int M) {
    if (M < 1 || M > n / 2)
        throw DomainError("truncation rank M must satisfy 1 <= M <= n/2, got " + std::to_string(M));
}

struct SpectralPass {
    LogSumAccumulator total;
    std::array<LogSumAccumulator, 4> parts;
};

// One sweep over the partitions of n collecting the full paired sum and the
// four decomposition sums at truncation rank M.
SpectralPass spectral_pass(int n, int t, int t_star, int M) {
    SpectralPass pass;
    for_each_log_block(n, [&](const LogBlock& b) {
        const SignedLogReal rt_pow = fraction_power(b.s, t);
        const bool outer_row = b.lambda1 > n - M;
        const bool outer_col = b.conj_lambda1 > n - M;
        const bool middle = !outer_row && !outer_col;
        if (!outer_row) pass.parts[0].add(2.0 * b.log_dim + 2.0 * rt_pow.log_mag());

        LogSumAccumulator star_abs;
        for (const LogCorner& c : b.corners) {
            const SignedLogReal star_pow = fraction_power(c.s_bar, t_star);
            const double log_mult = b.log_dim + c.log_dim_reduced;
            const double log_term = log_mult + 2.0 * (rt_pow - star_pow).log_mag();
            pass.total.add(log_term);
            if (outer_row) pass.parts[3].add(log_term);
            if (outer_col) pass.parts[3].add(log_term);
            if (middle) {
                pass.parts[1].add(log_mult + 2.0 * star_pow.log_mag());
                star_abs.add(c.log_dim_reduced + star_pow.log_mag());
            }
        }
        if (middle) pass.parts[2].add(b.log_dim + rt_pow.log_mag() + star_abs.log_sum());
    });
    return pass;
}

Decomposition to_decomposition(const SpectralPass& pass) {
    Decomposition d{};
    for (std::size_t k = 0; k < 4; ++k) d[k] = pass.parts[k].value();
    return d;
}

}  // namespace

double poisson_tv(double mu1, double mu2) {
    for (double mu : {mu1, mu2}) {
        if (!(mu > 0.0)) throw DomainError("Poisson mean must be positive");
        if (mu > kMaxPoissonMean) throw DomainError("Poisson mean exceeds " + std::to_string(kMaxPoissonMean));
    }
    const double lm1 = std::log(mu1);
    const double lm2 = std::log(mu2);
    const double mu_max = std::max(mu1, mu2);
    // Both sums are accumulated: sum|p1 - p2| is accurate when the distance is small, while
    // 1 - sum min(p1, p2) avoids roundoff wobble (and keeps monotonicity) when it nears 1.
    double sum = 0.0;
    double overlap = 0.0;
    for (int k = 0;; ++k) {
        const double p1 = std::exp(log_poisson_pmf(k, mu1, lm1));
        const double p2 = std::exp(log_poisson_pmf(k, mu2, lm2));
        sum += std::fabs(p1 - p2);
        overlap += std::min(p1, p2);
        if (k + 2 > mu_max) {
            // Past the mode the tail beyond k is at most p(k+1) / (1 - mu/(k+2)).
            const double tail1 = std::exp(log_poisson_pmf(k + 1, mu1, lm1)) / (1.0 - mu1 / (k + 2));
            const double tail2 = std::exp(log_poisson_pmf(k + 1, mu2, lm2)) / (1.0 - mu2 / (k + 2));
            if (tail1 < kPoissonTailTolerance && tail2 < kPoissonTailTolerance) break;
        }
    }
    const double tv = 0.5 * sum < 0.5 ? 0.5 * sum : 1.0 - overlap;
    return std::clamp(tv, 0.0, 1.0);
}

ProfilePoint star_profile(double c) {
    if (!(c >= kProfileCMin && c <= kProfileCMax))
        throw DomainError("profile parameter c must lie in [-8, 12]");
    return {c, poisson_tv(1.0 + std::exp(-c), 1.0)};
}

ProfilePoint rt_profile(double c) { return star_profile(c); }

std::vector<ProfilePoint> profile_curve(double c_min, double c_max, double step) {
    if (!(step > 0.0)) throw DomainError("profile grid step must be positive");
    if (!(c_min <= c_max)) throw DomainError("empty profile grid: c_min > c_max");
    const auto count = static_cast<std::size_t>(std::floor((c_max - c_min) / step + 1e-9)) + 1;
    std::vector<ProfilePoint> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(star_profile(c_min + static_cast<double>(k) * step));
    return out;
}

CutoffTimes cutoff_times(int n, double c) {
    if (n < 2) throw DomainError("cutoff times need n >= 2");
    const double x = n * (std::log(static_cast<double>(n)) + c);
    const double t_star = std::floor(x + 0.5);
    double t = std::floor(0.5 * x + 0.5);
    if (t < 0.0 || t_star < 0.0) throw DomainError("cutoff time is negative for this c");
    if (t_star > 1e9) throw DomainError("cutoff time too large");
    if (std::fmod(t_star - t, 2.0) != 0.0) t += 1.0;
    return {static_cast<int>(t), static_cast<int>(t_star)};
}

int cutoff_time(Chain chain, int n, double c) {
    const CutoffTimes ct = cutoff_times(n, c);
    return chain == Chain::rt ? ct.t : ct.t_star;
}

int default_truncation(int n) noexcept { return std::clamp(n / 2, 1, 4); }

double comparison_log_sum(int n, int t, int t_star) {
    require_bound_n(n);
    require_times(t, t_star);
    return spectral_pass(n, t, t_star, 1).total.log_sum();
}

BoundReport comparison_bound_at(int n, int t, int t_star, int truncation) {
    require_bound_n(n);
    require_times(t, t_star);
    require_truncation(n, truncation);
    const SpectralPass pass = spectral_pass(n, t, t_star, truncation);
    BoundReport r;
    r.n = n;
    r.c = std::numeric_limits<double>::quiet_NaN();
    r.t = t;
    r.t_star = t_star;
    r.log_sum = pass.total.log_sum();
    r.total = 0.5 * std::exp(0.5 * r.log_sum);
    r.parts = to_decomposition(pass);
    r.truncation = truncation;
    return r;
}

BoundReport comparison_bound(int n, double c, int truncation) {
    require_bound_n(n);
    const CutoffTimes ct = cutoff_times(n, c);
    BoundReport r = comparison_bound_at(n, ct.t, ct.t_star, truncation);
    r.c = c;
    return r;
}

BoundReport comparison_bound(int n, double c) {
    return comparison_bound(n, c, default_truncation(n));
}

Decomposition bound_decomposition_at(int n, int t, int t_star, int M) {
    require_bound_n(n);
    require_times(t, t_star);
    require_truncation(n, M);
    return to_decomposition(spectral_pass(n, t, t_star, M));
}

Decomposition bound_decomposition(int n, double c, int M) {
    require_bound_n(n);
    require_truncation(n, M);
    const CutoffTimes ct = cutoff_times(n, c);
    return bound_decomposition_at(n, ct.t, ct.t_star, M);
}

double l2_bound(Chain chain, int n, int t) {
    require_bound_n(n);
    if (t < 0) throw DomainError("time must be nonnegative");
    LogSumAccumulator acc;
    for_each_log_block(n, [&](const LogBlock& b) {
        const bool trivial = b.lambda1 == n;
        if (chain == Chain::rt) {
            if (!trivial) acc.add(2.0 * b.log_dim + fraction_power(b.s, 2LL * t).log_mag());
            return;
        }
        for (const LogCorner& c : b.corners) {
            if (trivial && c.row == 1) continue;
            acc.add(b.log_dim + c.log_dim_reduced + fraction_power(c.s_bar, 2LL * t).log_mag());
        }
    });
    return 0.5 * std::exp(0.5 * acc.log_sum());
}

std::vector<BlockContribution> l2_contributions(Chain chain, int n, int t, int depth) {
    if (n < 2) throw DomainError("spectral bounds need n >= 2");
    if (n > 4 * kDefaultPartitionCap) throw SizeLimitError("l2_contributions: n too large");
    if (t < 0) throw DomainError("time must be nonnegative");
    if (depth < 0 || depth >= n) throw DomainError("depth must lie in [0, n)");

    std::set<std::vector<int>> shapes;
    for (int j = 0; j <= depth; ++j) {
        for_each_partition(j, [&](std::span<const int> mu) {
            if (!mu.empty() && mu.front() > n - j) return;
            std::vector<int> parts{n - j};
            parts.insert(parts.end(), mu.begin(), mu.end());
            std::vector<int> conj;
            transpose_into(parts, conj);
            shapes.insert(parts);
            shapes.insert(conj);
        });
    }

    std::vector<BlockContribution> out;
    std::vector<int> rows;
    for (const auto& parts : shapes) {
        const bool trivial = parts.front() == n;
        const double ld = log_dim(parts);
        if (chain == Chain::rt) {
            if (trivial) continue;
            const Fraction s = rt_eigenvalue_of(parts, n);
            out.push_back({Partition(parts), 0, s, 2.0 * ld + fraction_power(s, 2LL * t).log_mag()});
            continue;
        }
        corner_rows(parts, rows);
        for (int r : rows) {
            if (trivial && r == 1) continue;
            const Fraction s = star_eigenvalue_of(parts, r, n);
            out.push_back({Partition(parts), r, s,
                           ld + log_dim_without_corner(parts, r) + fraction_power(s, 2LL * t).log_mag()});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const BlockContribution& a, const BlockContribution& b) {
        return a.log_contribution > b.log_contribution;
    });
    return out;
}

}  // namespace starprof
