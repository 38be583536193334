#pragma once

#include <array>
#include <vector>

#include "starprof/partition.hpp"
#include "starprof/signed_log.hpp"
#include "starprof/spectra.hpp"

namespace starprof {

inline constexpr double kMaxPoissonMean = 1e4;
inline constexpr double kProfileCMin = -8.0;
inline constexpr double kProfileCMax = 12.0;
inline constexpr int kMaxBoundN = 60;

/// Total variation distance between Poisson(mu1) and Poisson(mu2).
/// Both means must lie in (0, kMaxPoissonMean].
double poisson_tv(double mu1, double mu2);

struct ProfilePoint {
    double c = 0.0;
    double value = 0.0;
};

/// d_TV(Poiss(1 + e^{-c}), Poiss(1)) at star-transpositions time n(log n + c).
ProfilePoint star_profile(double c);
/// The same curve at random-transpositions time n(log n + c) / 2.
ProfilePoint rt_profile(double c);

/// star_profile sampled at c_min, c_min + step, ... up to c_max (inclusive).
std::vector<ProfilePoint> profile_curve(double c_min, double c_max, double step);

struct CutoffTimes {
    int t = 0;       // random transpositions, round(n(log n + c) / 2), parity-matched
    int t_star = 0;  // star transpositions, round(n(log n + c))
};

CutoffTimes cutoff_times(int n, double c);
/// The time of one chain: t for rt, t_star for star.
int cutoff_time(Chain chain, int n, double c);

/// Terms 1-4 of the truncated error decomposition at truncation rank M.
using Decomposition = std::array<double, 4>;

struct BoundReport {
    int n = 0;
    double c = 0.0;
    int t = 0;
    int t_star = 0;
    double total = 0.0;     // (1/2) sqrt(sum)
    double log_sum = 0.0;   // log of the paired spectral sum
    Decomposition parts{};  // at truncation rank `truncation`
    int truncation = 0;
};

int default_truncation(int n) noexcept;

/// log of sum_lambda d_lambda sum_i d_{lambda^(i)} (s_lambda^t - s_bar_{lambda^(i)}^t_star)^2.
double comparison_log_sum(int n, int t, int t_star);

/// Evaluates the comparison bound at the cutoff times for (n, c); 2 <= n <= kMaxBoundN.
BoundReport comparison_bound(int n, double c);
BoundReport comparison_bound(int n, double c, int truncation);
/// Same, at explicit times.
BoundReport comparison_bound_at(int n, int t, int t_star, int truncation);

/// 1 <= M <= n/2.
Decomposition bound_decomposition(int n, double c, int M);
Decomposition bound_decomposition_at(int n, int t, int t_star, int M);

/// (1/2) sqrt(sum over nontrivial eigenvalues of mult * eig^(2t)); 2 <= n <= kMaxBoundN.
double l2_bound(Chain chain, int n, int t);

struct BlockContribution {
    Partition lambda;
    int corner_row = 0;  // 0 for random transpositions
    Fraction eigenvalue;
    double log_contribution = 0.0;  // log(mult * eig^(2t)), -inf when it vanishes
};

/// Contributions to the l2 sum of the blocks with n - lambda_1 <= depth or
/// n - lambda'_1 <= depth (nontrivial only), in descending order. Works past kMaxBoundN.
std::vector<BlockContribution> l2_contributions(Chain chain, int n, int t, int depth);

}  // namespace starprof
