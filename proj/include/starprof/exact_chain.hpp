#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "starprof/jacobi.hpp"
#include "starprof/permutation.hpp"
#include "starprof/sparse_matrix.hpp"
#include "starprof/spectra.hpp"

namespace starprof {

inline constexpr int kMaxEvolveN = 8;
inline constexpr int kMaxProductN = 7;
inline constexpr int kMaxDenseEigenN = 6;

/// A probability vector over S_n indexed by Lehmer rank.
struct DistVector {
    int n = 0;
    std::vector<double> probs;

    /// Entries >= -1e-15 and total mass within 1e-9 of 1.
    bool valid() const noexcept;
};

/// Weight on the right multiplication by the transposition (a b), 1-based positions.
struct GeneratorWeight {
    int a = 1;
    int b = 2;
    std::int64_t weight = 1;
};

/// One step moves x to x*(a b) with probability weight / n^scale and stays put with
/// probability diag_weight / n^scale. Requires 2 <= n <= kMaxEvolveN.
SparseScaledMatrix build_generator_matrix(int n, int scale, std::int64_t diag_weight,
                                          std::span<const GeneratorWeight> generators);

/// rt: scale 2, diagonal n, weight 2 per transposition.
/// star: scale 1, diagonal 1, weight 1 per (1 j), j = 2..n.
SparseScaledMatrix build_matrix(Chain chain, int n);

DistVector point_mass(int n, PermIndex start);
/// t sparse applications of m to the point mass at `start`, in double precision.
DistVector evolve(const SparseScaledMatrix& m, PermIndex start, int t);
/// The distributions after 0, 1, ..., t_max steps from the identity.
std::vector<DistVector> evolve_trajectory(const SparseScaledMatrix& m, int t_max);

double tv_to_uniform(const DistVector& d);
/// Throws DomainError when the deck sizes differ.
double tv_between(const DistVector& d1, const DistVector& d2);

/// Exact integer check that a*b == b*a.
bool commutes(const SparseScaledMatrix& a, const SparseScaledMatrix& b);
/// (nP)(n^2 Q) == (n^2 Q)(nP) for star P and random transpositions Q; 2 <= n <= 7.
bool commutation_check(int n);

/// The rational matrix m as doubles.
DenseMatrix to_dense(const SparseScaledMatrix& m);
/// All n! eigenvalues of a symmetric matrix via cyclic Jacobi, ascending; n <= 6.
std::vector<double> numeric_eig_multiset(const SparseScaledMatrix& m);

struct PairedCheck {
    double lhs = 0.0;  // 2 * TV(Q^t delta_id, P^t_star delta_id)
    double rhs = 0.0;  // sqrt of the paired spectral sum
};

/// Spectral right-hand side: sqrt(sum_lambda d_lambda sum_i d_{lambda^(i)} (s_lambda^t - s_bar^t_star)^2),
/// where t drives random transpositions and t_star drives star transpositions.
double paired_rhs(int n, int t, int t_star);
/// 2 <= n <= kMaxDenseEigenN.
PairedCheck paired_l2_check(int n, int t, int t_star);

struct PairedPoint {
    int t = 0;
    int t_star = 0;
    PairedCheck value;
};

/// paired_l2_check over all (t, t_star) in [0, t_max]^2, sharing the evolved trajectories.
std::vector<PairedPoint> paired_l2_sweep(int n, int t_max);

}  // namespace starprof
