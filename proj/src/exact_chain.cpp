#include "starprof/exact_chain.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "starprof/error.hpp"
#include "starprof/kernels.hpp"

namespace starprof {

namespace {

void require_range(int n, int lo, int hi, const char* what) {
    if (n < lo) throw DomainError(std::string(what) + ": n must be >= " + std::to_string(lo));
    if (n > hi)
        throw SizeLimitError(std::string(what) + ": n = " + std::to_string(n) + " exceeds " +
                             std::to_string(hi));
}

}  // namespace

bool DistVector::valid() const noexcept {
    double total = 0.0;
    for (double p : probs) {
        if (p < -1e-15) return false;
        total += p;
    }
    return probs.size() == factorial_u64(n) && std::fabs(total - 1.0) <= 1e-9;
}

SparseScaledMatrix build_generator_matrix(int n, int scale, std::int64_t diag_weight,
                                          std::span<const GeneratorWeight> generators) {
    require_range(n, 2, kMaxEvolveN, "build_matrix");
    for (const auto& g : generators)
        if (g.a < 1 || g.b < 1 || g.a > n || g.b > n || g.a == g.b)
            throw DomainError("generator positions must be distinct and in [1, n]");
    const std::uint64_t states = factorial_u64(n);
    std::vector<std::vector<SparseScaledMatrix::Entry>> rows(states);
    Permutation sigma;
    for (std::uint64_t r = 0; r < states; ++r) {
        sigma = perm_unrank({r, n});
        auto& row = rows[r];
        row.reserve(generators.size() + 1);
        if (diag_weight != 0) row.push_back({static_cast<std::int32_t>(r), diag_weight});
        for (const auto& g : generators) {
            // x * (a b): swap the entries in positions a and b of the one-line notation
            std::swap(sigma[g.a - 1], sigma[g.b - 1]);
            row.push_back({static_cast<std::int32_t>(perm_rank(sigma).rank), g.weight});
            std::swap(sigma[g.a - 1], sigma[g.b - 1]);
        }
    }
    return SparseScaledMatrix(n, scale, std::move(rows));
}

SparseScaledMatrix build_matrix(Chain chain, int n) {
    require_range(n, 2, kMaxEvolveN, "build_matrix");
    std::vector<GeneratorWeight> gens;
    if (chain == Chain::rt) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) gens.push_back({a, b, 2});
        return build_generator_matrix(n, 2, n, gens);
    }
    for (int j = 2; j <= n; ++j) gens.push_back({1, j, 1});
    return build_generator_matrix(n, 1, 1, gens);
}

DistVector point_mass(int n, PermIndex start) {
    require_range(n, 1, kMaxEvolveN, "point_mass");
    if (start.n != n || start.rank >= factorial_u64(n)) throw DomainError("start state out of range");
    DistVector d{n, std::vector<double>(factorial_u64(n), 0.0)};
    d.probs[start.rank] = 1.0;
    return d;
}

DistVector evolve(const SparseScaledMatrix& m, PermIndex start, int t) {
    if (t < 0) throw DomainError("negative number of steps");
    DistVector cur = point_mass(m.n(), start);
    std::vector<double> next(cur.probs.size());
    const auto& kt = kernels::active();
    const double inv = 1.0 / static_cast<double>(m.denominator());
    // m is symmetric, so the row-oriented product is the distribution update.
    for (int step = 0; step < t; ++step) {
        kt.csr_matvec(m.row_ptr().data(), m.cols().data(), m.weights().data(), cur.probs.data(),
                      next.data(), m.dim(), inv);
        cur.probs.swap(next);
    }
    return cur;
}

std::vector<DistVector> evolve_trajectory(const SparseScaledMatrix& m, int t_max) {
    if (t_max < 0) throw DomainError("negative number of steps");
    std::vector<DistVector> out;
    out.reserve(static_cast<std::size_t>(t_max) + 1);
    out.push_back(point_mass(m.n(), {0, m.n()}));
    const auto& kt = kernels::active();
    const double inv = 1.0 / static_cast<double>(m.denominator());
    for (int step = 0; step < t_max; ++step) {
        DistVector next{m.n(), std::vector<double>(m.dim())};
        kt.csr_matvec(m.row_ptr().data(), m.cols().data(), m.weights().data(),
                      out.back().probs.data(), next.probs.data(), m.dim(), inv);
        out.push_back(std::move(next));
    }
    return out;
}

double tv_to_uniform(const DistVector& d) {
    const double u = 1.0 / static_cast<double>(d.probs.size());
    return 0.5 * kernels::l1_deviation(d.probs, u);
}

double tv_between(const DistVector& d1, const DistVector& d2) {
    if (d1.n != d2.n || d1.probs.size() != d2.probs.size())
        throw DomainError("tv_between: distributions live on different deck sizes");
    return 0.5 * kernels::l1_distance(d1.probs, d2.probs);
}

bool commutes(const SparseScaledMatrix& a, const SparseScaledMatrix& b) {
    return multiply(a, b) == multiply(b, a);
}

bool commutation_check(int n) {
    require_range(n, 2, kMaxProductN, "commutation_check");
    return commutes(build_matrix(Chain::star, n), build_matrix(Chain::rt, n));
}

DenseMatrix to_dense(const SparseScaledMatrix& m) {
    DenseMatrix d(m.dim());
    const double inv = 1.0 / static_cast<double>(m.denominator());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        const auto cols = m.row_cols(r);
        const auto ws = m.row_weights(r);
        for (std::size_t k = 0; k < cols.size(); ++k)
            d(r, static_cast<std::size_t>(cols[k])) = static_cast<double>(ws[k]) * inv;
    }
    return d;
}

std::vector<double> numeric_eig_multiset(const SparseScaledMatrix& m) {
    require_range(m.n(), 2, kMaxDenseEigenN, "numeric_eig_multiset");
    if (!m.is_symmetric()) throw DomainError("numeric_eig_multiset requires a symmetric matrix");
    return jacobi_eigenvalues(to_dense(m));
}

double paired_rhs(int n, int t, int t_star) {
    require_range(n, 2, kExactDimCap, "paired_rhs");
    if (t < 0 || t_star < 0) throw DomainError("negative time");
    double sum = 0.0;
    for (const Partition& lambda : enumerate_partitions(n)) {
        const double d = exact_dim(lambda).convert_to<double>();
        const double rt_pow = std::pow(rt_eigenvalue_of(lambda.view(), n).value(), t);
        for (const Corner& c : corners(lambda)) {
            const double dr = exact_dim(c.reduced).convert_to<double>();
            const double diff = rt_pow - std::pow(star_eigenvalue_of(lambda.view(), c.row, n).value(), t_star);
            sum += d * dr * diff * diff;
        }
    }
    return std::sqrt(sum);
}

PairedCheck paired_l2_check(int n, int t, int t_star) {
    require_range(n, 2, kMaxDenseEigenN, "paired_l2_check");
    if (t < 0 || t_star < 0) throw DomainError("negative time");
    const PermIndex id{0, n};
    const DistVector q = evolve(build_matrix(Chain::rt, n), id, t);
    const DistVector p = evolve(build_matrix(Chain::star, n), id, t_star);
    return {2.0 * tv_between(q, p), paired_rhs(n, t, t_star)};
}

std::vector<PairedPoint> paired_l2_sweep(int n, int t_max) {
    require_range(n, 2, kMaxDenseEigenN, "paired_l2_sweep");
    if (t_max < 0) throw DomainError("negative time");
    const auto q = evolve_trajectory(build_matrix(Chain::rt, n), t_max);
    const auto p = evolve_trajectory(build_matrix(Chain::star, n), t_max);
    std::vector<PairedPoint> out;
    out.reserve(static_cast<std::size_t>((t_max + 1) * (t_max + 1)));
    for (int t = 0; t <= t_max; ++t)
        for (int ts = 0; ts <= t_max; ++ts)
            out.push_back({t, ts, {2.0 * tv_between(q[t], p[ts]), paired_rhs(n, t, ts)}});
    return out;
}

}  // namespace starprof
