#include "starprof/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "starprof/error.hpp"
#include "starprof/kernels.hpp"

namespace starprof {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t c = 0; c < a.dim; ++c)
            if (r != c) s += a(r, c) * a(r, c);
    return std::sqrt(s);
}

double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (double v : a.data) s += v * v;
    return std::sqrt(s);
}

struct Rotation {
    std::size_t p;
    std::size_t q;
    double c;
    double s;
    double new_pp;
    double new_qq;
};

}  // namespace

EigenDecomposition jacobi_eigen(DenseMatrix a, bool want_vectors, double rel_tol, int max_sweeps) {
    const std::size_t dim = a.dim;
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = r + 1; c < dim; ++c)
            if (a(r, c) != a(c, r)) throw DomainError("jacobi_eigen requires a symmetric matrix");

    EigenDecomposition out;
    if (want_vectors) {
        out.vectors = DenseMatrix(dim);
        for (std::size_t k = 0; k < dim; ++k) out.vectors(k, k) = 1.0;
    }
    const auto& kt = kernels::active();
    const double target = rel_tol * frobenius_norm(a);
    // Entries below `negligible` are left alone: even all of them together stay under
    // target^2 / 8 in squared norm, so skipping them cannot stall convergence.
    const double negligible = dim > 0 ? target / (2.0 * static_cast<double>(dim)) : 0.0;

    // Round-robin ordering: every sweep visits each pair (p, q) once, in dim - 1
    // rounds (dim even) of disjoint pairs. Disjoint rotations commute, so a round
    // is applied as one batch of row rotations followed by one pass over the rows
    // for the column rotations, which keeps memory access row-contiguous.
    const std::size_t players = dim + (dim % 2);  // odd sizes get a bye slot
    std::vector<std::size_t> ring(players);
    std::vector<Rotation> round;
    round.reserve(players / 2);

    while (off_diagonal_norm(a) >= target && out.sweeps < max_sweeps) {
        ++out.sweeps;
        for (std::size_t k = 0; k < players; ++k) ring[k] = k;
        for (std::size_t r = 0; r + 1 < players; ++r) {
            round.clear();
            for (std::size_t i = 0; i < players / 2; ++i) {
                std::size_t p = ring[i];
                std::size_t q = ring[players - 1 - i];
                if (p >= dim || q >= dim) continue;
                if (p > q) std::swap(p, q);
                const double apq = a(p, q);
                if (std::fabs(apq) <= negligible) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::fabs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                round.push_back({p, q, c, t * c, app - t * apq, aqq + t * apq});
            }
            // A <- J^T A J for the batch, then pin the annihilated 2x2 blocks.
            for (const Rotation& g : round) kt.rotate_pair(a.row(g.p).data(), a.row(g.q).data(), g.c, g.s, dim);
            for (std::size_t row = 0; row < dim; ++row) {
                double* ar = a.row(row).data();
                for (const Rotation& g : round) {
                    const double x = ar[g.p];
                    const double y = ar[g.q];
                    ar[g.p] = g.c * x - g.s * y;
                    ar[g.q] = g.s * x + g.c * y;
                }
            }
            for (const Rotation& g : round) {
                a(g.p, g.p) = g.new_pp;
                a(g.q, g.q) = g.new_qq;
                a(g.p, g.q) = 0.0;
                a(g.q, g.p) = 0.0;
                if (want_vectors)
                    kt.rotate_pair(out.vectors.row(g.p).data(), out.vectors.row(g.q).data(), g.c, g.s, dim);
            }
            std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
        }
    }
    out.values.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) out.values[k] = a(k, k);
    return out;
}

std::vector<double> jacobi_eigenvalues(DenseMatrix a, double rel_tol) {
    auto values = jacobi_eigen(std::move(a), false, rel_tol).values;
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace starprof
