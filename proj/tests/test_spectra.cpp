#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "oracles.hpp"
#include "starprof/error.hpp"
#include "starprof/spectra.hpp"

using namespace starprof;

namespace {

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

/// Eigenvalue -> multiplicity from the closed forms, as doubles.
std::map<double, long> formula_multiset(Chain chain, int n) {
    std::map<double, long> out;
    for (const auto& [eig, mult] : eigenvalue_multiset(chain, n)) out[eig.value()] += mult.convert_to<long>();
    return out;
}

/// Eigenvalue -> multiplicity from an Eigen solve of the dense matrix, binned at 1e-6.
std::map<double, long> numeric_multiset(bool star, int n) {
    const auto values = oracle::sorted_eigenvalues(oracle::dense_chain(star, n));
    std::map<double, long> out;
    double anchor = values(0);
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        if (values(k) - anchor > 1e-6) anchor = values(k);
        ++out[anchor];
    }
    return out;
}

void check_multisets_match(const std::map<double, long>& formula, const std::map<double, long>& numeric) {
    REQUIRE(formula.size() == numeric.size());
    auto f = formula.begin();
    for (auto m = numeric.begin(); m != numeric.end(); ++m, ++f) {
        CHECK(std::abs(m->first - f->first) <= 1e-8);
        CHECK(m->second == f->second);
    }
}

}  // namespace

TEST_CASE("random-transposition eigenvalues") {
    const auto triv = rt_eigenvalue(Partition{6});
    CHECK(triv.r == Fraction{1, 1});
    CHECK(triv.s == Fraction{1, 1});
    CHECK(*triv.mult == 1);

    CHECK(rt_eigenvalue(ones(4)).s == Fraction{-1, 2});

    const auto e = rt_eigenvalue(Partition{4, 1});
    CHECK(e.s == Fraction{3, 5});
    CHECK(*e.mult == 16);

    CHECK_THROWS_AS(rt_eigenvalue(Partition{1}), DomainError);
}

TEST_CASE("star-transposition eigenvalues") {
    const auto e = star_eigenvalues(Partition{4, 1});
    REQUIRE(e.size() == 2);
    CHECK(e[0].corner_row == 1);
    CHECK(e[0].s_bar == Fraction{4, 5});
    CHECK(*e[0].mult == 12);
    CHECK(e[1].corner_row == 2);
    CHECK(e[1].s_bar == Fraction{0, 1});
    CHECK(*e[1].mult == 4);

    const auto triv = star_eigenvalues(Partition{7});
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].s_bar == Fraction{1, 1});
    CHECK(*triv[0].mult == 1);

    const auto sign = star_eigenvalues(ones(4));
    REQUIRE(sign.size() == 1);
    CHECK(sign[0].corner_row == 4);
    CHECK(sign[0].s_bar == Fraction{-1, 2});
    CHECK(*sign[0].mult == 1);

    CHECK_THROWS_AS(star_eigenvalues(Partition{1}), DomainError);
}

TEST_CASE("fractions normalize") {
    CHECK(Fraction::make(6, -4) == Fraction{-3, 2});
    CHECK(Fraction::make(0, 7) == Fraction{0, 1});
    CHECK(Fraction{1, 3} < Fraction{1, 2});
    CHECK_THROWS(Fraction::make(1, 0));
}

TEST_CASE("full spectra at n = 3 match a dense eigensolve") {
    using M = std::map<double, long>;
    const M rt = formula_multiset(Chain::rt, 3);
    CHECK(rt == M{{-1.0 / 3, 1}, {1.0 / 3, 4}, {1.0, 1}});
    const M star = formula_multiset(Chain::star, 3);
    CHECK(star == M{{-1.0 / 3, 1}, {0.0, 2}, {2.0 / 3, 2}, {1.0, 1}});
    for (int n = 3; n <= 5; ++n) {
        check_multisets_match(formula_multiset(Chain::rt, n), numeric_multiset(false, n));
        check_multisets_match(formula_multiset(Chain::star, n), numeric_multiset(true, n));
    }
}

TEST_CASE("full_spectrum blocks") {
    const auto blocks = full_spectrum(Chain::star, 6);
    CHECK(blocks.size() == 11);
    for (const auto& b : blocks) {
        BigInt sum = 0;
        for (const auto& e : b.star) sum += *e.mult;
        CHECK(sum == *b.rt.mult);
    }
    CHECK(full_spectrum(Chain::rt, 6).front().star.empty());
    CHECK_THROWS_AS(full_spectrum(Chain::rt, 1), DomainError);
    CHECK_THROWS_AS(full_spectrum(Chain::rt, 101), SizeLimitError);
}

TEST_CASE("completeness and trace") {
    CHECK(spectrum_trace(Chain::rt, 4) == 6);
    CHECK(spectrum_trace(Chain::star, 4) == 6);
    CHECK(spectrum_trace(Chain::star, 12) == factorial(11).convert_to<Rational>());
    for (int n = 2; n <= 12; ++n)
        for (Chain chain : {Chain::rt, Chain::star}) {
            CHECK(spectrum_total_multiplicity(chain, n) == factorial(n));
            CHECK(spectrum_trace(chain, n) == factorial(n - 1).convert_to<Rational>());
        }
    CHECK_THROWS_AS(spectrum_trace(Chain::rt, 13), SizeLimitError);
}

TEST_CASE("r invariants and transpose antisymmetry") {
    for (int n = 2; n <= 20; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            const auto e = rt_eigenvalue(p);
            const Rational r = e.r.exact();
            CHECK(e.s.exact() == Rational(1, n) + Rational(n - 1, n) * r);
            CHECK(r >= -1);
            CHECK(r <= 1);
            CHECK((r == 1) == (p == Partition{n}));
            CHECK(rt_eigenvalue(transpose(p)).r.exact() == -r);

            const auto conj = transpose(p);
            for (const auto& corner : corners(p)) {
                const int lambda_i = p.row(static_cast<std::size_t>(corner.row));
                const Fraction rbar = star_r_of(p.view(), corner.row, n);
                CHECK(rbar.exact() == Rational(lambda_i - corner.row, n - 1));
                CHECK(star_r_of(conj.view(), lambda_i, n).exact() == -rbar.exact());
            }
        }
}

TEST_CASE("near-trivial eigenvalues are 1 - 2j/n up to 12/n^2") {
    // s - (1 - 2j/n) = (j^2 - j + 2 cont(mu)) / n^2 for lambda = (n - j, mu); the maximum over
    // j <= 3 is 12, reached at mu = (3).
    constexpr double kC = 12.0;
    for (int n : {50, 100, 200})
        for (int j = 1; j <= 3; ++j) {
            double worst = 0.0;
            for (const auto& mu : enumerate_partitions(j)) {
                std::vector<int> parts{n - j};
                parts.insert(parts.end(), mu.view().begin(), mu.view().end());
                const Rational s = rt_eigenvalue_of(parts, n).exact();
                const Rational gap = abs(s - (1 - Rational(2 * j, n)));
                const double scaled = (gap * n * n).convert_to<double>();
                CHECK(scaled <= kC);
                worst = std::max(worst, scaled);
            }
            if (j == 3) CHECK(worst == kC);
        }
}

TEST_CASE("log blocks agree with exact blocks") {
    const auto blocks = full_spectrum(Chain::star, 9);
    std::size_t k = 0;
    for_each_log_block(9, [&](const LogBlock& b) {
        REQUIRE(k < blocks.size());
        const auto& ref = blocks[k++];
        CHECK(std::equal(b.parts.begin(), b.parts.end(), ref.lambda.view().begin(), ref.lambda.view().end()));
        CHECK(b.lambda1 == ref.lambda.first());
        CHECK(b.conj_lambda1 == static_cast<int>(ref.lambda.length()));
        CHECK(b.s == ref.rt.s);
        CHECK(2 * b.log_dim == doctest::Approx(ref.rt.log_mult).epsilon(1e-12));
        REQUIRE(b.corners.size() == ref.star.size());
        for (std::size_t i = 0; i < b.corners.size(); ++i) {
            CHECK(b.corners[i].row == ref.star[i].corner_row);
            CHECK(b.corners[i].s_bar == ref.star[i].s_bar);
            CHECK(b.log_dim + b.corners[i].log_dim_reduced ==
                  doctest::Approx(ref.star[i].log_mult).epsilon(1e-12));
        }
    });
    CHECK(k == blocks.size());
}
