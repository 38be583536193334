#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "starprof/csv.hpp"
#include "starprof/error.hpp"
#include "starprof/exact_chain.hpp"
#include "starprof/partition.hpp"
#include "starprof/profile.hpp"
#include "starprof/spectra.hpp"

namespace starprof::cli {

namespace {

constexpr int kPairedTimeMax = 40;

std::string big(const BigInt& v) { return v.str(); }

// p(n) from Euler's pentagonal recurrence.
BigInt partition_count(int n) {
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const int sign = (k % 2) ? 1 : -1;
            p[m] += sign * p[m - g1];
            const int g2 = k * (3 * k + 1) / 2;
            if (g2 <= m) p[m] += sign * p[m - g2];
        }
    }
    return p[n];
}

CheckResult run_check(const std::string& name, const std::function<std::string(bool&)>& body) {
    CheckResult r{name, CheckStatus::pass, {}};
    bool ok = true;
    try {
        r.detail = body(ok);
        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        r.detail = e.what();
    }
    return r;
}

CheckResult skipped(const std::string& name, const std::string& why) {
    return {name, CheckStatus::skip, why};
}

std::vector<double> expand(Chain chain, int n) {
    std::vector<double> values;
    for (const auto& [eig, mult] : eigenvalue_multiset(chain, n))
        values.insert(values.end(), mult.convert_to<std::size_t>(), eig.value());
    return values;
}

}  // namespace

std::string_view to_string(CheckStatus status) noexcept {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}

std::vector<CheckResult> verify_suite(int n) {
    if (n < 2) throw DomainError("verify needs n >= 2");
    if (n > kMaxVerifyN) throw SizeLimitError("verify supports n <= " + std::to_string(kMaxVerifyN));

    const std::vector<Partition> parts = enumerate_partitions(n);
    const BigInt n_fact = factorial(n);
    std::vector<CheckResult> out;

    out.push_back(run_check("partition_count", [&](bool& ok) {
        const BigInt expected = partition_count(n);
        ok = BigInt(parts.size()) == expected;
        return std::to_string(parts.size()) + " partitions, pentagonal recurrence " + big(expected);
    }));

    out.push_back(run_check("dimension_square_sum", [&](bool& ok) {
        BigInt s = 0;
        for (const auto& p : parts) {
            const BigInt d = exact_dim(p);
            s += d * d;
        }
        ok = s == n_fact;
        return "sum d^2 = " + big(s) + ", n! = " + big(n_fact);
    }));

    out.push_back(run_check("branching_rule", [&](bool& ok) {
        int bad = 0;
        for (const auto& p : parts) {
            BigInt s = 0;
            for (const auto& c : corners(p)) s += exact_dim(c.reduced);
            bad += s != exact_dim(p);
        }
        ok = bad == 0;
        return std::to_string(bad) + " violations";
    }));

    out.push_back(run_check("transpose_duality", [&](bool& ok) {
        int bad = 0;
        for (const auto& p : parts) {
            const Partition conj = transpose(p);
            for (const auto& c : corners(p)) {
                // the corner (i, lambda_i) of lambda is the corner (lambda_i, i) of lambda'
                const auto dual = corners(conj);
                const auto it = std::find_if(dual.begin(), dual.end(),
                                             [&](const Corner& d) { return d.row == p.row(c.row); });
                bad += it == dual.end() || exact_dim(it->reduced) != exact_dim(c.reduced);
            }
        }
        ok = bad == 0;
        return std::to_string(bad) + " violations";
    }));

    out.push_back(run_check("dimension_bounds", [&](bool& ok) {
        int bad = 0;
        for (const auto& p : parts) {
            const int j = n - p.first();
            const BigInt d = exact_dim(p);
            const BigInt c = binomial(n, j);
            bad += d * d > c * c * factorial(j);
            for (const auto& corner : corners(p)) {
                if (corner.row == 1) continue;
                bad += BigInt(n) * exact_dim(corner.reduced) > pow(BigInt(4), static_cast<unsigned>(j)) * d;
                const int num = p.row(corner.row) - corner.row + 1;
                bad += num < -j || num > n - j;
            }
        }
        ok = bad == 0;
        return std::to_string(bad) + " violations";
    }));

    out.push_back(run_check("transpose_antisymmetry", [&](bool& ok) {
        int bad = 0;
        for (const auto& p : parts) {
            const Partition conj = transpose(p);
            const Fraction r = rt_eigenvalue(p).r;
            bad += rt_eigenvalue(conj).r != Fraction{-r.num, r.den};
            for (const auto& c : corners(p)) {
                const Fraction rb = star_r_of(p.view(), c.row, n);
                bad += star_r_of(conj.view(), p.row(c.row), n) != Fraction{-rb.num, rb.den};
            }
        }
        ok = bad == 0;
        return std::to_string(bad) + " violations";
    }));

    for (Chain chain : {Chain::rt, Chain::star}) {
        const std::string suffix = std::string("_") + std::string(to_string(chain));
        out.push_back(run_check("completeness" + suffix, [&](bool& ok) {
            const BigInt total = spectrum_total_multiplicity(chain, n);
            ok = total == n_fact;
            return "sum mult = " + big(total);
        }));
        out.push_back(run_check("trace" + suffix, [&](bool& ok) {
            const Rational tr = spectrum_trace(chain, n);
            ok = tr == Rational(factorial(n - 1));
            return "trace = " + tr.str();
        }));
    }

    if (n <= kMaxEvolveN) {
        out.push_back(run_check("stochastic_symmetric", [&](bool& ok) {
            const auto q = build_matrix(Chain::rt, n);
            const auto p = build_matrix(Chain::star, n);
            ok = q.is_stochastic() && p.is_stochastic() && q.is_symmetric() && p.is_symmetric();
            return std::string(ok ? "both matrices" : "violation");
        }));
    } else {
        out.push_back(skipped("stochastic_symmetric", "n > 8"));
    }

    if (n <= kMaxDenseEigenN) {
        for (Chain chain : {Chain::rt, Chain::star}) {
            out.push_back(run_check(std::string("numeric_spectrum_") + std::string(to_string(chain)), [&](bool& ok) {
                const auto numeric = numeric_eig_multiset(build_matrix(chain, n));
                const auto formula = expand(chain, n);
                double worst = 0.0;
                ok = numeric.size() == formula.size();
                for (std::size_t k = 0; ok && k < numeric.size(); ++k)
                    worst = std::max(worst, std::fabs(numeric[k] - formula[k]));
                ok = ok && worst <= 1e-8;
                return "max deviation " + format_double(worst);
            }));
        }
    } else {
        out.push_back(skipped("numeric_spectrum", "n > 6"));
    }

    if (n <= kMaxProductN) {
        out.push_back(run_check("commutation", [&](bool& ok) {
            ok = commutation_check(n);
            return std::string(ok ? "PQ = QP exactly" : "PQ != QP");
        }));
    } else {
        out.push_back(skipped("commutation", "n > 7"));
    }

    if (n <= kMaxDenseEigenN) {
        out.push_back(run_check("comparison_inequality", [&](bool& ok) {
            double worst = -1e300;
            for (const auto& pt : paired_l2_sweep(n, kPairedTimeMax))
                worst = std::max(worst, pt.value.lhs - pt.value.rhs);
            ok = worst <= 1e-10;
            return "max(lhs - rhs) = " + format_double(worst);
        }));
    } else {
        out.push_back(skipped("comparison_inequality", "n > 6"));
    }

    out.push_back(run_check("log_space_bound", [&](bool& ok) {
        double worst = 0.0;
        for (double c : {-1.0, 0.0, 1.0}) {
            if (std::log(static_cast<double>(n)) + c < 0.0) continue;  // negative cutoff times
            const BoundReport r = comparison_bound(n, c);
            const double direct = 0.5 * paired_rhs(n, r.t, r.t_star);
            worst = std::max(worst, std::fabs(r.total - direct) / std::max(direct, 1e-300));
        }
        ok = worst <= 1e-9;
        return "max relative deviation " + format_double(worst);
    }));

    if (n <= kMaxEvolveN) {
        out.push_back(run_check("star_tv_curve", [&](bool& ok) {
            const auto traj = evolve_trajectory(build_matrix(Chain::star, n), 80);
            int bad = 0;
            double prev = 2.0;
            for (int t = 0; t <= 80; ++t) {
                const double tv = tv_to_uniform(traj[static_cast<std::size_t>(t)]);
                bad += tv > prev + 1e-12 || tv < -1e-12 || tv > 1.0 + 1e-12;
                bad += tv > std::min(1.0, l2_bound(Chain::star, n, t)) + 1e-10;
                prev = tv;
            }
            ok = bad == 0;
            return std::to_string(bad) + " violations over t = 0..80";
        }));
    } else {
        out.push_back(skipped("star_tv_curve", "n > 8"));
    }

    return out;
}

}  // namespace starprof::cli
