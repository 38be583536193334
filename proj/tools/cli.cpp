#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "starprof/csv.hpp"
#include "starprof/error.hpp"
#include "starprof/exact_chain.hpp"
#include "starprof/profile.hpp"
#include "starprof/spectra.hpp"
#include "verify.hpp"

namespace starprof::cli {

namespace {

struct Options {
    std::string chain = "star";
    int n = 0;
    double c = 0.0;
    int M = 0;
    double c_min = -4.0;
    double c_max = 4.0;
    double step = 1.0;
    // l2 grid: c >= 0 keeps the cutoff times nonnegative for every n >= 2
    double l2_c_min = 0.0;
    double l2_c_max = 4.0;
    double l2_step = 0.5;
    int t_max = 60;
    std::string out_path;
    std::string format = "csv";
};

std::string mult_cell(const std::optional<BigInt>& exact, double log_mult) {
    return exact ? exact->str() : format_double(std::exp(log_mult));
}

Table spectrum_table(const Options& o) {
    const Chain chain = parse_chain(o.chain);
    Table table({"partition", "eigenvalue", "multiplicity", "chain"});
    const std::string name(to_string(chain));
    for (const SpectralBlock& b : full_spectrum(chain, o.n)) {
        if (chain == Chain::rt) {
            table.add_row({b.lambda.to_string(), format_double(b.rt.s.value()), mult_cell(b.rt.mult, b.rt.log_mult), name});
            continue;
        }
        for (const StarEig& e : b.star)
            table.add_row({b.lambda.to_string(), format_double(e.s_bar.value()), mult_cell(e.mult, e.log_mult), name});
    }
    return table;
}

Table bound_table(const BoundReport& r) {
    Table table({"n", "c", "t", "tstar", "total", "term1", "term2", "term3", "term4"});
    table.add_row({std::to_string(r.n), format_double(r.c), std::to_string(r.t), std::to_string(r.t_star),
                   format_double(r.total), format_double(r.parts[0]), format_double(r.parts[1]),
                   format_double(r.parts[2]), format_double(r.parts[3])});
    return table;
}

Table profile_table(const Options& o) {
    Table table({"c", "phi"});
    for (const ProfilePoint& p : profile_curve(o.c_min, o.c_max, o.step))
        table.add_row({format_double(p.c), format_double(p.value)});
    return table;
}

Table exact_tv_table(const Options& o) {
    const Chain chain = parse_chain(o.chain);
    if (o.t_max < 0) throw DomainError("--t-max must be nonnegative");
    const auto traj = evolve_trajectory(build_matrix(chain, o.n), o.t_max);
    Table table({"n", "chain", "t", "tv"});
    for (int t = 0; t <= o.t_max; ++t)
        table.add_row({std::to_string(o.n), std::string(to_string(chain)), std::to_string(t),
                       format_double(tv_to_uniform(traj[static_cast<std::size_t>(t)]))});
    return table;
}

Table compare_table(const Options& o) {
    if (o.n > kMaxEvolveN) throw SizeLimitError("compare needs n <= 8 for exact evolution");
    const CutoffTimes ct = cutoff_times(o.n, o.c);
    const PermIndex id{0, o.n};
    const DistVector q = evolve(build_matrix(Chain::rt, o.n), id, ct.t);
    const DistVector p = evolve(build_matrix(Chain::star, o.n), id, ct.t_star);
    const double tv_rt = tv_to_uniform(q);
    const double tv_star = tv_to_uniform(p);
    const BoundReport bound = comparison_bound(o.n, o.c);
    Table table({"n", "c", "t", "tstar", "tv_rt", "tv_star", "gap", "tv_pair", "bound"});
    table.add_row({std::to_string(o.n), format_double(o.c), std::to_string(ct.t), std::to_string(ct.t_star),
                   format_double(tv_rt), format_double(tv_star), format_double(std::fabs(tv_star - tv_rt)),
                   format_double(tv_between(q, p)), format_double(bound.total)});
    return table;
}

Table l2_table(const Options& o) {
    const Chain chain = parse_chain(o.chain);
    Table table({"n", "chain", "c", "t", "bound"});
    for (const ProfilePoint& p : profile_curve(o.l2_c_min, o.l2_c_max, o.l2_step)) {
        const int t = cutoff_time(chain, o.n, p.c);
        table.add_row({std::to_string(o.n), std::string(to_string(chain)), format_double(p.c), std::to_string(t),
                       format_double(l2_bound(chain, o.n, t))});
    }
    return table;
}

Table verify_table(const Options& o, bool& all_passed) {
    Table table({"check", "result", "detail"});
    all_passed = true;
    for (const CheckResult& r : verify_suite(o.n)) {
        all_passed = all_passed && r.status != CheckStatus::fail;
        table.add_row({r.name, std::string(to_string(r.status)), r.detail});
    }
    return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectra, comparison bounds and limit profiles of random and star transpositions"};
    app.require_subcommand(1);
    Options o;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "pretty"}));
    };

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and multiplicities, one row per block");
    spectrum->add_option("--chain", o.chain, "rt or star")->check(CLI::IsMember({"rt", "star"}));
    spectrum->add_option("--n", o.n, "Deck size")->required();
    add_output(spectrum);

    auto* bound = app.add_subcommand("bound", "Comparison bound at the cutoff times for (n, c)");
    bound->add_option("--n", o.n, "Deck size")->required();
    bound->add_option("--c", o.c, "Window parameter")->required();
    add_output(bound);

    auto* decompose = app.add_subcommand("decompose", "Four-term error decomposition at truncation rank M");
    decompose->add_option("--n", o.n, "Deck size")->required();
    decompose->add_option("--c", o.c, "Window parameter")->required();
    decompose->add_option("--M", o.M, "Truncation rank")->required();
    add_output(decompose);

    auto* profile = app.add_subcommand("profile", "Poisson limit profile on a grid of c");
    profile->add_option("--c-min", o.c_min, "Grid start");
    profile->add_option("--c-max", o.c_max, "Grid end (inclusive)");
    profile->add_option("--step", o.step, "Grid step");
    add_output(profile);

    auto* exact_tv = app.add_subcommand("exact-tv", "Exact TV distance to uniform from the identity");
    exact_tv->add_option("--chain", o.chain, "rt or star")->check(CLI::IsMember({"rt", "star"}));
    exact_tv->add_option("--n", o.n, "Deck size")->required();
    exact_tv->add_option("--t-max", o.t_max, "Last step");
    add_output(exact_tv);

    auto* compare = app.add_subcommand("compare", "Exact |tv_star - tv_rt| at the cutoff times against the bound");
    compare->add_option("--n", o.n, "Deck size")->required();
    compare->add_option("--c", o.c, "Window parameter")->required();
    add_output(compare);

    auto* l2 = app.add_subcommand("l2", "Classic l2 upper bound on TV at the chain's cutoff times");
    l2->add_option("--chain", o.chain, "rt or star")->check(CLI::IsMember({"rt", "star"}));
    l2->add_option("--n", o.n, "Deck size")->required();
    l2->add_option("--c-min", o.l2_c_min, "Grid start");
    l2->add_option("--c-max", o.l2_c_max, "Grid end (inclusive)");
    l2->add_option("--step", o.l2_step, "Grid step");
    add_output(l2);

    auto* verify = app.add_subcommand("verify", "Run the identity suite at deck size n");
    verify->add_option("--n", o.n, "Deck size")->required();
    add_output(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        const OutputFormat format = parse_format(o.format);
        bool ok = true;
        std::optional<Table> table;
        if (*spectrum) table = spectrum_table(o);
        else if (*bound) table = bound_table(comparison_bound(o.n, o.c));
        else if (*decompose) table = bound_table(comparison_bound(o.n, o.c, o.M));
        else if (*profile) table = profile_table(o);
        else if (*exact_tv) table = exact_tv_table(o);
        else if (*compare) table = compare_table(o);
        else if (*l2) table = l2_table(o);
        else if (*verify) table = verify_table(o, ok);

        if (o.out_path.empty()) {
            table->write(out, format);
        } else {
            std::ofstream file(o.out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open " << o.out_path << " for writing\n";
                return kExitGuard;
            }
            table->write(file, format);
        }
        return ok ? kExitOk : kExitGuard;
    } catch (const std::logic_error& e) {
        // DomainError, SizeLimitError and std::invalid_argument all derive from logic_error
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    }
}

}  // namespace starprof::cli
