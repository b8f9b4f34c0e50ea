#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hsk/commands.hpp"

namespace {

int emit(const hsk::Report& rep, const hsk::CommonOpts& opts, const std::string& out_path) {
    const std::string rendered = hsk::render(rep, opts.format, opts.timings);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return 2;
        }
        f << rendered;
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Laurent profiles and numeric oracles for disc-bundle kernels over "
                 "compact Hermitian symmetric spaces"};
    app.require_subcommand(1);

    std::string format = "text", out_path;
    std::uint64_t seed = 42;
    double tol = -1.0;
    bool timings = false;
    long max_l = 8;
    app.add_option("--format", format, "output format: text, json or csv")->capture_default_str();
    app.add_option("--seed", seed, "seed for all randomized sweeps")->capture_default_str();
    app.add_option("--tol", tol, "override the per-suite numeric tolerances");
    app.add_option("--max-l", max_l, "size bound: k+m for I(k,m) rows, l for the topology sweep")
        ->capture_default_str();
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_flag("--timings", timings, "include wall-clock fields in the report");

    auto* c_cat = app.add_subcommand("catalog", "list spaces with derived invariants");
    c_cat->fallthrough();  // global flags may follow the subcommand
    std::string family;
    c_cat->add_option("--family", family, "restrict to one family: I, II, III, IV, EIII, EVII");

    auto* c_exp = app.add_subcommand("expand", "exact kernel expansion for one space");
    c_exp->fallthrough();
    std::string label, kind = "szego";
    long mu = 1;
    c_exp->add_option("space", label, "space label, e.g. I(2,2) or IV(5)")->required();
    c_exp->add_option("kind", kind, "szego or bergman");
    c_exp->add_option("mu", mu, "bundle power, >= 1");

    auto* c_ver = app.add_subcommand("verify", "run a numeric verification suite");
    c_ver->fallthrough();
    std::string suite = "all";
    c_ver->add_option("suite", suite, "oracle|monge-ampere|quadrature|detB|transform|all");

    auto* c_top = app.add_subcommand("topology", "Betti obstruction sweep and lens tables");
    c_top->fallthrough();
    std::vector<long> lens_args;
    c_top->add_option("--lens", lens_args, "emit the cohomology table of S^(2n+1)/Z_m for n m")
        ->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
    }

    hsk::CommonOpts opts;
    opts.seed = seed;
    opts.timings = timings;
    if (tol > 0.0) opts.tol = tol;

    try {
        opts.format = hsk::parse_format(format);
        if (c_cat->parsed()) {
            std::optional<std::string> fam;
            if (!family.empty()) fam = family;
            return emit(hsk::cmd_catalog(fam, max_l, opts), opts, out_path);
        }
        if (c_exp->parsed()) return emit(hsk::cmd_expand(label, kind, mu, opts), opts, out_path);
        if (c_ver->parsed()) return emit(hsk::cmd_verify(suite, opts), opts, out_path);
        if (c_top->parsed()) {
            std::optional<std::pair<long, long>> lens;
            if (!lens_args.empty()) lens = std::make_pair(lens_args[0], lens_args[1]);
            return emit(hsk::cmd_topology(max_l, lens, opts), opts, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
