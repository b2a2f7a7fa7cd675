#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"
#include "indcx/types.hpp"

using namespace indcx::cli;

int main(int argc, char** argv) {
    CLI::App app{"indcx: independence complexes and hard particles at activity -1 on grid graphs"};
    app.require_subcommand(1);

    Context cx;
    cx.out = &std::cout;
    cx.err = &std::cerr;
    cx.budgets.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string format = "tsv";

    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--budget-faces", cx.budgets.faces, "Largest complex to materialize")->capture_default_str();
    app.add_option("--budget-brute", cx.budgets.brute, "Largest vertex count for explicit enumeration")
        ->capture_default_str();
    app.add_option("--budget-dim", cx.budgets.dim, "Largest transfer matrix")->capture_default_str();
    app.add_option("--budget-series", cx.budgets.series, "Generating function terms")->capture_default_str();
    app.add_option("--jobs,-j", cx.budgets.jobs, "Worker threads");

    std::string family = "square_cyl", mr = "1-4", nr = "2-8:2", method = "auto";
    bool check = false;

    auto* part = app.add_subcommand("partition", "Z = sum over independent sets of (-1)^|I|");
    part->add_option("--family", family, "square_rect, square_cyl, square_torus, hex_rect, hex_cyl, hex_torus, parallelogram")
        ->capture_default_str();
    part->add_option("--m", mr, "Range such as 1-11, 2-24:2 or 3,5")->capture_default_str();
    part->add_option("--n", nr, "Range")->capture_default_str();
    part->add_option("--method", method)->check(CLI::IsMember({"auto", "transfer", "frontier", "enumerate"}))
        ->capture_default_str();
    part->add_flag("--check", check, "Recompute by independent methods where in budget");

    auto* hom = app.add_subcommand("homology", "Reduced integer homology of I(G), as (k,d) entries");
    hom->add_option("--family", family)->capture_default_str();
    hom->add_option("--m", mr)->capture_default_str();
    hom->add_option("--n", nr)->capture_default_str();

    int m = 4, n = 4;
    auto* cp = app.add_subcommand("charpoly", "Characteristic polynomial det(tI - T) of a transfer matrix");
    cp->add_option("--family", family, "square_cyl, hex_cyl, hex_torus, path (T'), strip (T)")->capture_default_str();
    cp->add_option("--m", m)->capture_default_str();

    auto* mo = app.add_subcommand("morse", "Build and check a matching tree, or the M_O matching");
    std::string tree = "C4";
    mo->add_option("--family", tree, "C2, C3, C4, C5, H2, example, mo[:graph family]")->capture_default_str();
    mo->add_option("--m", m)->capture_default_str();
    mo->add_option("--n", n, "Columns for mo")->capture_default_str();

    auto* gf = app.add_subcommand("genfun", "Strip generating functions G_{A,B}(t) and rational fits");
    std::string A, B;
    int terms = 0;
    bool trace = false, nofit = false;
    gf->add_option("--m", m)->capture_default_str();
    gf->add_option("--A", A, "Left boundary rows, e.g. 2,3");
    gf->add_option("--B", B, "Right boundary rows");
    gf->add_option("--terms", terms, "Series length (default --budget-series)");
    gf->add_flag("--trace", trace, "Sum of G_{A,A} over all A");
    gf->add_flag("--no-fit", nofit);

    std::string suite;
    auto* ver = app.add_subcommand("verify", "Run a check suite");
    ver->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"conjecture1", "conjecture2", "conjecture5", "morse", "genfun", "tables"}));

    int table = 3;
    auto* rep = app.add_subcommand("reproduce", "Recompute a reference table and compare");
    rep->add_option("table", table, "1 2 3 5 6 7 8 9")->required();
    rep->add_option("--enumerate", cx.budgets.enumerate, "Face budget for enumerating Q2 in table 9 (0 = off)");

    CLI11_PARSE(app, argc, argv);
    cx.format = format == "json" ? Format::Json : Format::Tsv;

    try {
        if (*part) return cmd_partition(cx, family, parse_range(mr), parse_range(nr), method, check);
        if (*hom) return cmd_homology(cx, family, parse_range(mr), parse_range(nr));
        if (*cp) return cmd_charpoly(cx, family, m);
        if (*mo) return cmd_morse(cx, tree, m, n);
        if (*gf)
            return cmd_genfun(cx, m, parse_rows(A), parse_rows(B), terms > 0 ? terms : cx.budgets.series, trace, !nofit);
        if (*ver) return cmd_verify(cx, suite);
        if (*rep) return cmd_reproduce(cx, table);
    } catch (const indcx::BudgetExceeded& e) {
        std::cerr << "out of budget: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
