#include "polysparse/closure.hpp"
#include "polysparse/experiments.hpp"
#include "polysparse/families.hpp"
#include "polysparse/io.hpp"
#include "polysparse/metrics.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace polysparse;
namespace ex = polysparse::experiments;

namespace {

enum Exit { success = 0, check_failure = 1, input_error = 2, resource_refusal = 3 };

struct Common {
    std::string out;
    std::string format = "jsonl";
};

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_text(out, text);
}

int emit_report(const ex::ExperimentReport& rep, const Common& c)
{
    std::string text;
    if (c.format == "json")
        text = ex::to_json(rep);
    else if (c.format == "csv")
        text = ex::to_csv(rep);
    else
        text = ex::to_jsonl(rep);
    emit(text, c.out);
    std::cerr << rep.name << ": " << (rep.passed() ? "all checks passed" : "CHECK FAILURE") << ", wall time "
              << rep.wall_seconds << " s\n";
    if (!rep.passed())
        for (const auto& chk : rep.checks)
            if (!chk.pass)
                std::cerr << "  failed: " << chk.name << (chk.detail.empty() ? "" : " (" + chk.detail + ")") << "\n";
    return rep.passed() ? success : check_failure;
}

ex::Json rational_vector(const QVector& v)
{
    ex::Json a = ex::Json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

QVector parse_direction(const std::string& text, std::size_t dim)
{
    std::istringstream in(text);
    QVector c;
    for (std::string tok; in >> tok;) {
        try {
            c.push_back(parse_rational(tok));
        } catch (const std::invalid_argument&) {
            throw ParseError("direction: bad number '" + tok + "'");
        }
    }
    if (c.size() != dim)
        throw ParseError("direction: expected " + std::to_string(dim) + " entries, got " + std::to_string(c.size()));
    return c;
}

void add_format(CLI::App* app, Common& c)
{
    app->add_option("--out", c.out, "Output file (stdout when omitted)");
    app->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "jsonl", "csv"}));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact sparse-closure toolkit and experiment harness"};
    app.require_subcommand(1);
    Common common;
    std::function<int()> action;

    // family
    std::string family_name;
    std::size_t fam_n = 0, fam_t = 0, fam_k = 0;
    auto* family = app.add_subcommand("family", "Write one of the built-in polytope families as .hpoly");
    family->add_option("--name", family_name, "Family")
        ->required()
        ->check(CLI::IsMember({"simplex", "qn", "symmetric", "symmetric-closure"}));
    family->add_option("-n", fam_n, "Dimension")->required();
    family->add_option("-t", fam_t, "Budget t (not used by qn)");
    family->add_option("-k", fam_k, "Sparsity (symmetric-closure only)");
    family->add_option("--out", common.out, "Output file (stdout when omitted)");
    family->callback([&] {
        action = [&] {
            HPolytope p;
            if (family_name == "simplex")
                p = families::make_simplex_family(fam_t, fam_n);
            else if (family_name == "qn")
                p = families::make_qn(fam_n);
            else if (family_name == "symmetric")
                p = families::make_symmetric_family(fam_t, fam_n);
            else
                p = families::make_symmetric_closure(fam_t, fam_n, fam_k);
            emit(format_hpoly(p), common.out);
            return success;
        };
    });

    // closure
    std::string input;
    std::size_t closure_k = 0;
    auto* clo = app.add_subcommand("closure", "k-sparse closure of an .hpoly polytope");
    clo->add_option("--input", input, "Input .hpoly")->required();
    clo->add_option("-k", closure_k, "Sparsity")->required();
    clo->add_option("--out", common.out, "Output file (stdout when omitted)");
    clo->callback([&] {
        action = [&] {
            emit(format_hpoly(closure::sparse_closure(read_hpoly(input), closure_k)), common.out);
            return success;
        };
    });

    // symmetrize
    std::string method = "auto";
    auto* sym = app.add_subcommand("symmetrize", "Symmetrization of a polytope in the nonnegative orthant");
    sym->add_option("--input", input, "Input .hpoly")->required();
    sym->add_option("--method", method, "Path")->check(CLI::IsMember({"auto", "fast", "generic"}));
    sym->add_option("--out", common.out, "Output file (stdout when omitted)");
    sym->callback([&] {
        action = [&] {
            const auto m = method == "fast"      ? closure::SymmetrizeMethod::fast
                           : method == "generic" ? closure::SymmetrizeMethod::generic
                                                 : closure::SymmetrizeMethod::automatic;
            emit(format_hpoly(closure::symmetrize(read_hpoly(input), m)), common.out);
            return success;
        };
    });

    // budgeted-closure
    std::string cuts_file;
    auto* bud = app.add_subcommand("budgeted-closure", "k-sparse closure intersected with certified dense cuts");
    bud->add_option("--input", input, "Input .hpoly")->required();
    bud->add_option("-k", closure_k, "Sparsity")->required();
    bud->add_option("--cuts", cuts_file, "Cuts as .hpoly rows")->required();
    bud->add_option("--out", common.out, "Output file (stdout when omitted)");
    bud->callback([&] {
        action = [&] {
            const HPolytope p = read_hpoly(input);
            const auto d = closure::CutSet::certified(p, read_hpoly(cuts_file).ineqs, cuts_file);
            emit(format_hpoly(closure::budgeted_closure(p, closure_k, d)), common.out);
            return success;
        };
    });

    // hausdorff
    std::string inner_file, outer_file;
    auto* hd = app.add_subcommand("hausdorff", "Exact Hausdorff distance of nested polytopes");
    hd->add_option("--inner", inner_file, "Inner .hpoly")->required();
    hd->add_option("--outer", outer_file, "Outer .hpoly")->required();
    hd->add_option("--out", common.out, "Output file (stdout when omitted)");
    hd->callback([&] {
        action = [&] {
            const auto r = metrics::hausdorff_sq(read_hpoly(inner_file), read_hpoly(outer_file));
            ex::Json j;
            j["sq_dist"] = to_string(r.sq_dist);
            j["dist_float"] = r.dist();
            j["witness_outer"] = rational_vector(r.witness_outer);
            j["witness_inner"] = rational_vector(r.witness_inner);
            emit(j.dump(2) + "\n", common.out);
            return success;
        };
    });

    // gap
    std::string direction;
    auto* gp = app.add_subcommand("gap", "Directional gap between nested polytopes");
    gp->add_option("--inner", inner_file, "Inner .hpoly")->required();
    gp->add_option("--outer", outer_file, "Outer .hpoly")->required();
    gp->add_option("--direction", direction, "Direction, e.g. \"1 -1/2 0\"")->required();
    gp->add_option("--out", common.out, "Output file (stdout when omitted)");
    gp->callback([&] {
        action = [&] {
            const HPolytope inner = read_hpoly(inner_file);
            const auto g = metrics::gap(inner, read_hpoly(outer_file), parse_direction(direction, inner.dim));
            ex::Json j;
            j["direction"] = rational_vector(g.direction);
            j["support_outer"] = to_string(g.support_outer);
            j["support_inner"] = to_string(g.support_inner);
            j["gap"] = to_string(g.gap);
            j["gap_float"] = to_double(g.gap);
            emit(j.dump(2) + "\n", common.out);
            return success;
        };
    });

    // experiment
    auto* exp = app.add_subcommand("experiment", "Seeded experiment drivers");
    exp->require_subcommand(1);

    std::size_t lp_n = 4;
    auto* lp = exp->add_subcommand("lp-relax", "Exact distance of the half cube to its sparse closure cut by Q_n");
    lp->add_option("-n", lp_n, "Even dimension <= 6");
    add_format(lp, common);
    lp->callback([&] { action = [&] { return emit_report(ex::run_lp_relax(lp_n), common); }; });

    ex::DenseBudgetParams dbp;
    std::string db_cuts;
    auto* db = exp->add_subcommand("dense-budget", "Survival of (2/3)X under dense valid cuts");
    db->add_option("-n", dbp.n, "Even dimension");
    db->add_option("-k", dbp.k, "Sparsity, k <= n/2");
    db->add_option("-d", dbp.d, "Number of generated cuts");
    db->add_option("--samples", dbp.samples, "Number of sampled sign vectors");
    db->add_option("--seed", dbp.seed, "Master seed");
    db->add_flag("--exhaustive", dbp.exhaustive, "Enumerate all of {-1,1}^n (n <= 16)");
    db->add_option("--cuts", db_cuts, "Cuts as .hpoly rows instead of generated ones");
    db->add_option("--workers", dbp.workers, "Worker threads");
    add_format(db, common);
    db->callback([&] {
        action = [&] {
            if (!db_cuts.empty())
                dbp.cuts = read_hpoly(db_cuts).ineqs;
            return emit_report(ex::run_dense_budget(dbp), common);
        };
    });

    ex::RotationParams rp;
    auto* rot = exp->add_subcommand("rotation", "Exact closure distance for Cayley-rotated symmetric families");
    rot->add_option("-n", rp.n, "Dimension <= 5");
    rot->add_option("-t", rp.t, "Budget t");
    rot->add_option("-k", rp.k, "Sparsity, k < n");
    rot->add_option("--rotations", rp.rotations, "Number of sampled rotations");
    rot->add_option("--samples", rp.rotations, "Alias of --rotations");
    rot->add_option("--seed", rp.seed, "Master seed");
    rot->add_option("--skew-bound", rp.skew_entry_bound, "Bound on numerators and denominators of skew entries");
    rot->add_option("--permutations", rp.permutations, "Number of permutation checks");
    rot->add_option("--workers", rp.workers, "Worker threads");
    add_format(rot, common);
    rot->callback([&] { action = [&] { return emit_report(ex::run_rotation(rp), common); }; });

    ex::DirectionalParams dp;
    bool no_sample_records = false;
    auto* dir = exp->add_subcommand("directional", "Monte Carlo directional gap on the sphere");
    dir->add_option("-n", dp.n, "Dimension, a multiple of 10");
    dir->add_option("-t", dp.t, "Budget, n/10");
    dir->add_option("-k", dp.k, "Sparsity, k <= t");
    dir->add_option("--samples", dp.samples, "Number of Gaussian directions");
    dir->add_option("--seed", dp.seed, "Master seed");
    dir->add_option("--workers", dp.workers, "Worker threads");
    dir->add_option("--cross-check", dp.cross_check, "Directions re-checked exactly (n <= 20)");
    dir->add_option("--bins", dp.bins, "Histogram bins for --format csv");
    dir->add_flag("--no-sample-records", no_sample_records, "Omit per-sample JSONL records");
    add_format(dir, common);
    dir->callback([&] {
        action = [&] {
            dp.per_sample_records = !no_sample_records;
            return emit_report(ex::run_directional(dp), common);
        };
    });

    // verify
    ex::VerifyParams vp;
    auto* ver = app.add_subcommand("verify", "Run every exact oracle-equivalence suite");
    ver->add_option("--max-n", vp.max_n, "Largest dimension, <= 6");
    ver->add_option("--seed", vp.seed, "Seed for sampled directions and random corpus members");
    ver->add_option("--samples", vp.gap_samples, "Random directions per distance/gap pair");
    ver->add_flag("--inject-bug", vp.inject_bug, "Test only: corrupt one input so the suite must fail");
    add_format(ver, common);
    ver->callback([&] { action = [&] { return emit_report(ex::verify_suite(vp), common); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? success : input_error;
    }

    try {
        return action();
    } catch (const ex::ResourceRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return resource_refusal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
}
