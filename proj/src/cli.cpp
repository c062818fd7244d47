#include "linlab/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "linlab/analysis.hpp"
#include "linlab/bounds.hpp"
#include "linlab/boolfun.hpp"
#include "linlab/search.hpp"
#include "linlab/tree.hpp"
#include "linlab/tree_io.hpp"
#include "linlab/verify.hpp"

namespace linlab {

namespace {

// Every randomized subcommand defaults to this seed; pass --seed to change.
constexpr std::uint64_t kDefaultSeed = 12345;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string prob(const Rational& r) { return r.str() + " (=" + fmt(r.to_double()) + ")"; }

int cmd_bound(double c, double q, std::ostream& out) {
    BoundReport r = bound_report(c, q);
    out << "c       = " << fmt(r.c) << "\n";
    out << "q       = " << fmt(r.q) << "\n";
    out << "phi(q)  = " << fmt(r.phi_q) << "\n";
    out << "psi(q)  = " << fmt(r.psi_q) << "\n";
    out << "s_lower = " << fmt(r.s_lower) << "\n";
    return 0;
}

int cmd_run(const std::string& test_name, std::size_t k, std::size_t n,
            const std::string& family, const std::string& fn_literal, std::uint64_t trials,
            std::uint64_t seed, const std::string& emit_tree, std::ostream& out,
            std::ostream& err) {
    if (test_name != "blr" && test_name != "kgraph") {
        err << "error: --test must be blr or kgraph\n";
        return 2;
    }
    RandomizedTest test = test_name == "blr" ? RandomizedTest::blr(n)
                                             : RandomizedTest::kgraph(k, n);
    if (!emit_tree.empty()) {
        Rng rng(seed);
        save_tree_file(emit_tree, test.draw(rng));
    }

    MonteCarloEstimate est{};
    if (family == "linear") {
        est = acceptance_monte_carlo(test, Family::linear, trials, seed);
    } else if (family == "quadratic") {
        est = acceptance_monte_carlo(test, Family::quadratic, trials, seed);
    } else if (family == "fn") {
        FnLiteral fn = parse_fn_literal(fn_literal);
        if (literal_dimension(fn) != n) {
            err << "error: function literal dimension does not match --n\n";
            return 2;
        }
        auto oracle = [fn](const F2Vector& x) {
            return std::visit([&x](const auto& f) { return f(x); }, fn);
        };
        est = acceptance_monte_carlo(test, oracle, trials, seed);
    } else {
        err << "error: --family must be linear, quadratic or fn\n";
        return 2;
    }

    out << "test      = " << test_name;
    if (test_name == "kgraph") out << "(k=" << k << ")";
    out << "\n";
    out << "n         = " << n << "\n";
    out << "family    = " << (family == "fn" ? fn_literal : family) << "\n";
    out << "trials    = " << est.trials << "\n";
    out << "seed      = " << seed << "\n";
    out << "accepts   = " << est.accepts << "\n";
    out << "estimate  = " << fmt(est.estimate) << "\n";
    out << "std_error = " << fmt(est.std_error) << "\n";
    return 0;
}

void collect_leaves(const TreeNode& node, std::vector<const TreeNode*>& leaves) {
    if (node.is_leaf()) {
        leaves.push_back(&node);
        return;
    }
    collect_leaves(*node.child[0], leaves);
    collect_leaves(*node.child[1], leaves);
}

// Counts, for every leaf in depth-first order, how many family members
// reach it; direct enumeration of the whole family.
template <class MakeFn>
std::vector<std::uint64_t> reach_counts(const TestTree& tree, std::uint64_t family_size,
                                        MakeFn&& make) {
    std::vector<const TreeNode*> leaves;
    collect_leaves(tree.root(), leaves);
    std::map<const TreeNode*, std::size_t> index;
    for (std::size_t i = 0; i < leaves.size(); ++i) index[leaves[i]] = i;

    std::vector<std::uint64_t> counts(leaves.size(), 0);
    for (std::uint64_t c = 0; c < family_size; ++c) {
        auto f = make(c);
        const TreeNode* node = &tree.root();
        while (!node->is_leaf()) node = node->child[f(node->label)].get();
        ++counts[index[node]];
    }
    return counts;
}

int cmd_analyze(const std::string& path, bool exhaustive, const std::string& json_out,
                std::ostream& out, std::ostream& err) {
    TreeDocument doc = load_tree_file(path);
    if (!std::holds_alternative<TestTree>(doc)) {
        err << "error: analyze expects a single tree file, not a randomized test\n";
        return 2;
    }
    const TestTree& tree = std::get<TestTree>(doc);
    TreeAnalysis a = analyze_tree(tree);

    out << "tree: n=" << tree.n() << " depth=" << tree.depth()
        << " leaves=" << a.leaves.size() << "\n";
    out << "path         depth verdict l  q  in_L in_Q p_lin      p_quad\n";
    for (const LeafRecord& leaf : a.leaves) {
        std::string path_str;
        for (int e : leaf.path_edges) path_str += char('0' + e);
        if (path_str.empty()) path_str = "-";
        char line[160];
        std::snprintf(line, sizeof(line), "%-12s %-5zu %-7s %-2zu %-2zu %-4s %-4s %-10s %s\n",
                      path_str.c_str(), leaf.depth, leaf.verdict ? "accept" : "reject",
                      leaf.lin_rank, leaf.quad_rank, leaf.in_l ? "yes" : "no",
                      leaf.in_q ? "yes" : "no", leaf.p_lin.str().c_str(),
                      leaf.p_quad.str().c_str());
        out << line;
    }
    out << "sum_L         = " << prob(a.sum_l) << "\n";
    out << "sum_Q         = " << prob(a.sum_q) << "\n";
    out << "lin_accept    = " << prob(a.lin_accept) << "\n";
    out << "quad_accept   = " << prob(a.quad_accept) << "\n";
    out << "avg_depth_lin = " << prob(a.avg_depth_lin) << "\n";

    if (!json_out.empty()) {
        nlohmann::json jleaves = nlohmann::json::array();
        for (const LeafRecord& leaf : a.leaves) {
            std::string path_str;
            for (int e : leaf.path_edges) path_str += char('0' + e);
            jleaves.push_back({{"path", path_str},
                               {"depth", leaf.depth},
                               {"verdict", leaf.verdict ? "accept" : "reject"},
                               {"l", leaf.lin_rank},
                               {"q", leaf.quad_rank},
                               {"in_L", leaf.in_l},
                               {"in_Q", leaf.in_q},
                               {"p_lin", leaf.p_lin.fraction_str()},
                               {"p_quad", leaf.p_quad.fraction_str()}});
        }
        nlohmann::json jdoc = {{"n", tree.n()},
                               {"leaves", std::move(jleaves)},
                               {"sum_L", a.sum_l.fraction_str()},
                               {"sum_Q", a.sum_q.fraction_str()},
                               {"lin_accept", a.lin_accept.fraction_str()},
                               {"quad_accept", a.quad_accept.fraction_str()},
                               {"avg_depth_lin", a.avg_depth_lin.fraction_str()}};
        std::ofstream jf(json_out);
        if (!jf) {
            err << "error: cannot write " << json_out << "\n";
            return 2;
        }
        jf << jdoc.dump(2) << "\n";
    }

    if (exhaustive) {
        std::size_t n = tree.n();
        if (n > 4) {
            err << "error: --exhaustive-check supports n <= 4\n";
            return 2;
        }
        std::uint64_t lin_size = std::uint64_t(1) << n;
        std::uint64_t quad_size = std::uint64_t(1) << moment_dim(n);
        auto lin_counts = reach_counts(tree, lin_size, [n](std::uint64_t c) {
            return [f = LinearFn(F2Vector::from_index(n, c))](const F2Vector& x) { return f(x); };
        });
        auto quad_counts = reach_counts(tree, quad_size, [n](std::uint64_t c) {
            return [f = QuadraticFn::from_coeffs(n, F2Vector::from_index(moment_dim(n), c))](
                       const F2Vector& x) { return f(x); };
        });
        bool ok = true;
        for (std::size_t i = 0; i < a.leaves.size(); ++i) {
            Rational lin_frac(static_cast<std::int64_t>(lin_counts[i]),
                              static_cast<std::int64_t>(lin_size));
            Rational quad_frac(static_cast<std::int64_t>(quad_counts[i]),
                               static_cast<std::int64_t>(quad_size));
            if (lin_frac != a.leaves[i].p_lin || quad_frac != a.leaves[i].p_quad) ok = false;
        }
        out << "exhaustive-check = " << (ok ? "pass" : "FAIL") << "\n";
        if (!ok) return 1;
    }
    return 0;
}

int cmd_spectrum(const std::string& literal, std::ostream& out) {
    FnLiteral fn = parse_fn_literal(literal);
    std::size_t n = literal_dimension(fn);
    out << "fn = " << literal << "\n";
    out << "n  = " << n << "\n";
    if (std::holds_alternative<QuadraticFn>(fn)) {
        FourierProfile p = fourier_profile(std::get<QuadraticFn>(fn));
        out << "rank(B)   = " << p.rank_b << "\n";
        out << "support   = " << p.support << "\n";
        out << "magnitude = " << prob(p.magnitude) << "\n";
    }
    if (n <= 12) {
        WalshSpectrum spec = walsh_spectrum(to_truth_table(fn));
        out << "spectrum support   = " << spec.support() << "\n";
        out << "spectrum max |coef| = " << prob(spec.max_abs()) << "\n";
        if (n <= 6) {
            out << "a : coef\n";
            for (std::size_t a = 0; a < spec.coef.size(); ++a)
                out << F2Vector::from_index(n, a).to_bitstring() << " : "
                    << spec.coef[a].str() << "\n";
        }
    }
    return 0;
}

int print_report(const VerifierReport& report, std::ostream& out) {
    out << "lemma      = " << report.lemma_id << "\n";
    out << "parameters = " << report.parameters << "\n";
    out << "checked    = " << report.instances_checked << "\n";
    out << "violations = " << report.violations() << "\n";
    for (const std::string& note : report.notes) out << "note: " << note << "\n";
    std::size_t shown = 0;
    for (const std::string& w : report.witnesses) {
        if (++shown > 10) {
            out << "witness: ... (" << report.witnesses.size() - 10 << " more)\n";
            break;
        }
        out << "witness: " << w << "\n";
    }
    out << (report.passed() ? "PASS" : "FAIL") << "\n";
    return report.passed() ? 0 : 1;
}

int cmd_verify(const std::string& lemma, std::size_t n, std::size_t k, std::uint64_t trials,
               std::uint64_t seed, std::size_t max_set, std::ostream& out, std::ostream& err) {
    if (lemma == "quadsum") return print_report(verify_quadsum_suite(trials, seed, k), out);
    if (lemma == "rank-ineq")
        return print_report(verify_rank_inequality_suite(trials, n, max_set, seed), out);
    if (lemma == "main-lemma") return print_report(verify_main_lemma_suite(trials, seed), out);
    if (lemma == "low-rank-count") return print_report(verify_low_rank_counts(n), out);
    if (lemma == "farness") {
        FarnessReport r = farness_report(n, trials, seed);
        out << "lemma      = farness\n";
        out << "parameters = n=" << n << " samples=" << r.samples << " seed=" << seed << "\n";
        out << "rank(B) histogram:\n";
        for (const auto& [rank_b, count] : r.rank_histogram)
            out << "  rank " << rank_b << " : " << count
                << "  (max agreement " << Rational::pow2(-static_cast<int>(rank_b / 2)).str()
                << ")\n";
        out << "fraction rank(B) < n/4 = " << r.fraction_below(n / 4).str() << "\n";
        out << "cross_check_violations = " << r.cross_check_violations << "\n";
        bool ok = r.cross_check_violations == 0;
        out << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? 0 : 1;
    }
    err << "error: unknown lemma id '" << lemma << "'\n";
    return 2;
}

int cmd_search(std::size_t n, std::size_t depth, bool do_frontier, bool symmetry,
               unsigned threads, const std::string& witness_out, std::ostream& out,
               std::ostream& err) {
    SearchOptions opt;
    opt.symmetry = symmetry;
    opt.threads = threads;

    if (do_frontier) {
        std::vector<FrontierRow> rows = frontier(n, depth, opt);
        out << "depth  min_quad_accept      bound\n";
        bool all_hold = true;
        for (const FrontierRow& row : rows) {
            char line[128];
            std::snprintf(line, sizeof(line), "%-6zu %-20s %s\n", row.depth,
                          prob(row.min_quad_accept).c_str(), fmt(row.bound).c_str());
            out << line;
            if (row.min_quad_accept.to_double() < row.bound - 1e-12) all_hold = false;
        }
        out << (all_hold ? "PASS" : "FAIL") << "\n";
        return all_hold ? 0 : 1;
    }

    SearchResult r = search_optimal(n, depth, opt);
    out << "n               = " << r.n << "\n";
    out << "depth           = " << r.depth << "\n";
    out << "trees_examined  = " << r.trees_examined << "\n";
    out << "min_quad_accept = " << prob(r.min_quad_accept) << "\n";
    out << "bound           = " << fmt(r.bound) << "\n";
    out << "holds           = " << (r.holds ? "yes" : "no") << "\n";
    out << "witness:\n" << tree_to_json(r.witness).dump(2) << "\n";
    if (!witness_out.empty()) {
        try {
            save_tree_file(witness_out, r.witness);
        } catch (const std::runtime_error& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return r.holds ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analysis of adaptive linearity tests over F2"};
    app.require_subcommand(1);

    // bound
    double c = 1.0, q = 3.0;
    CLI::App* bound = app.add_subcommand("bound", "evaluate phi/psi and the soundness floor");
    bound->add_option("--c", c, "completeness in [0,1]")->required();
    bound->add_option("--q", q, "average query complexity, >= 1")->required();

    // run
    std::string test_name, family = "linear", fn_literal, emit_tree;
    std::size_t k = 3, run_n = 3;
    std::uint64_t trials = 100000, seed = kDefaultSeed;
    CLI::App* run = app.add_subcommand("run", "Monte Carlo acceptance of a canonical test");
    run->add_option("--test", test_name, "blr or kgraph")->required();
    run->add_option("--k", k, "complete-graph vertex count (kgraph only)");
    run->add_option("--n", run_n, "input dimension")->required();
    run->add_option("--family", family, "linear, quadratic or fn (with --fn)");
    run->add_option("--fn", fn_literal, "function literal for --family fn");
    run->add_option("--trials", trials, "Monte Carlo trials");
    run->add_option("--seed", seed, "RNG seed");
    run->add_option("--emit-tree", emit_tree, "write one sampled instance tree to this path");

    // analyze
    std::string tree_path, json_out;
    bool exhaustive = false;
    CLI::App* analyze = app.add_subcommand("analyze", "leaf rank analysis of a tree file");
    analyze->add_option("--tree", tree_path, "tree file")->required();
    analyze->add_flag("--exhaustive-check", exhaustive,
                      "compare against enumeration of both function families (n <= 4)");
    analyze->add_option("--json", json_out, "also write the analysis as JSON to this path");

    // spectrum
    std::string spectrum_fn;
    CLI::App* spectrum = app.add_subcommand("spectrum", "Walsh spectrum of a function literal");
    spectrum->add_option("--fn", spectrum_fn, "function literal")->required();

    // verify
    std::string lemma;
    std::size_t verify_n = 0, verify_k = 0, max_set = 12;
    std::uint64_t verify_trials = 0, verify_seed = kDefaultSeed;
    CLI::App* verify = app.add_subcommand("verify", "brute-force lemma checks");
    verify->add_option("lemma", lemma,
                       "quadsum | rank-ineq | main-lemma | low-rank-count | farness")
        ->required();
    verify->add_option("--n", verify_n, "dimension bound (meaning depends on the lemma)");
    verify->add_option("--k", verify_k, "quadsum: largest point-set size");
    verify->add_option("--trials", verify_trials, "instance or sample count");
    verify->add_option("--max-set", max_set, "rank-ineq: largest label set size");
    verify->add_option("--seed", verify_seed, "RNG seed");

    // search
    std::size_t search_n = 2, search_depth = 3;
    bool do_frontier = false, symmetry = false;
    unsigned threads = 1;
    std::string witness_out;
    CLI::App* search = app.add_subcommand("search", "exhaustive optimality search");
    search->add_option("--n", search_n, "input dimension (<= 3)")->required();
    search->add_option("--depth", search_depth, "uniform tree depth (<= 4)")->required();
    search->add_flag("--frontier", do_frontier, "one row per depth 1..depth");
    search->add_flag("--symmetry", symmetry, "prune root labels to {0, e1}");
    search->add_option("--threads", threads, "parallel workers for the root split");
    search->add_option("--witness-out", witness_out, "write the witness tree to this path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (bound->parsed()) return cmd_bound(c, q, out);
        if (run->parsed())
            return cmd_run(test_name, k, run_n, family, fn_literal, trials, seed, emit_tree,
                           out, err);
        if (analyze->parsed()) return cmd_analyze(tree_path, exhaustive, json_out, out, err);
        if (spectrum->parsed()) return cmd_spectrum(spectrum_fn, out);
        if (verify->parsed()) {
            // Per-lemma defaults.
            if (verify_trials == 0)
                verify_trials = lemma == "rank-ineq" ? 10000 : (lemma == "farness" ? 10000 : 1000);
            if (verify_k == 0) verify_k = 6;
            if (verify_n == 0)
                verify_n = lemma == "rank-ineq" ? 16
                                                : (lemma == "low-rank-count" ? 4
                                                                             : (lemma == "farness" ? 12 : 0));
            return cmd_verify(lemma, verify_n, verify_k, verify_trials, verify_seed, max_set,
                              out, err);
        }
        if (search->parsed())
            return cmd_search(search_n, search_depth, do_frontier, symmetry, threads,
                              witness_out, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace linlab
