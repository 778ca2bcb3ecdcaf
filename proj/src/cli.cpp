#include "hcrev/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hcrev/algos.hpp"
#include "hcrev/hctree.hpp"
#include "hcrev/instance.hpp"
#include "hcrev/oracle.hpp"
#include "hcrev/ordering.hpp"
#include "hcrev/rng.hpp"

namespace hcrev {

namespace {

constexpr const char* kCsvHeader = "instance,n,algo,solver,seed,revenue,opt,ratio,ms";

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point from) {
    auto d = std::chrono::steady_clock::now() - from;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
}

SimilarityGraph load_graph(const std::string& path) {
    if (path == "-") return parse_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return parse_graph(in);
}

SimilarityGraph pad_with_isolated_leaf(const SimilarityGraph& g) {
    return SimilarityGraph(g.n() + 1, g.edges());
}

/// Seeded corpus instance shared by verify and bench; moderate density and
/// small integer weights keep oracles exact and fast.
SimilarityGraph corpus_instance(int n, std::uint64_t seed, int idx) {
    return gen_random(n, 0.5, 10, derive_seed(seed, (std::uint64_t)n * 100000 + (std::uint64_t)idx));
}

struct GenOpts {
    std::string type;
    int n = 0;
    double density = 0.5;
    std::int64_t max_weight = 1;
    std::uint64_t seed = 0;
    std::string out_path;
};

int cmd_gen(const GenOpts& o, std::ostream& out, std::ostream& err) {
    SimilarityGraph g = o.type == "matching" ? gen_matching(o.n)
                                             : gen_random(o.n, o.density, o.max_weight, o.seed);
    std::string text = serialize_graph(g);
    if (o.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + o.out_path);
        f << text;
    }
    err << "generated type=" << o.type << " n=" << g.n() << " m=" << g.edges().size()
        << " total_weight=" << total_weight(g).to_string();
    if (!o.out_path.empty()) err << " -> " << o.out_path;
    err << "\n";
    return 0;
}

struct RunOpts {
    std::string input;
    std::string algo = "rand";
    std::string solver = "exact";
    int trials = 1;
    std::uint64_t seed = 0;
    bool oracle = false;
    bool pad_odd = false;
    std::string out_path;
    std::string out_tree;
};

int cmd_run(const RunOpts& o, std::ostream& out, std::ostream& err) {
    AlgorithmConfig cfg;
    cfg.algo = parse_algo(o.algo);
    cfg.solver = parse_solver(o.solver);
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    cfg.validate();

    SimilarityGraph g = load_graph(o.input);
    if (o.pad_odd && g.n() % 2 != 0) g = pad_with_isolated_leaf(g);
    if (cfg.algo == Algo::bisect_random && g.n() % 2 != 0)
        throw std::invalid_argument("bisect-random needs even n; pass --pad-odd to pad with an "
                                    "isolated point");
    std::string instance = o.input == "-" ? "stdin" : o.input;

    bool need_oracle = o.oracle || cfg.algo == Algo::opt;
    std::optional<OracleResult> oracle;
    if (need_oracle) oracle.emplace(opt_tree_bruteforce(g));

    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) throw std::invalid_argument("cannot open output file: " + o.out_path);
    }
    std::ostream& csv = o.out_path.empty() ? out : file;
    csv << kCsvHeader << "\n";

    Rational revenue_sum = 0, ratio_sum = 0;
    std::optional<Rational> best_revenue;
    std::optional<HcTree> best_tree;

    for (int t = 0; t < cfg.trials; ++t) {
        std::uint64_t trial_seed = derive_seed(cfg.seed, (std::uint64_t)t);
        auto start = std::chrono::steady_clock::now();
        std::optional<HcTree> tree;
        switch (cfg.algo) {
            case Algo::rand: tree.emplace(random_tree(g.n(), trial_seed)); break;
            case Algo::avglink: tree.emplace(average_linkage(g)); break;
            case Algo::bisect_random:
                tree.emplace(bisect_then_random(g, cfg.solver, trial_seed));
                break;
            case Algo::opt: tree.emplace(oracle->witness); break;
        }
        Rational rev = revenue(g, *tree);
        std::int64_t ms = elapsed_ms(start);

        csv << instance << ',' << g.n() << ',' << to_string(cfg.algo) << ','
            << (cfg.algo == Algo::bisect_random ? to_string(cfg.solver) : std::string()) << ',';
        if (cfg.randomized()) csv << trial_seed;
        csv << ',' << rev.to_string() << ',';
        if (oracle) {
            Rational ratio = oracle->optimum.is_zero() ? Rational(1) : rev / oracle->optimum;
            csv << oracle->optimum.to_string() << ',' << ratio.to_fixed(6);
            ratio_sum += ratio;
        } else {
            csv << ',';
        }
        csv << ',' << ms << "\n";

        revenue_sum += rev;
        if (!best_revenue || rev > *best_revenue) {
            best_revenue = rev;
            best_tree = std::move(tree);
        }
    }

    if (!o.out_tree.empty()) {
        std::ofstream tf(o.out_tree);
        if (!tf) throw std::invalid_argument("cannot open tree output file: " + o.out_tree);
        tf << best_tree->to_newick() << "\n";
    }

    err << "algo=" << to_string(cfg.algo);
    if (cfg.algo == Algo::bisect_random)
        err << " solver=" << to_string(cfg.solver) << " (p: " << solver_ratio_label(cfg.solver)
            << ")";
    err << " trials=" << cfg.trials
        << " mean_revenue=" << (revenue_sum / Rational(cfg.trials)).to_string();
    if (oracle) {
        err << " opt=" << oracle->optimum.to_string()
            << " mean_ratio=" << (ratio_sum / Rational(cfg.trials)).to_fixed(6);
    }
    err << "\n";
    return 0;
}

struct VerifyOpts {
    std::string suite;
    int n_max = -1;      // -1: per-suite default
    int instances = -1;  // -1: per-suite default
    int trials = -1;
    std::uint64_t seed = 1;
};

struct SuiteTally {
    int passed = 0;
    int total = 0;
    std::ostream& err;
    int reported = 0;

    explicit SuiteTally(std::ostream& e) : err(e) {}
    void check(bool ok, const std::string& what) {
        ++total;
        if (ok) {
            ++passed;
        } else if (++reported <= 10) {
            err << "violation: " << what << "\n";
        }
    }
};

/// Exact orientation-sum identity 2 * sum_o y_e = |T_e| * 2^(n-1) for every
/// pair, over all orientations of sampled trees.
void suite_lemma_y(const VerifyOpts& o, SuiteTally& t) {
    int n_max = o.n_max < 0 ? 8 : o.n_max;
    int per_n = o.instances < 0 ? 50 : o.instances;
    if (n_max > 12) throw std::invalid_argument("lemma-y-expectation is capped at --n-max 12");
    for (int n = 2; n <= n_max; ++n) {
        for (int i = 0; i < per_n; ++i) {
            HcTree tree = random_tree(n, derive_seed(o.seed, (std::uint64_t)n * 100000 + i));
            std::vector<std::vector<std::uint64_t>> ysum(n + 1,
                                                         std::vector<std::uint64_t>(n + 1, 0));
            std::uint64_t masks = 1ULL << (n - 1);
            for (std::uint64_t mask = 0; mask < masks; ++mask) {
                LeafOrdering pi = leaf_ordering(tree, Orientation::from_mask(tree, mask));
                for (int a = 1; a <= n; ++a)
                    for (int b = a + 1; b <= n; ++b)
                        ysum[a][b] += (std::uint64_t)ordering_distance(pi, a, b);
            }
            bool ok = true;
            for (int a = 1; a <= n && ok; ++a)
                for (int b = a + 1; b <= n && ok; ++b)
                    ok = 2 * ysum[a][b] ==
                         (std::uint64_t)subtree_size_at_lca(tree, a, b) * masks;
            t.check(ok, "orientation mean of y != |T_e|/2 on " + tree.to_newick());
        }
    }
}

/// Window bisections: cut count equals y when y <= n/2 - 1, and the exact
/// per-edge window mean is at least max(0, w(n - 2y)/2).
void suite_cut_probability(const VerifyOpts& o, SuiteTally& t) {
    int n_max = o.n_max < 0 ? 12 : o.n_max;
    int count = o.instances < 0 ? 100 : o.instances;
    std::vector<int> ns;
    for (int n = 6; n <= n_max; n += 2) ns.push_back(n);
    if (ns.empty()) throw std::invalid_argument("cut-probability needs --n-max >= 6");
    for (int i = 0; i < count; ++i) {
        int n = ns[i % ns.size()];
        SimilarityGraph g = corpus_instance(n, o.seed, i);
        HcTree tree = random_tree(n, derive_seed(o.seed, 7000000 + i));
        Orientation ori = sample_orientation(tree, derive_seed(o.seed, 8000000 + i));
        LeafOrdering pi = leaf_ordering(tree, ori);
        int half = n / 2;
        bool ok = true;
        for (const Edge& e : g.edges()) {
            int y = ordering_distance(pi, e.u, e.v);
            int cuts = 0;
            for (int x = 1; x <= half; ++x) {
                bool u_in = pi.pos(e.u) >= x && pi.pos(e.u) < x + half;
                bool v_in = pi.pos(e.v) >= x && pi.pos(e.v) < x + half;
                if (u_in != v_in) ++cuts;
            }
            if (y <= half - 1 && cuts != y) ok = false;
            // mean_x of window revenue >= w(n-2y)/2 <=> #uncut >= n/2 - y
            if (half - cuts < half - y) ok = false;
        }
        t.check(ok, "window cut identity failed on instance " + std::to_string(i) +
                        " (n=" + std::to_string(n) + ")");
    }
}

/// Best bisection earns at least half the optimal tree revenue.
void suite_half_bisection(const VerifyOpts& o, SuiteTally& t) {
    int n_max = o.n_max < 0 ? 8 : o.n_max;
    int count = o.instances < 0 ? 200 : o.instances;
    std::vector<int> ns;
    for (int n = 4; n <= std::min(n_max, 10); n += 2) ns.push_back(n);
    if (ns.empty()) throw std::invalid_argument("half-bisection needs --n-max >= 4");
    for (int i = 0; i < count; ++i) {
        int n = ns[i % ns.size()];
        SimilarityGraph g = corpus_instance(n, o.seed, i);
        Rational lhs = bisection_revenue(g, mub_exact(g));
        Rational opt = opt_tree_bruteforce(g).optimum;
        t.check(lhs * Rational(2) >= opt, "bisection below half of optimum on instance " +
                                              std::to_string(i) + " (n=" + std::to_string(n) +
                                              ")");
    }
}

/// Derandomized extraction: ordering bound and half-revenue guarantee.
void suite_extraction(const VerifyOpts& o, SuiteTally& t) {
    int n_max = o.n_max < 0 ? 10 : o.n_max;
    int count = o.instances < 0 ? 100 : o.instances;
    std::vector<int> ns;
    for (int n = 6; n <= n_max; n += 2) ns.push_back(n);
    if (ns.empty()) throw std::invalid_argument("extraction needs --n-max >= 6");
    for (int i = 0; i < count; ++i) {
        int n = ns[i % ns.size()];
        SimilarityGraph g = corpus_instance(n, o.seed, i);
        HcTree tree = random_tree(n, derive_seed(o.seed, 9000000 + i));
        Orientation ori = conditional_expectation_ordering(g, tree);
        Rational y = weighted_ordering_cost(g, leaf_ordering(tree, ori));
        bool bound_ok = y * Rational(2) <= dasgupta_cost(g, tree);
        Bisection b = extract_half_revenue_bisection(g, tree);
        bool half_ok = bisection_revenue(g, b) * Rational(2) >= revenue(g, tree);
        t.check(bound_ok && half_ok, "extraction guarantee failed on instance " +
                                         std::to_string(i) + " (n=" + std::to_string(n) + ")");
    }
}

/// Exact identity revenue + cost = n * total weight.
void suite_complementarity(const VerifyOpts& o, SuiteTally& t) {
    int n_max = o.n_max < 0 ? 16 : o.n_max;
    int count = o.instances < 0 ? 1000 : o.instances;
    if (n_max < 2) throw std::invalid_argument("complementarity needs --n-max >= 2");
    for (int i = 0; i < count; ++i) {
        int n = 2 + (i % (n_max - 1));
        SimilarityGraph g = corpus_instance(n, o.seed, i);
        HcTree tree = random_tree(n, derive_seed(o.seed, 5000000 + i));
        Rational lhs = revenue(g, tree) + dasgupta_cost(g, tree);
        Rational rhs = Rational(n) * total_weight(g);
        t.check(lhs == rhs, "complementarity broken on instance " + std::to_string(i) +
                                " (n=" + std::to_string(n) + ")");
    }
}

/// Matching instances: exact bisection/optimum ratios decreasing toward 1/2.
void suite_tightness(const VerifyOpts&, SuiteTally& t) {
    const int ns[] = {8, 12, 16, 20};
    const Rational expected[] = {Rational::fraction(2, 3), Rational::fraction(3, 5),
                                 Rational::fraction(4, 7), Rational::fraction(5, 9)};
    Rational prev;
    for (int k = 0; k < 4; ++k) {
        int n = ns[k];
        SimilarityGraph g = gen_matching(n);
        BisectionWeights bw = bisection_weights(g, mub_exact(g));
        Rational uncut = bw.intra_left + bw.intra_right;
        t.check(uncut == Rational(n / 2), "best uncut weight != n/2 on matching n=" +
                                              std::to_string(n));
        Rational ratio = bisection_revenue(g, mub_exact(g)) /
                         (Rational(n / 2) * Rational(n - 2));
        t.check(ratio == expected[k],
                "bisection/optimum ratio mismatch on matching n=" + std::to_string(n));
        if (k > 0)
            t.check(ratio < prev, "tightness ratios not strictly decreasing at n=" +
                                      std::to_string(n));
        prev = ratio;
    }
}

/// End-to-end Monte Carlo ratio of the bisect-then-random algorithm with
/// the exact solver against the brute-force optimum.
void suite_alg_ratio(const VerifyOpts& o, SuiteTally& t) {
    int n = o.n_max < 0 ? 10 : std::min(o.n_max - o.n_max % 2, 10);
    int count = o.instances < 0 ? 5 : o.instances;
    int trials = o.trials < 0 ? 400 : o.trials;
    if (n < 4) throw std::invalid_argument("alg-ratio needs --n-max >= 4");
    for (int i = 0; i < count; ++i) {
        SimilarityGraph g = corpus_instance(n, o.seed, i);
        Rational opt = opt_tree_bruteforce(g).optimum;
        if (opt.is_zero()) {
            t.check(true, "");
            continue;
        }
        Rational sum = 0;
        long double sq = 0.0L;
        for (int tr = 0; tr < trials; ++tr) {
            HcTree tree = bisect_then_random(g, MubSolver::exact,
                                             derive_seed(o.seed, (std::uint64_t)i * 1000000 + tr));
            Rational ratio = revenue(g, tree) / opt;
            sum += ratio;
            long double r = (long double)ratio.to_double();
            sq += r * r;
        }
        double mean = (sum / Rational(trials)).to_double();
        double se = 0.0;
        if (trials > 1) {
            long double var = (sq - (long double)trials * mean * mean) / (trials - 1);
            if (var < 0) var = 0;
            se = std::sqrt((double)(var / trials));
        }
        t.check(mean >= 0.585 - 3 * se, "mean ratio " + std::to_string(mean) +
                                            " below 0.585 margin on instance " +
                                            std::to_string(i));
    }
}

int cmd_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
    SuiteTally t(err);
    if (o.suite == "lemma-y-expectation")
        suite_lemma_y(o, t);
    else if (o.suite == "cut-probability")
        suite_cut_probability(o, t);
    else if (o.suite == "half-bisection")
        suite_half_bisection(o, t);
    else if (o.suite == "extraction")
        suite_extraction(o, t);
    else if (o.suite == "complementarity")
        suite_complementarity(o, t);
    else if (o.suite == "tightness")
        suite_tightness(o, t);
    else if (o.suite == "alg-ratio")
        suite_alg_ratio(o, t);
    else
        throw CLI::ValidationError("unknown suite: " + o.suite);
    out << t.passed << "/" << t.total << " pass\n";
    return t.passed == t.total ? 0 : 1;
}

struct BenchOpts {
    int n_max = 8;
    int instances = 5;
    int trials = 20;
    std::uint64_t seed = 1;
    std::string algo;  // empty: all rows
    std::string out_path;
};

int cmd_bench(const BenchOpts& o, std::ostream& out, std::ostream& err) {
    if (o.trials < 1) throw std::invalid_argument("trial count must be at least 1");
    if (o.instances < 0) throw std::invalid_argument("instance count must be >= 0");
    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) throw std::invalid_argument("cannot open output file: " + o.out_path);
    }
    std::ostream& csv = o.out_path.empty() ? out : file;
    csv << "kind,algo,solver,n,instances,trials,mean_ratio,min_ratio,source\n";
    if (o.instances == 0) return 0;

    struct Row {
        Algo algo;
        MubSolver solver;
        bool uses_solver;
        int trials;
    };
    std::vector<Row> rows = {{Algo::rand, MubSolver::exact, false, o.trials},
                             {Algo::avglink, MubSolver::exact, false, 1},
                             {Algo::bisect_random, MubSolver::exact, true, o.trials},
                             {Algo::bisect_random, MubSolver::local, true, o.trials}};

    std::vector<int> ns;
    for (int n = 4; n <= std::min(o.n_max, 10); n += 2) ns.push_back(n);

    for (const Row& row : rows) {
        if (!o.algo.empty() && to_string(row.algo) != o.algo) continue;
        for (int n : ns) {
            long double ratio_sum = 0.0L;
            std::optional<Rational> min_ratio;
            long trials_done = 0;
            for (int i = 0; i < o.instances; ++i) {
                SimilarityGraph g = corpus_instance(n, o.seed, i);
                Rational opt = opt_tree_bruteforce(g).optimum;
                for (int tr = 0; tr < row.trials; ++tr) {
                    std::uint64_t s = derive_seed(o.seed, (std::uint64_t)i * 1000000 + tr);
                    std::optional<HcTree> tree;
                    switch (row.algo) {
                        case Algo::rand: tree.emplace(random_tree(n, s)); break;
                        case Algo::avglink: tree.emplace(average_linkage(g)); break;
                        default: tree.emplace(bisect_then_random(g, row.solver, s)); break;
                    }
                    Rational ratio =
                        opt.is_zero() ? Rational(1) : revenue(g, *tree) / opt;
                    ratio_sum += (long double)ratio.to_double();
                    if (!min_ratio || ratio < *min_ratio) min_ratio = ratio;
                    ++trials_done;
                }
            }
            char mean_buf[32];
            std::snprintf(mean_buf, sizeof mean_buf, "%.6f",
                          (double)(ratio_sum / (long double)trials_done));
            csv << "corpus," << to_string(row.algo) << ','
                << (row.uses_solver ? to_string(row.solver) : std::string()) << ',' << n << ','
                << o.instances << ',' << row.trials << ',' << mean_buf << ','
                << min_ratio->to_fixed(6) << ",oracle\n";
        }
    }

    if (o.algo.empty() || o.algo == "bisection") {
        for (int n : {8, 12, 16, 20}) {
            SimilarityGraph g = gen_matching(n);
            Rational rev = bisection_revenue(g, mub_exact(g));
            bool use_oracle = n <= 10;
            Rational opt = use_oracle ? opt_tree_bruteforce(g).optimum
                                      : Rational(n / 2) * Rational(n - 2);
            Rational ratio = rev / opt;
            csv << "matching,bisection,exact," << n << ",1,1," << ratio.to_fixed(6) << ','
                << ratio.to_fixed(6) << ',' << (use_oracle ? "oracle" : "analytic") << "\n";
        }
    }

    err << "bench done: n up to " << (ns.empty() ? 0 : ns.back()) << ", " << o.instances
        << " instances per n\n";
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hierarchical-clustering revenue toolkit", "hcrev"};
    app.require_subcommand(1);

    GenOpts gen;
    CLI::App* cgen = app.add_subcommand("gen", "generate a similarity instance (edge list)");
    cgen->add_option("--type", gen.type, "instance family: matching | gnp")
        ->required()
        ->check(CLI::IsMember({"matching", "gnp"}));
    cgen->add_option("--n", gen.n, "number of data points")->required();
    cgen->add_option("--density", gen.density, "edge probability (gnp)");
    cgen->add_option("--max-weight", gen.max_weight, "weights drawn from 1..max (gnp)");
    cgen->add_option("--seed", gen.seed, "generator seed (gnp)");
    cgen->add_option("--out", gen.out_path, "write the instance here instead of stdout");

    RunOpts run;
    CLI::App* crun = app.add_subcommand("run", "run an algorithm, emit one CSV row per trial");
    crun->add_option("input", run.input, "instance file, or - for stdin")->required();
    crun->add_option("--algo", run.algo, "rand | avglink | bisect-random | opt")
        ->check(CLI::IsMember({"rand", "avglink", "bisect-random", "opt"}));
    crun->add_option("--solver", run.solver, "bisection solver: exact | local | random")
        ->check(CLI::IsMember({"exact", "local", "random"}));
    crun->add_option("--trials", run.trials, "number of trials");
    crun->add_option("--seed", run.seed, "master seed; trial seeds are derived from it");
    crun->add_flag("--oracle", run.oracle, "attach brute-force optimum and ratio columns");
    crun->add_flag("--pad-odd", run.pad_odd, "pad odd n with an isolated extra point");
    crun->add_option("--out", run.out_path, "write CSV here instead of stdout");
    crun->add_option("--out-tree", run.out_tree, "write the best trial's tree (Newick)");

    VerifyOpts ver;
    CLI::App* cver = app.add_subcommand("verify", "run a theorem verification suite");
    cver->add_option("suite", ver.suite,
                     "lemma-y-expectation | cut-probability | half-bisection | extraction | "
                     "complementarity | tightness | alg-ratio")
        ->required();
    cver->add_option("--n-max", ver.n_max, "largest instance size (suite default otherwise)");
    cver->add_option("--instances", ver.instances, "number of checks (suite default otherwise)");
    cver->add_option("--trials", ver.trials, "Monte Carlo trials per check where relevant");
    cver->add_option("--seed", ver.seed, "corpus seed");

    BenchOpts bench;
    CLI::App* cben = app.add_subcommand("bench", "ratio table against the oracle (CSV)");
    cben->add_option("--n-max", bench.n_max, "largest even corpus size (capped at 10)");
    cben->add_option("--instances", bench.instances, "instances per size; 0 emits only a header");
    cben->add_option("--trials", bench.trials, "trials per randomized algorithm");
    cben->add_option("--seed", bench.seed, "corpus seed");
    cben->add_option("--algo", bench.algo, "restrict to one algorithm row");
    cben->add_option("--out", bench.out_path, "write CSV here instead of stdout");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
        if (cgen->parsed()) return cmd_gen(gen, out, err);
        if (crun->parsed()) return cmd_run(run, out, err);
        if (cver->parsed()) return cmd_verify(ver, out, err);
        if (cben->parsed()) return cmd_bench(bench, out, err);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace hcrev
