#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minmax/ccl.hpp"
#include "minmax/errors.hpp"
#include "minmax/oracle.hpp"
#include "minmax/report.hpp"

namespace {

using namespace minmax;

double parse_alpha(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "Inf") return kInf;
    try {
        return std::stod(s);
    } catch (...) {
        throw invalid_input("bad zipf alpha: " + s);
    }
}

std::vector<int> parse_k_list(const std::string& s) {
    std::vector<int> ks;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        ks.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (ks.empty()) throw invalid_input("empty k list");
    return ks;
}

void dump_ccls(const Instance& inst) {
    CostTable table = compute_cost_table(inst);
    for (std::size_t c = 0; c < inst.clients.size(); ++c) {
        for (int e : inst.eligible_edges) {
            CCL ccl = build_ccl(inst, table, static_cast<int>(c), e);
            for (const LinearPiece& p : ccl.pieces)
                std::cout << c << ' ' << e << ' ' << p.t0 << ' ' << p.c0 << ' ' << p.t1 << ' '
                          << p.c1 << '\n';
        }
    }
}

SolveResult dispatch(const std::string& alg, const Instance& inst, const SolverConfig& cfg) {
    if (alg == "opt") return solve_exact(inst, cfg);
    if (alg == "quick") return solve_quick(inst, cfg);
    if (alg == "approx") return solve_approx(inst, cfg);
    if (alg == "greedy") return solve_greedy(inst, cfg);
    if (alg == "oracle") {
        SolveResult r;
        r.solution = solve_bruteforce(inst);
        return r;
    }
    throw invalid_input("unknown algorithm: " + alg);
}

void print_text_report(const SolverReport& r) {
    std::cout << "alg " << r.alg << "\ncmax " << r.cmax << "\ngain " << r.gain << "\nGR "
              << r.gain_ratio << "\ntime_s " << r.seconds << "\nplacements";
    for (const EdgePoint& p : r.placements) std::cout << " (" << p.edge << ", " << p.offset << ")";
    std::cout << "\niterations " << r.stats.iterations << "\ns1_skips " << r.stats.s1_skips
              << "\ns2_skips " << r.stats.s2_skips << "\ns3_pruned " << r.stats.s3_pruned
              << "\ns4_dismissed " << r.stats.s4_dismissed << "\npsps_generated "
              << r.stats.psps_generated << "\ncandidates_explored "
              << r.stats.candidates_explored << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{
        "Road-network minmax server placement: generate instances, run the exact, "
        "quick, approximate, greedy, and brute-force solvers, and compare them."};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand(
        "gen",
        "Generate a random instance. Defaults are a desk-scale rendition of the usual "
        "city-scale benchmark settings (hundreds of servers, 1e5+ clients, 10% of edges "
        "eligible): 1000 clients, 20 servers, eligible fraction 0.1, unit weights.");
    std::string gen_graph, gen_out;
    int gen_clients = 1000, gen_servers = 20, gen_k = 1;
    double gen_fraction = 0.1;
    std::string gen_alpha = "inf";
    std::uint64_t gen_seed = 42;
    gen->add_option("--graph", gen_graph, "DIMACS gr file")->required();
    gen->add_option("--clients", gen_clients, "number of clients")->capture_default_str();
    gen->add_option("--servers", gen_servers, "number of existing servers")->capture_default_str();
    gen->add_option("--eligible-fraction", gen_fraction, "fraction of edges open to new servers")
        ->capture_default_str();
    gen->add_option("--zipf-alpha", gen_alpha,
                    "client weight skew; 'inf' means unit weights")
        ->capture_default_str();
    gen->add_option("--seed", gen_seed, "RNG seed (MINMAX_SEED overrides)")->capture_default_str();
    gen->add_option("--k", gen_k, "number of new servers stored in the instance")
        ->capture_default_str();
    gen->add_option("--out", gen_out, "output instance file")->required();

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "Solve one instance with one algorithm.");
    std::string so_graph, so_instance, so_alg = "quick", so_format = "text";
    int so_k = 0;
    bool no_s1 = false, no_s2 = false, no_s3 = false, no_s4 = false;
    bool so_dump = false, so_respect_e0 = false, so_full_scan = false;
    std::uint64_t so_budget = 0;
    solve->add_option("--graph", so_graph, "DIMACS gr file")->required();
    solve->add_option("--instance", so_instance, "instance JSON file")->required();
    solve->add_option("--alg", so_alg, "opt|quick|approx|greedy|oracle")->capture_default_str();
    solve->add_option("-k,--k", so_k, "override the instance's k");
    solve->add_flag("--no-s1", no_s1, "disable strategy 1 (incumbent-based skips)");
    solve->add_flag("--no-s2", no_s2, "disable strategy 2 (virtual candidates)");
    solve->add_flag("--no-s3", no_s3, "disable strategy 3 (dominance pruning)");
    solve->add_flag("--no-s4", no_s4, "disable strategy 4 (inactive intersections)");
    solve->add_option("--budget", so_budget, "max k-candidates per iteration (0 = unlimited)");
    solve->add_flag("--full-scan", so_full_scan, "disable the outer early termination");
    solve->add_flag("--approx-respect-e0", so_respect_e0,
                    "snap approx placements onto eligible edges");
    solve->add_option("--format", so_format, "text|json")->capture_default_str();
    solve->add_flag("--dump-ccls", so_dump, "print 'client edge t0 c0 t1 c1' cost lines and exit");

    // ---- compare ----
    auto* cmp = app.add_subcommand("compare",
                                   "Run opt (quick), approx and greedy per k and tabulate "
                                   "gain, gain ratio, relative error, and runtime.");
    std::string cp_graph, cp_instance, cp_ks = "1", cp_format = "text";
    cmp->add_option("--graph", cp_graph, "DIMACS gr file")->required();
    cmp->add_option("--instance", cp_instance, "instance JSON file")->required();
    cmp->add_option("-k,--k", cp_ks, "comma-separated k list, e.g. 1,2,4")->capture_default_str();
    cmp->add_option("--format", cp_format, "text|json")->capture_default_str();

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "Time repeated solver runs on one instance.");
    std::string be_graph, be_instance, be_alg = "quick";
    int be_reps = 5, be_k = 0;
    bench->add_option("--graph", be_graph, "DIMACS gr file")->required();
    bench->add_option("--instance", be_instance, "instance JSON file")->required();
    bench->add_option("--alg", be_alg, "opt|quick|approx|greedy|oracle")->capture_default_str();
    bench->add_option("--reps", be_reps, "repetitions")->capture_default_str();
    bench->add_option("-k,--k", be_k, "override the instance's k");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        auto net = std::make_shared<RoadNetwork>(load_dimacs_file(gen_graph));
        if (const char* env = std::getenv("MINMAX_SEED")) gen_seed = std::strtoull(env, nullptr, 10);
        GenParams params;
        params.n_clients = gen_clients;
        params.n_servers = gen_servers;
        params.eligible_fraction = gen_fraction;
        params.zipf_alpha = parse_alpha(gen_alpha);
        params.seed = gen_seed;
        params.k = gen_k;
        Instance inst = generate_instance(net, params);
        save_instance_file(inst, gen_out);
        std::cout << "wrote " << gen_out << " (" << inst.clients.size() << " clients, "
                  << inst.servers.size() << " servers, " << inst.eligible_edges.size()
                  << " eligible edges)\n";
        return 0;
    }

    if (solve->parsed()) {
        auto net = std::make_shared<RoadNetwork>(load_dimacs_file(so_graph));
        Instance inst = load_instance_file(net, so_instance);
        if (so_k > 0) inst.k = so_k;
        if (so_dump) {
            dump_ccls(inst);
            return 0;
        }
        SolverConfig cfg;
        cfg.s1 = !no_s1;
        cfg.s2 = !no_s2;
        cfg.s3 = !no_s3;
        cfg.s4 = !no_s4;
        cfg.max_candidates_per_iteration = so_budget;
        cfg.full_scan = so_full_scan;
        cfg.approx_respect_e0 = so_respect_e0;

        CostTable table = compute_cost_table(inst);
        auto t0 = std::chrono::steady_clock::now();
        SolveResult res = dispatch(so_alg, inst, cfg);
        auto t1 = std::chrono::steady_clock::now();

        SolverReport r;
        r.alg = so_alg;
        r.cmax = res.solution.cmax;
        auto [gain, ratio] = metrics(table.max_cost(), res.solution.cmax);
        r.gain = gain;
        r.gain_ratio = ratio;
        r.seconds = std::chrono::duration<double>(t1 - t0).count();
        r.placements = res.solution.placements;
        r.stats = res.stats;
        if (so_format == "json")
            std::cout << solver_report_to_json(r);
        else
            print_text_report(r);
        return 0;
    }

    if (cmp->parsed()) {
        auto net = std::make_shared<RoadNetwork>(load_dimacs_file(cp_graph));
        Instance inst = load_instance_file(net, cp_instance);
        std::vector<CompareReport> reports;
        for (int k : parse_k_list(cp_ks)) reports.push_back(run_compare(inst, k));
        if (cp_format == "json")
            std::cout << compare_reports_to_json(reports);
        else
            std::cout << compare_reports_to_table(reports);
        return 0;
    }

    if (bench->parsed()) {
        auto net = std::make_shared<RoadNetwork>(load_dimacs_file(be_graph));
        Instance inst = load_instance_file(net, be_instance);
        if (be_k > 0) inst.k = be_k;
        double best = kInf, total = 0.0, cmax = 0.0;
        for (int i = 0; i < be_reps; ++i) {
            auto t0 = std::chrono::steady_clock::now();
            SolveResult res = dispatch(be_alg, inst, {});
            auto t1 = std::chrono::steady_clock::now();
            double s = std::chrono::duration<double>(t1 - t0).count();
            best = std::min(best, s);
            total += s;
            cmax = res.solution.cmax;
        }
        std::cout << "alg " << be_alg << "\nreps " << be_reps << "\ncmax " << cmax << "\nbest_s "
                  << best << "\nmean_s " << total / be_reps << "\n";
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const minmax::guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
