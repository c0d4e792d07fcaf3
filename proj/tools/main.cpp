#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcol/errors.hpp"
#include "gcol/gen.hpp"
#include "gcol/grundy_solver.hpp"
#include "gcol/io.hpp"
#include "gcol/oracle.hpp"
#include "gcol/pgc_solver.hpp"

namespace {

using nlohmann::json;
using namespace gcol;

constexpr uint64_t kDefaultSeed = 0xC0FFEE;

struct GraphInput {
    std::string path = "-";
    std::string format = "edgelist";
    int declared_n = -1;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("graph", in.path, "graph file, or - for stdin")->required();
    cmd->add_option("--format", in.format, "dimacs|edgelist")
        ->check(CLI::IsMember({"dimacs", "edgelist"}))
        ->capture_default_str();
    cmd->add_option("--n", in.declared_n, "declared vertex count (edgelist)");
}

Graph load_graph(const GraphInput& in) {
    GraphFormat fmt = in.format == "dimacs" ? GraphFormat::dimacs : GraphFormat::edgelist;
    std::optional<int> declared;
    if (in.declared_n >= 0) declared = in.declared_n;
    if (in.path == "-") return parse_graph(std::cin, fmt, declared);
    std::ifstream file(in.path);
    if (!file) throw std::invalid_argument("cannot open graph file: " + in.path);
    return parse_graph(file, fmt, declared);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

json stats_json(const SolveConfig& cfg, const std::string& mode, uint64_t trials,
                int64_t winning_trial, uint64_t phi, double millis) {
    json s;
    s["mode"] = mode;
    s["seed"] = cfg.seed;
    s["threads"] = cfg.threads;
    s["trials"] = trials;
    if (winning_trial >= 0)
        s["winning_trial"] = winning_trial;
    else
        s["winning_trial"] = nullptr;
    s["phi_enumerated"] = phi;
    s["millis"] = millis;
    return s;
}

int emit(const json& doc, SolveAnswer answer) {
    std::cout << doc.dump() << "\n";
    return answer == SolveAnswer::yes ? 0 : 1;
}

int run_pgc(const GraphInput& in, int k, const std::string& mode, bool degenerate_path,
            SolveConfig cfg) {
    auto start = std::chrono::steady_clock::now();
    Graph g = load_graph(in);
    SolveMode m = mode == "det" ? SolveMode::det : SolveMode::rand;
    PgcResult res =
        degenerate_path ? solve_pgc_degenerate(g, k, m, cfg) : solve_pgc(g, k, m, cfg);
    json doc;
    doc["problem"] = "pgc";
    doc["k"] = k;
    doc["answer"] = to_string(res.answer);
    if (res.witness)
        doc["certificate"] = json::parse(witness_to_json(*res.witness));
    else
        doc["certificate"] = nullptr;
    if (res.coloring)
        doc["coloring"] = res.coloring->color;
    else
        doc["coloring"] = nullptr;
    doc["stats"] =
        stats_json(cfg, mode, res.trials, res.winning_trial, res.phi_enumerated, elapsed_ms(start));
    return emit(doc, res.answer);
}

int run_grundy(const GraphInput& in, int k, int i, int j, const std::string& mode,
               SolveConfig cfg) {
    auto start = std::chrono::steady_clock::now();
    Graph g = load_graph(in);
    SolveMode m = mode == "det" ? SolveMode::det : SolveMode::rand;
    GrundyResult res = solve_grundy_kij(g, k, i, j, m, cfg);
    json doc;
    doc["problem"] = "grundy";
    doc["k"] = k;
    doc["i"] = i;
    doc["j"] = j;
    doc["answer"] = to_string(res.answer);
    if (res.witness)
        doc["certificate"] = json::parse(witness_to_json(*res.witness));
    else
        doc["certificate"] = nullptr;
    if (res.coloring)
        doc["coloring"] = res.coloring->color;
    else
        doc["coloring"] = nullptr;
    doc["stats"] =
        stats_json(cfg, mode, res.trials, res.winning_trial, res.phi_enumerated, elapsed_ms(start));
    return emit(doc, res.answer);
}

int run_oracle(const GraphInput& in) {
    Graph g = load_graph(in);
    json doc;
    doc["gamma"] = oracle_grundy(g);
    doc["partial_gamma"] = oracle_partial_grundy(g);
    std::cout << doc.dump() << "\n";
    return 0;
}

int run_verify(const GraphInput& in, const std::string& cert_path) {
    Graph g = load_graph(in);
    std::ifstream file(cert_path);
    if (!file) throw std::invalid_argument("cannot open certificate file: " + cert_path);
    std::stringstream buf;
    buf << file.rdbuf();
    AnyWitness w = witness_from_json(buf.str(), g.num_vertices());

    bool valid = false;
    json doc;
    if (auto* pgw = std::get_if<PartialGrundyWitness>(&w)) {
        valid = verify_pgw(g, *pgw).has_value();
        doc["kind"] = "pgw";
        doc["k"] = pgw->k();
    } else {
        auto* gw = std::get_if<GrundyWitness>(&w);
        valid = verify_gw(g, *gw);
        doc["kind"] = "gw";
        doc["k"] = gw->k();
    }
    doc["valid"] = valid;
    std::cout << doc.dump() << "\n";
    if (!valid) std::cerr << "witness invalid\n";
    return valid ? 0 : 1;
}

int run_gen(const std::string& model, int n, int a, int b, double prob, int d, uint64_t seed,
            const std::string& format) {
    Rng rng(seed);
    Graph g;
    if (model == "gnp")
        g = gen_gnp(n, prob, rng);
    else if (model == "bipartite")
        g = gen_bipartite(a, b, prob, rng);
    else if (model == "degenerate")
        g = gen_degenerate(n, d, rng);
    else if (model == "complete")
        g = gen_complete(n);
    else if (model == "cycle")
        g = gen_cycle(n);
    else if (model == "star")
        g = gen_star(n);
    else
        throw std::invalid_argument("unknown model: " + model);
    write_graph(std::cout, g, format == "dimacs" ? GraphFormat::dimacs : GraphFormat::edgelist);
    return 0;
}

int run_bench(const std::string& models_csv, const std::string& ns_csv, const std::string& ks_csv,
              const std::string& mode, SolveConfig cfg) {
    auto split_ints = [](const std::string& csv) {
        std::vector<int> out;
        std::stringstream ss(csv);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
        return out;
    };
    std::vector<std::string> models;
    {
        std::stringstream ss(models_csv);
        std::string item;
        while (std::getline(ss, item, ',')) models.push_back(item);
    }
    SolveMode m = mode == "det" ? SolveMode::det : SolveMode::rand;

    std::cout << "model,n,k,mode,answer,millis,trials\n";
    for (const auto& model : models) {
        for (int n : split_ints(ns_csv)) {
            Rng rng = Rng(cfg.seed).fork(model).fork(uint64_t(n));
            Graph g;
            if (model == "gnp")
                g = gen_gnp(n, 0.3, rng);
            else if (model == "degenerate")
                g = gen_degenerate(n, 2, rng);
            else if (model == "cycle")
                g = gen_cycle(std::max(3, n));
            else if (model == "complete")
                g = gen_complete(std::min(n, 9));
            else if (model == "star")
                g = gen_star(n);
            else
                throw std::invalid_argument("unknown model: " + model);
            for (int k : split_ints(ks_csv)) {
                auto start = std::chrono::steady_clock::now();
                std::string answer;
                try {
                    PgcResult res = solve_pgc(g, k, m, cfg);
                    answer = to_string(res.answer);
                } catch (const budget_error&) {
                    answer = "budget";
                }
                std::cout << model << "," << g.num_vertices() << "," << k << "," << mode << ","
                          << answer << "," << elapsed_ms(start) << "," << cfg.trials << "\n";
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"greedy-coloring reach: partial Grundy on general graphs, Grundy on "
                 "K_{i,j}-free graphs, brute-force oracles and certificate checks"};
    app.require_subcommand(1);

    SolveConfig cfg;
    cfg.seed = kDefaultSeed;

    GraphInput in;
    int k = 1, ki = 2, kj = 2;
    std::string mode = "det";
    bool degenerate_path = false;

    auto add_solver_options = [&](CLI::App* cmd) {
        cmd->add_option("--k", k, "target color count")->required();
        cmd->add_option("--mode", mode, "rand|det")
            ->check(CLI::IsMember({"rand", "det"}))
            ->capture_default_str();
        cmd->add_option("--trials", cfg.trials, "randomized-mode attempts")
            ->capture_default_str();
        cmd->add_option("--seed", cfg.seed, "root seed for all randomness")
            ->capture_default_str();
        cmd->add_option("--threads", cfg.threads, "worker threads (1 = reference order)")
            ->capture_default_str();
        cmd->add_option("--budget", cfg.budget, "det-mode enumeration budget")
            ->capture_default_str();
    };

    CLI::App* pgc = app.add_subcommand("pgc", "partial Grundy coloring >= k?");
    add_graph_options(pgc, in);
    add_solver_options(pgc);
    pgc->add_flag("--degenerate", degenerate_path,
                  "skip degree reduction (degenerate-input fast path)");

    CLI::App* grundy =
        app.add_subcommand("grundy", "Grundy coloring >= k on a K_{i,j}-free graph?");
    add_graph_options(grundy, in);
    add_solver_options(grundy);
    grundy->add_option("--i", ki, "biclique parameter i")->capture_default_str();
    grundy->add_option("--j", kj, "biclique parameter j")->capture_default_str();
    grundy->add_option("--max-k", cfg.max_grundy_k, "desk-scale guard on k")
        ->capture_default_str();

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force Grundy numbers (n <= 10)");
    add_graph_options(oracle, in);

    CLI::App* verify = app.add_subcommand("verify", "re-check a witness certificate");
    add_graph_options(verify, in);
    std::string cert_path;
    verify->add_option("--certificate", cert_path, "witness JSON file")->required();

    CLI::App* gen = app.add_subcommand("gen", "emit a generated graph");
    std::string model = "gnp", gen_format = "edgelist";
    int gn = 10, ga = 5, gb = 5, gd = 2;
    double prob = 0.3;
    uint64_t gen_seed = kDefaultSeed;
    gen->add_option("--model", model, "gnp|bipartite|degenerate|complete|cycle|star")
        ->capture_default_str();
    gen->add_option("--gn", gn, "vertex count")->capture_default_str();
    gen->add_option("--a", ga, "left side (bipartite)")->capture_default_str();
    gen->add_option("--b", gb, "right side (bipartite)")->capture_default_str();
    gen->add_option("--prob", prob, "edge probability")->capture_default_str();
    gen->add_option("--d", gd, "degeneracy bound (degenerate model)")->capture_default_str();
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    gen->add_option("--format", gen_format, "dimacs|edgelist")->capture_default_str();

    CLI::App* bench = app.add_subcommand("bench", "CSV sweep over a generator grid");
    std::string models = "gnp,degenerate,cycle", ns = "10,20,40", ks = "2,3";
    bench->add_option("--models", models, "comma list of generator models")
        ->capture_default_str();
    bench->add_option("--ns", ns, "comma list of vertex counts")->capture_default_str();
    bench->add_option("--ks", ks, "comma list of k values")->capture_default_str();
    bench->add_option("--mode", mode, "rand|det")->capture_default_str();
    bench->add_option("--trials", cfg.trials, "randomized-mode attempts")->capture_default_str();
    bench->add_option("--seed", cfg.seed, "root seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*pgc) return run_pgc(in, k, mode, degenerate_path, cfg);
        if (*grundy) return run_grundy(in, k, ki, kj, mode, cfg);
        if (*oracle) return run_oracle(in);
        if (*verify) return run_verify(in, cert_path);
        if (*gen) return run_gen(model, gn, ga, gb, prob, gd, gen_seed, gen_format);
        if (*bench) return run_bench(models, ns, ks, mode, cfg);
    } catch (const gcol::budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
