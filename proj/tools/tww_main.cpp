#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tww/contraction_engine.hpp"
#include "tww/density.hpp"
#include "tww/exact_oracle.hpp"
#include "tww/experiment.hpp"
#include "tww/graph.hpp"
#include "tww/lower_bounds.hpp"
#include "tww/random_models.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open " + path + " for writing");
    return file;
}

int cmd_gen(const std::string& model, int n, double p, long long m, int d, tww::Seed seed,
            const std::string& out_path) {
    tww::Graph g;
    switch (tww::parse_model(model)) {
        case tww::Model::gnp: g = tww::gen_gnp(n, p, seed); break;
        case tww::Model::gnm: g = tww::gen_gnm(n, m, seed); break;
        case tww::Model::regular: g = tww::gen_regular(n, d, seed); break;
    }
    std::ofstream file;
    tww::write_edge_list(open_out(file, out_path), g);
    return 0;
}

int cmd_mad(const std::string& graph_path, bool witness) {
    tww::Graph g = tww::load_edge_list(graph_path);
    tww::DensestResult res = tww::mad_exact(g);
    std::cout << res.density.str() << "\n";
    if (witness) {
        for (size_t i = 0; i < res.witness.size(); i++)
            std::cout << res.witness[i] << (i + 1 < res.witness.size() ? ' ' : '\n');
    }
    return 0;
}

int cmd_contract(const std::string& graph_path, bool auto_params, int a, int b, int r, int q,
                 int retries, tww::Seed seed, const std::string& out_path,
                 const std::string& stats_format) {
    tww::Graph g = tww::load_edge_list(graph_path);
    tww::Rational mad = g.n() > 0 ? tww::mad_exact(g).density : tww::Rational(0, 1);

    json stats;
    tww::ContractionSequence seq;
    long long width = 0;
    if (!(mad > tww::Rational(2, 1)) && auto_params) {
        // outside the pipeline regime: fall back to plain greedy contraction
        seq = tww::greedy_contract(g);
        width = tww::replay(g, seq).width;
        stats["mode"] = "greedy";
        stats["out_of_theory"] = true;
    } else {
        tww::PipelineParams params;
        if (auto_params) {
            params = tww::select_params_for(g.n(), mad);
        } else {
            params.a = a;
            params.b = b;
            params.r = r;
            params.q = q;
        }
        params.max_retries = retries;
        tww::PipelineReport rep = tww::build_pipeline(g, params, seed);
        seq = std::move(rep.sequence);
        width = rep.width;
        stats["mode"] = auto_params ? "auto" : "manual";
        stats["out_of_theory"] = false;
        stats["a"] = rep.params.a;
        stats["b"] = rep.params.b;
        stats["r"] = rep.params.r;
        stats["q"] = rep.params.q;
        stats["m_phi"] = rep.m_phi;
        stats["retries_used"] = rep.retries_used;
        stats["target_reached"] = rep.target_reached;
        stats["theory_precondition"] = rep.theory_precondition;
        stats["image_size"] = rep.image_size;
        stats["prefix_width"] = rep.prefix_width;
    }
    std::string reason;
    if (!tww::verify(g, seq, width, &reason))
        throw std::runtime_error("contract: produced sequence failed verification: " + reason);
    stats["n"] = g.n();
    stats["m"] = g.m();
    stats["mad"] = mad.str();
    stats["width"] = width;
    stats["seed"] = seed;

    if (!out_path.empty()) tww::save_contraction_sequence(out_path, seq);
    if (stats_format == "csv") {
        std::cout << "n,m,width,seed\n"
                  << g.n() << ',' << g.m() << ',' << width << ',' << seed << "\n";
    } else {
        std::cout << stats.dump() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& seq_path, long long width) {
    tww::Graph g = tww::load_edge_list(graph_path);
    tww::ContractionSequence s = tww::load_contraction_sequence(seq_path);
    std::string reason;
    long long bound = width >= 0 ? width : std::max(0, g.n());
    if (!tww::verify(g, s, bound, &reason)) {
        std::cerr << "INVALID: " << reason << "\n";
        return 1;
    }
    std::cout << "OK width " << tww::replay(g, s).width << "\n";
    return 0;
}

int cmd_exact(const std::string& graph_path, std::uint64_t budget, const std::string& out_path) {
    tww::Graph g = tww::load_edge_list(graph_path);
    tww::OracleResult res = tww::stww_exact(g, budget);
    std::cout << res.stww << "\n";
    if (!out_path.empty()) tww::save_contraction_sequence(out_path, res.witness);
    return 0;
}

int cmd_extract_partition(const std::string& graph_path, const std::string& seq_path, int K,
                          const std::string& out_path) {
    tww::Graph g = tww::load_edge_list(graph_path);
    tww::ContractionSequence s = tww::load_contraction_sequence(seq_path);
    tww::Partition part = tww::extract_partition(g, s, K);
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    for (const auto& block : part.blocks) {
        for (size_t i = 0; i < block.size(); i++) out << block[i] << (i + 1 < block.size() ? ' ' : '\n');
    }
    return 0;
}

int cmd_bounds(long long n, int d, double eps, double c1, long long c0, double bigc) {
    tww::CountingConstants c;
    c.C0 = c0;
    c.C1 = c1;
    c.epsilon = eps;
    c.alpha = tww::alpha_for(eps);
    c.delta = tww::delta_for(c.alpha, c.C0);
    tww::BoundReport br = tww::bound_report(static_cast<double>(n), d, eps, bigc);
    long long m = n * d / 2;
    tww::StwwCountBound cb = tww::count_stww_upper(n, std::max(1LL, m), eps, c);
    std::cout << "n,d,exponent,lower_value,upper_value,log_count_upper,w,K,alpha,delta\n";
    std::cout << n << ',' << d << ',' << br.exponent << ',' << br.lower_value << ','
              << br.upper_value << ',' << cb.log_count << ',' << cb.w << ',' << cb.K << ','
              << c.alpha << ',' << c.delta << "\n";
    return 0;
}

std::vector<long long> parse_grid(const std::string& grid) {
    std::vector<long long> out;
    std::stringstream ss(grid);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoll(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse twin-width toolkit: contraction sequences, density, experiments"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random graph (edge-list to stdout/file)");
    std::string gen_model = "regular", gen_out;
    int gen_n = 0, gen_d = 3;
    double gen_p = 0.0;
    long long gen_m = 0;
    tww::Seed gen_seed = 1;
    gen->add_option("--model", gen_model, "gnp|gnm|regular")->required();
    gen->add_option("-n,--n", gen_n, "vertex count")->required();
    gen->add_option("-p,--p", gen_p, "edge probability (gnp)");
    gen->add_option("-m,--m", gen_m, "edge count (gnm)");
    gen->add_option("-d,--d", gen_d, "degree (regular)");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // mad
    auto* mad = app.add_subcommand("mad", "exact maximum average degree");
    std::string mad_graph;
    bool mad_witness = false;
    mad->add_option("graph", mad_graph, "edge-list file")->required();
    mad->add_flag("--witness", mad_witness, "also print the maximizing vertex set");

    // contract
    auto* contract = app.add_subcommand("contract", "build and verify a contraction sequence");
    std::string ct_graph, ct_out, ct_stats = "json";
    bool ct_auto = false;
    int ct_a = 0, ct_b = 0, ct_r = 0, ct_q = 0, ct_retries = 32;
    tww::Seed ct_seed = 1;
    contract->add_option("graph", ct_graph, "edge-list file")->required();
    contract->add_flag("--auto", ct_auto, "choose parameters from v(G) and mad(G)");
    contract->add_option("--a", ct_a);
    contract->add_option("--b", ct_b);
    contract->add_option("--r", ct_r);
    contract->add_option("--q", ct_q);
    contract->add_option("--retries", ct_retries, "labeling retry budget");
    contract->add_option("--seed", ct_seed);
    contract->add_option("--out", ct_out, "sequence output path");
    contract->add_option("--stats-format", ct_stats, "json|csv stats record");

    // verify
    auto* ver = app.add_subcommand("verify", "check a sequence file against a graph");
    std::string ver_graph, ver_seq;
    long long ver_width = -1;
    ver->add_option("graph", ver_graph)->required();
    ver->add_option("sequence", ver_seq)->required();
    ver->add_option("--width", ver_width, "width bound to enforce (default: any)");

    // exact
    auto* exact = app.add_subcommand("exact", "exact sparse twin-width (tiny graphs)");
    std::string ex_graph, ex_out;
    std::uint64_t ex_budget = 50'000'000;
    exact->add_option("graph", ex_graph)->required();
    exact->add_option("--budget", ex_budget, "node budget");
    exact->add_option("--out", ex_out, "witness sequence output path");

    // extract-partition
    auto* ep = app.add_subcommand("extract-partition", "balanced partition from a sequence");
    std::string ep_graph, ep_seq, ep_out;
    int ep_k = 1;
    ep->add_option("graph", ep_graph)->required();
    ep->add_option("sequence", ep_seq)->required();
    ep->add_option("--k", ep_k, "part budget K")->required();
    ep->add_option("--out", ep_out, "output path (default stdout)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "numeric bound evaluators (CSV row)");
    long long bo_n = 0, bo_c0 = 24000;
    int bo_d = 3;
    double bo_eps = 0.1, bo_c1 = 1.0, bo_bigc = 1.0;
    bounds->add_option("--n", bo_n)->required();
    bounds->add_option("--d", bo_d)->required();
    bounds->add_option("--eps", bo_eps, "epsilon constant");
    bounds->add_option("--c1", bo_c1, "count constant C1");
    bounds->add_option("--c0", bo_c0, "count constant C0");
    bounds->add_option("--bigc", bo_bigc, "hidden constant in the upper bound");

    // experiment
    auto* exp = app.add_subcommand("experiment", "scaling experiment over an n-grid (CSV)");
    std::string xp_model = "regular", xp_grid, xp_out, xp_params = "auto";
    int xp_d = 3, xp_trials = 1, xp_jobs = 1;
    long long xp_m = 0;
    double xp_p = 0.0;
    int xp_a = 0, xp_b = 0, xp_r = 0, xp_q = 0;
    tww::Seed xp_seed = 1;
    exp->add_option("--model", xp_model, "gnp|gnm|regular");
    exp->add_option("--n", xp_grid, "comma-separated n grid")->required();
    exp->add_option("--d", xp_d);
    exp->add_option("--m", xp_m);
    exp->add_option("--p", xp_p);
    exp->add_option("--trials", xp_trials);
    exp->add_option("--seed", xp_seed);
    exp->add_option("--params", xp_params, "auto|manual");
    exp->add_option("--a", xp_a);
    exp->add_option("--b", xp_b);
    exp->add_option("--r", xp_r);
    exp->add_option("--q", xp_q);
    exp->add_option("--jobs", xp_jobs, "concurrent trials");
    exp->add_option("--out", xp_out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_model, gen_n, gen_p, gen_m, gen_d, gen_seed, gen_out);
        if (mad->parsed()) return cmd_mad(mad_graph, mad_witness);
        if (contract->parsed())
            return cmd_contract(ct_graph, ct_auto, ct_a, ct_b, ct_r, ct_q, ct_retries, ct_seed,
                                ct_out, ct_stats);
        if (ver->parsed()) return cmd_verify(ver_graph, ver_seq, ver_width);
        if (exact->parsed()) return cmd_exact(ex_graph, ex_budget, ex_out);
        if (ep->parsed()) return cmd_extract_partition(ep_graph, ep_seq, ep_k, ep_out);
        if (bounds->parsed()) return cmd_bounds(bo_n, bo_d, bo_eps, bo_c1, bo_c0, bo_bigc);
        if (exp->parsed()) {
            tww::ExperimentSpec spec;
            spec.model = tww::parse_model(xp_model);
            spec.n_grid = parse_grid(xp_grid);
            spec.d = xp_d;
            spec.m = xp_m;
            spec.p = xp_p;
            spec.trials = xp_trials;
            spec.seed_base = xp_seed;
            spec.jobs = xp_jobs;
            spec.auto_params = xp_params != "manual";
            if (!spec.auto_params) {
                spec.manual.a = xp_a;
                spec.manual.b = xp_b;
                spec.manual.r = xp_r;
                spec.manual.q = xp_q;
            }
            tww::ExperimentResult result = tww::run_experiment(spec);
            std::ofstream file;
            tww::write_csv(open_out(file, xp_out), result);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
