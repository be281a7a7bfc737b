#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "rainbow/experiment.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

struct GlobalFlags {
    uint64_t seed = 1;
    int threads = 1;
    std::string output;
    std::string format = "json";
    bool seed_set = false, threads_set = false, format_set = false;
};

void apply_globals(rainbow::ExperimentConfig& cfg, const GlobalFlags& g) {
    if (g.seed_set) cfg.seed = g.seed;
    if (g.threads_set) cfg.threads = g.threads;
    if (!g.output.empty()) cfg.output = g.output;
    if (g.format_set) cfg.format = g.format;
}

void emit_json(const nlohmann::ordered_json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty())
        std::cout << text;
    else
        rainbow::write_text_file(path, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-Ramsey toolkit: exact density arithmetic, rainbow "
                 "arrowing decisions and random-graph experiments"};
    app.require_subcommand(1);

    GlobalFlags globals;
    app.add_option("--seed", globals.seed, "base RNG seed")
        ->each([&](const std::string&) { globals.seed_set = true; });
    app.add_option("--threads", globals.threads, "worker threads for trials")
        ->each([&](const std::string&) { globals.threads_set = true; });
    app.add_option("--output", globals.output, "output file (default stdout)");
    app.add_option("--format", globals.format, "csv or json")
        ->each([&](const std::string&) { globals.format_set = true; });

    std::string config_path;

    // density
    auto* density = app.add_subcommand("density", "exact m2-density report");
    std::string density_graph, density_s;
    int density_t = 0;
    density->add_option("--graph", density_graph, "graph spec (e.g. book:4)");
    density->add_option("--beta-s", density_s,
                        "also report beta(graph, S) for this pattern");
    density->add_option("--corollary-t", density_t,
                        "also check the book amalgam gap for this t");
    density->add_option("--config", config_path, "JSON config file");

    // arrows
    auto* arrows = app.add_subcommand("arrows", "decide host ->rb pattern");
    std::string arrows_host, arrows_pattern;
    long long arrows_budget = -1;
    arrows->add_option("--host", arrows_host, "host graph spec");
    arrows->add_option("--pattern", arrows_pattern, "pattern graph spec");
    arrows->add_option("--budget", arrows_budget, "max coloring classes");
    arrows->add_option("--config", config_path, "JSON config file");

    // book-lemma
    auto* book = app.add_subcommand("book-lemma",
                                    "decide B_{3t-2} ->rb B_t exactly");
    int book_t = 1;
    long long book_budget = -1;
    book->add_option("--t", book_t, "page parameter t >= 1");
    book->add_option("--budget", book_budget, "max coloring classes");
    book->add_option("--config", config_path, "JSON config file");

    // gnp-experiment (threshold curve)
    auto* curve = app.add_subcommand("gnp-experiment",
                                     "Monte Carlo rainbow frequency curve");
    curve->add_option("--config", config_path, "JSON config file (required)")
        ->required();

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline",
                                        "two-layer color-partition experiment");
    pipeline->add_option("--config", config_path, "JSON config file (required)")
        ->required();

    // diagnose
    auto* diagnose = app.add_subcommand("diagnose", "pseudo-randomness checks");
    std::string diag_graph;
    int diag_ell = 2;
    double diag_eps = 0.25, diag_mu = 0.25, diag_p = -1.0;
    long long diag_probes = 2000;
    diagnose->add_option("--graph", diag_graph, "graph spec");
    diagnose->add_option("--ell", diag_ell, "circuit diagnostics use length 2*ell");
    diagnose->add_option("--eps", diag_eps, "circuit tolerance");
    diagnose->add_option("--mu", diag_mu, "upper-uniformity mu");
    diagnose->add_option("--p", diag_p, "density scale for uniformity checks");
    diagnose->add_option("--probes", diag_probes, "probes in sampled mode");
    diagnose->add_option("--config", config_path, "JSON config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        rainbow::ExperimentConfig cfg;
        if (!config_path.empty()) {
            cfg = rainbow::ExperimentConfig::load(config_path);
        }

        if (density->parsed()) {
            if (config_path.empty()) cfg.kind = "density";
            if (!density_graph.empty()) cfg.host = density_graph;
            if (!density_s.empty()) cfg.s = density_s;
            if (density_t > 0) cfg.t = density_t;
            apply_globals(cfg, globals);
            emit_json(rainbow::run_density_config(cfg), cfg.output);
        } else if (arrows->parsed()) {
            if (config_path.empty()) cfg.kind = "arrows";
            if (!arrows_host.empty()) cfg.host = arrows_host;
            if (!arrows_pattern.empty()) cfg.target = arrows_pattern;
            if (arrows_budget >= 0) cfg.budget = arrows_budget;
            apply_globals(cfg, globals);
            emit_json(rainbow::run_arrows_config(cfg), cfg.output);
        } else if (book->parsed()) {
            if (config_path.empty()) {
                cfg.kind = "book-lemma";
                cfg.t = book_t;
            }
            if (book->count("--t") > 0) cfg.t = book_t;
            if (book_budget >= 0) cfg.budget = book_budget;
            apply_globals(cfg, globals);
            emit_json(rainbow::run_book_lemma_config(cfg), cfg.output);
        } else if (curve->parsed()) {
            apply_globals(cfg, globals);
            if (cfg.kind != "threshold-curve")
                throw rainbow::ConfigError(
                    "gnp-experiment needs a threshold-curve config");
            const rainbow::CurveResult result = rainbow::run_threshold_curve(cfg);
            rainbow::emit_report(rainbow::curve_table(result),
                                 cfg.format.empty() ? "csv" : cfg.format,
                                 cfg.output);
        } else if (pipeline->parsed()) {
            apply_globals(cfg, globals);
            if (cfg.kind != "pipeline")
                throw rainbow::ConfigError("pipeline needs a pipeline config");
            emit_json(rainbow::run_pipeline_experiment(cfg), cfg.output);
        } else if (diagnose->parsed()) {
            if (config_path.empty()) cfg.kind = "diagnostics";
            if (!diag_graph.empty()) cfg.host = diag_graph;
            if (diagnose->count("--ell") > 0) cfg.ell = diag_ell;
            if (diagnose->count("--eps") > 0) cfg.eps = diag_eps;
            if (diagnose->count("--mu") > 0) cfg.mu = diag_mu;
            if (diagnose->count("--p") > 0) cfg.p = diag_p;
            if (diagnose->count("--probes") > 0) cfg.probes = diag_probes;
            apply_globals(cfg, globals);
            emit_json(rainbow::run_diagnostics_config(cfg), cfg.output);
        }
        return 0;
    } catch (const rainbow::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const rainbow::InfeasibleError& e) {
        std::cerr << "infeasible instance: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
