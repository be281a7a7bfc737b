#ifndef RAINBOW_EXPERIMENT_HPP
#define RAINBOW_EXPERIMENT_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rainbow/graph.hpp"

namespace rainbow {

// Bad or inconsistent configuration (exit code 2 at the CLI).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid configuration the toolkit cannot honor at this size
// (exit code 3 at the CLI).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph literals: book:T, cycle:K, clique:K, path:K, g6:STRING, file:PATH.
Graph parse_graph_spec(const std::string& spec);

struct ExperimentConfig {
    int schema_version = 1;
    std::string kind;  // threshold-curve | pipeline | diagnostics | arrows |
                       // density | book-lemma
    int n = 0;
    std::vector<double> p_grid;
    std::vector<double> beta_grid;  // p = c_factor * n^(-beta)
    double c_factor = 1.0;
    double p = -1.0;  // single-p experiments (pipeline)

    std::string target;  // threshold-curve pattern / arrows pattern
    std::string host;    // arrows host / diagnostics graph / density graph
    std::string s, f, h;
    std::array<int, 2> s_root{0, 1};
    std::array<int, 2> f_root{0, 1};
    std::array<int, 2> h_root{0, 1};

    std::string model = "two-layer";  // pipeline: two-layer | gnp
    std::string class_mode = "EH";    // EH | T
    int class_count = 1;              // used when class_mode == "T"
    std::string strategy = "greedy";

    double alpha = 0.01;
    int ell = 2;        // circuit diagnostics use cycles of length 2*ell
    double delta = 0.2;
    double eps = 0.25;
    double mu = 0.25;
    int t = 0;          // book-lemma page count / optional corollary check
    std::vector<int> u_set, v_set;  // explicit pair for regularity checks
    long long budget = -1;
    long long trials = 100;
    long long probes = 2000;
    uint64_t seed = 1;
    int threads = 1;
    std::string output;        // empty = stdout
    std::string format = "csv";

    static ExperimentConfig from_json(const nlohmann::json& j);
    static ExperimentConfig load(const std::string& path);
    nlohmann::ordered_json to_json() const;
};

// Pre-formatted cells make emit/parse round-trips byte-exact.
struct ResultTable {
    int schema_version = 1;
    std::string kind;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const ResultTable&) const = default;
};

std::string format_double(double x);

void emit_report(const ResultTable& table, const std::string& format,
                 const std::string& path);
std::string render_report(const ResultTable& table, const std::string& format);
ResultTable parse_report_text(const std::string& text, const std::string& format);
ResultTable parse_report(const std::string& path);

struct CurvePoint {
    double p = 0.0;
    double exponent = 0.0;
    long long successes = 0;
    long long trials = 0;
    double frequency = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

struct CurveResult {
    std::vector<CurvePoint> points;
    std::string strategy;
    bool heuristic = false;  // adversarial colorings carry no guarantee
};

// Monte Carlo frequency of "the strategy coloring contains a rainbow copy of
// the target" per grid point. Graphs across the p grid are coupled per trial
// (one uniform per pair), so monotone targets are monotone per seed.
CurveResult run_threshold_curve(const ExperimentConfig& cfg);
ResultTable curve_table(const CurveResult& result);

// One full two-layer pipeline pass per trial: sample, color, assign classes,
// census the designated class, diagnose every class subgraph, search for a
// rainbow amalgam. Returns the versioned report (no wall-clock fields, so
// reruns are byte-identical).
nlohmann::ordered_json run_pipeline_experiment(const ExperimentConfig& cfg);

nlohmann::ordered_json run_arrows_config(const ExperimentConfig& cfg);
nlohmann::ordered_json run_density_config(const ExperimentConfig& cfg);
nlohmann::ordered_json run_book_lemma_config(const ExperimentConfig& cfg);
nlohmann::ordered_json run_diagnostics_config(const ExperimentConfig& cfg);

// Runs work(0..trials-1) on the requested number of threads; work must only
// touch its own slot of any shared output.
void parallel_trials(long long trials, int threads,
                     const std::function<void(long long)>& work);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace rainbow

#endif
