#include "rainbow/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "rainbow/arrows.hpp"
#include "rainbow/census.hpp"
#include "rainbow/density.hpp"
#include "rainbow/diagnostics.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/random_models.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

namespace {

int parse_int(const std::string& text, const std::string& spec) {
    try {
        size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing junk");
        return value;
    } catch (const std::exception&) {
        throw ConfigError("bad integer in graph spec: " + spec);
    }
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ConfigError("graph spec needs the form kind:arg, got: " + spec);
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    try {
        if (kind == "book") return make_book(parse_int(arg, spec));
        if (kind == "cycle") return make_cycle(parse_int(arg, spec));
        if (kind == "clique") return make_clique(parse_int(arg, spec));
        if (kind == "path") return make_path(parse_int(arg, spec));
        if (kind == "g6") return from_graph6(arg);
        if (kind == "file") return read_graph_file(arg);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("bad graph spec '" + spec + "': " + e.what());
    }
    throw ConfigError("unknown graph constructor: " + kind);
}

namespace {

template <typename T>
void read_field(const nlohmann::json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        j.at(key).get_to(out);
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(std::string("config field '") + key + "' has the wrong type");
    }
}

void read_root(const nlohmann::json& j, const char* key, std::array<int, 2>& out) {
    if (!j.contains(key)) return;
    std::vector<int> pair;
    read_field(j, key, pair);
    if (pair.size() != 2) throw ConfigError(std::string(key) + " must be [a, b]");
    out = {pair[0], pair[1]};
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    ExperimentConfig c;
    read_field(j, "schema_version", c.schema_version);
    if (c.schema_version != 1)
        throw ConfigError("unsupported schema_version (expected 1)");
    if (!j.contains("kind")) throw ConfigError("config requires a kind");
    read_field(j, "kind", c.kind);
    read_field(j, "n", c.n);
    read_field(j, "p_grid", c.p_grid);
    read_field(j, "beta_grid", c.beta_grid);
    read_field(j, "c_factor", c.c_factor);
    read_field(j, "p", c.p);
    read_field(j, "target", c.target);
    read_field(j, "host", c.host);
    read_field(j, "s", c.s);
    read_field(j, "f", c.f);
    read_field(j, "h", c.h);
    read_root(j, "s_root", c.s_root);
    read_root(j, "f_root", c.f_root);
    read_root(j, "h_root", c.h_root);
    read_field(j, "model", c.model);
    read_field(j, "class_mode", c.class_mode);
    read_field(j, "class_count", c.class_count);
    read_field(j, "strategy", c.strategy);
    read_field(j, "alpha", c.alpha);
    read_field(j, "ell", c.ell);
    read_field(j, "delta", c.delta);
    read_field(j, "eps", c.eps);
    read_field(j, "mu", c.mu);
    read_field(j, "t", c.t);
    read_field(j, "u_set", c.u_set);
    read_field(j, "v_set", c.v_set);
    read_field(j, "budget", c.budget);
    read_field(j, "trials", c.trials);
    read_field(j, "probes", c.probes);
    read_field(j, "seed", c.seed);
    read_field(j, "threads", c.threads);
    read_field(j, "output", c.output);
    read_field(j, "format", c.format);

    if (c.format != "csv" && c.format != "json")
        throw ConfigError("format must be csv or json");
    if (c.threads < 1) throw ConfigError("threads must be >= 1");
    if (c.trials < 1) throw ConfigError("trials must be >= 1");
    if (c.class_mode != "EH" && c.class_mode != "T")
        throw ConfigError("class_mode must be EH or T");
    for (double p : c.p_grid)
        if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p_grid values must lie in [0,1]");
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    return from_json(j);
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = schema_version;
    j["kind"] = kind;
    if (n > 0) j["n"] = n;
    if (!p_grid.empty()) j["p_grid"] = p_grid;
    if (!beta_grid.empty()) {
        j["beta_grid"] = beta_grid;
        j["c_factor"] = c_factor;
    }
    if (p >= 0.0) j["p"] = p;
    if (!target.empty()) j["target"] = target;
    if (!host.empty()) j["host"] = host;
    if (!s.empty()) {
        j["s"] = s;
        j["s_root"] = s_root;
    }
    if (!f.empty()) {
        j["f"] = f;
        j["f_root"] = f_root;
    }
    if (!h.empty()) {
        j["h"] = h;
        j["h_root"] = h_root;
    }
    if (kind == "pipeline") {
        j["model"] = model;
        j["class_mode"] = class_mode;
        if (class_mode == "T") j["class_count"] = class_count;
        j["alpha"] = alpha;
        j["ell"] = ell;
        j["delta"] = delta;
    }
    if (kind == "pipeline" || kind == "threshold-curve") j["strategy"] = strategy;
    if (t > 0) j["t"] = t;
    if (budget >= 0) j["budget"] = budget;
    j["trials"] = trials;
    j["seed"] = seed;
    j["threads"] = threads;
    j["format"] = format;
    return j;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string render_report(const ResultTable& table, const std::string& format) {
    if (format == "csv") {
        std::ostringstream out;
        out << "# schema_version=" << table.schema_version << '\n';
        out << "# kind=" << table.kind << '\n';
        for (size_t i = 0; i < table.columns.size(); ++i)
            out << (i ? "," : "") << table.columns[i];
        out << '\n';
        for (const auto& row : table.rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (row[i].find_first_of(",\n\"") != std::string::npos)
                    throw std::logic_error("table cell needs quoting: " + row[i]);
                out << (i ? "," : "") << row[i];
            }
            out << '\n';
        }
        return out.str();
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = table.schema_version;
        j["kind"] = table.kind;
        j["columns"] = table.columns;
        j["rows"] = table.rows;
        return j.dump(2) + "\n";
    }
    throw ConfigError("format must be csv or json");
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
}

void emit_report(const ResultTable& table, const std::string& format,
                 const std::string& path) {
    const std::string text = render_report(table, format);
    if (path.empty())
        std::cout << text;
    else
        write_text_file(path, text);
}

ResultTable parse_report_text(const std::string& text, const std::string& format) {
    ResultTable table;
    if (format == "json") {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("bad report json: " + std::string(e.what()));
        }
        table.schema_version = j.at("schema_version").get<int>();
        table.kind = j.at("kind").get<std::string>();
        table.columns = j.at("columns").get<std::vector<std::string>>();
        table.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
        return table;
    }
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(s);
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!s.empty() && s.back() == ',') cells.push_back("");
        return cells;
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq != std::string::npos) {
                const std::string key = line.substr(2, eq - 2);
                const std::string value = line.substr(eq + 1);
                if (key == "schema_version") table.schema_version = std::stoi(value);
                if (key == "kind") table.kind = value;
            }
            continue;
        }
        if (!have_header) {
            table.columns = split(line);
            have_header = true;
        } else {
            table.rows.push_back(split(line));
        }
    }
    return table;
}

ResultTable parse_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    const bool json = first != std::string::npos && text[first] == '{';
    return parse_report_text(text, json ? "json" : "csv");
}

void parallel_trials(long long trials, int threads,
                     const std::function<void(long long)>& work) {
    if (threads <= 1 || trials <= 1) {
        for (long long i = 0; i < trials; ++i) work(i);
        return;
    }
    std::atomic<long long> next{0};
    const int workers = static_cast<int>(std::min<long long>(threads, trials));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (;;) {
                const long long i = next.fetch_add(1);
                if (i >= trials) return;
                work(i);
            }
        });
    for (auto& th : pool) th.join();
}

namespace {

double grid_exponent(double p, int n) {
    if (p <= 0.0) return std::numeric_limits<double>::infinity();
    if (p >= 1.0) return 0.0;
    return -std::log(p) / std::log(static_cast<double>(n));
}

struct GridPoint {
    double p;
    double exponent;
};

std::vector<GridPoint> build_grid(const ExperimentConfig& cfg) {
    std::vector<GridPoint> grid;
    if (!cfg.p_grid.empty()) {
        for (double p : cfg.p_grid) grid.push_back({p, grid_exponent(p, cfg.n)});
    } else if (!cfg.beta_grid.empty()) {
        for (double beta : cfg.beta_grid) {
            const double p =
                cfg.c_factor * std::pow(static_cast<double>(cfg.n), -beta);
            if (!(p >= 0.0 && p <= 1.0))
                throw ConfigError("beta grid yields p outside [0,1]");
            grid.push_back({p, beta});
        }
    } else {
        throw ConfigError("threshold-curve needs p_grid or beta_grid");
    }
    if (grid.empty()) throw ConfigError("empty grid");
    return grid;
}

}  // namespace

CurveResult run_threshold_curve(const ExperimentConfig& cfg) {
    if (cfg.n < 1) throw ConfigError("n must be positive");
    if (cfg.n > 2000)
        throw InfeasibleError(
            "threshold-curve capped at n <= 2000; shrink n or sample offline");
    const std::string target_spec = cfg.target.empty() ? cfg.h : cfg.target;
    if (target_spec.empty()) throw ConfigError("threshold-curve needs a target graph");
    const Graph target = parse_graph_spec(target_spec);
    if (target.vertex_count() > 8)
        throw InfeasibleError(
            "per-trial rainbow search capped at 8-vertex targets; use a smaller "
            "pattern");
    const auto grid = build_grid(cfg);
    const ColoringStrategy strategy = [&] {
        try {
            return parse_strategy(cfg.strategy);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }();

    std::vector<std::vector<uint8_t>> found(
        cfg.trials, std::vector<uint8_t>(grid.size(), 0));
    parallel_trials(cfg.trials, cfg.threads, [&](long long i) {
        const uint64_t graph_seed = derive_seed(cfg.seed, 2 * i);
        const uint64_t color_seed = derive_seed(cfg.seed, 2 * i + 1);
        for (size_t k = 0; k < grid.size(); ++k) {
            const Graph g = gnp_from_uniform_stream(cfg.n, grid[k].p, graph_seed);
            ColoringOptions copts;
            copts.strategy = strategy;
            copts.seed = color_seed;
            copts.adversary_target = &target;
            const ProperColoring c = proper_color(g, copts);
            found[i][k] = has_rainbow_copy(g, c, target) ? 1 : 0;
        }
    });

    CurveResult result;
    result.strategy = to_string(strategy);
    result.heuristic = strategy == ColoringStrategy::adversarial;
    for (size_t k = 0; k < grid.size(); ++k) {
        CurvePoint pt;
        pt.p = grid[k].p;
        pt.exponent = grid[k].exponent;
        pt.trials = cfg.trials;
        for (long long i = 0; i < cfg.trials; ++i) pt.successes += found[i][k];
        pt.frequency = static_cast<double>(pt.successes) / cfg.trials;
        const double se = std::sqrt(pt.frequency * (1.0 - pt.frequency) / cfg.trials);
        pt.ci_low = std::max(0.0, pt.frequency - 1.96 * se);
        pt.ci_high = std::min(1.0, pt.frequency + 1.96 * se);
        result.points.push_back(pt);
    }
    return result;
}

ResultTable curve_table(const CurveResult& result) {
    ResultTable table;
    table.kind = "threshold-curve";
    table.columns = {"p",      "exponent", "frequency", "trials",   "ci_low",
                     "ci_high", "successes", "strategy", "heuristic"};
    for (const auto& pt : result.points)
        table.rows.push_back({format_double(pt.p), format_double(pt.exponent),
                              format_double(pt.frequency), std::to_string(pt.trials),
                              format_double(pt.ci_low), format_double(pt.ci_high),
                              std::to_string(pt.successes), result.strategy,
                              result.heuristic ? "1" : "0"});
    return table;
}

namespace {

bool roots_extend(const Graph& big, const Graph& small, std::vector<int>& map,
                  std::vector<bool>& used, int v) {
    if (v == small.vertex_count()) return true;
    if (map[v] >= 0) {
        for (int w : small.neighbors(v))
            if (map[w] >= 0 && !big.has_edge(map[v], map[w])) return false;
        return roots_extend(big, small, map, used, v + 1);
    }
    for (int cand = 0; cand < big.vertex_count(); ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (int w : small.neighbors(v))
            if (map[w] >= 0 && !big.has_edge(cand, map[w])) ok = false;
        if (!ok) continue;
        map[v] = cand;
        used[cand] = true;
        if (roots_extend(big, small, map, used, v + 1)) return true;
        map[v] = -1;
        used[cand] = false;
    }
    return false;
}

// Does small embed into big with the two root vertices pinned?
bool embeds_with_roots(const Graph& big, int ba, int bb, const Graph& small,
                       int sa, int sb) {
    std::vector<int> map(small.vertex_count(), -1);
    std::vector<bool> used(big.vertex_count(), false);
    map[sa] = ba;
    map[sb] = bb;
    used[ba] = used[bb] = true;
    return roots_extend(big, small, map, used, 0);
}

nlohmann::ordered_json coloring_json(const Graph& g, const ProperColoring& c) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges()[e];
        edges.push_back({u, v, c.colors[e]});
    }
    return nlohmann::ordered_json{{"edges", std::move(edges)}};
}

nlohmann::ordered_json graph_json(const Graph& g) {
    return nlohmann::ordered_json{{"n", g.vertex_count()},
                                  {"edges", g.edge_count()},
                                  {"graph6", to_graph6(g)}};
}

nlohmann::ordered_json arrows_json(const Graph& g, const Graph& h,
                                   const ArrowsResult& res) {
    nlohmann::ordered_json j;
    j["host"] = graph_json(g);
    j["pattern"] = graph_json(h);
    j["verdict"] = to_string(res.verdict);
    j["colorings_examined"] = res.colorings_examined;
    if (res.counterexample)
        j["counterexample"] = coloring_json(g, *res.counterexample);
    else
        j["counterexample"] = nullptr;
    if (res.witness) {
        j["witness"] = {{"map", res.witness->first.map},
                        {"colors", res.witness->second}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

struct PipelineSetup {
    LabeledTwoGraph s, f, h;
    Graph amalgam;
    PartitionLayout layout;
    int class_count = 0;
    int root_class = 0;           // class searched for S copies (EH: root edge)
    double q = 0.0, q_prime = 0.0;
    std::vector<int> v_part_of;   // vertex -> V-part id or -1
    std::vector<int> h_region;    // H vertex -> layout part id
};

PipelineSetup prepare_pipeline(const ExperimentConfig& cfg, double p) {
    if (cfg.s.empty() || cfg.f.empty() || cfg.h.empty())
        throw ConfigError("pipeline needs s, f and h graph specs");
    auto labeled = [&](const std::string& spec, const std::array<int, 2>& root,
                       const char* what) {
        try {
            return LabeledTwoGraph(parse_graph_spec(spec), root[0], root[1]);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string(what) + ": " + e.what());
        }
    };
    PipelineSetup setup{labeled(cfg.s, cfg.s_root, "s"),
                        labeled(cfg.f, cfg.f_root, "f"),
                        labeled(cfg.h, cfg.h_root, "h"),
                        Graph(),
                        PartitionLayout(),
                        0,
                        0,
                        0.0,
                        0.0,
                        {},
                        {}};
    if (!embeds_with_roots(setup.s.graph, setup.s.root_a, setup.s.root_b,
                           setup.f.graph, setup.f.root_a, setup.f.root_b))
        throw ConfigError("f must embed into s with matching roots");
    setup.amalgam = amalgamate(setup.f, setup.h);

    const int s_verts = setup.s.graph.vertex_count();
    const int h_verts = setup.h.graph.vertex_count();
    if (cfg.n < s_verts + h_verts - 2)
        throw InfeasibleError("n is smaller than the number of layout parts");
    setup.layout = make_equitable_layout(cfg.n, s_verts, h_verts);

    if (cfg.class_mode == "EH") {
        setup.class_count = setup.h.graph.edge_count();
        setup.root_class =
            setup.h.graph.edge_index(setup.h.root_a, setup.h.root_b);
    } else {
        if (cfg.class_count < 1) throw ConfigError("class_count must be >= 1");
        setup.class_count = cfg.class_count;
        setup.root_class = 0;
    }

    if (cfg.model == "two-layer") {
        setup.q = 6.0 * setup.s.graph.edge_count() *
                  std::pow(static_cast<double>(cfg.n), s_verts - 2) *
                  std::pow(p, setup.s.graph.edge_count());
        setup.q_prime = setup.h.graph.edge_count() * setup.q;
        if (setup.q_prime > p || setup.q_prime > 1.0)
            throw InfeasibleError(
                "two-layer overlay density q' = e(H)*6*e(S)*n^{v(S)-2}*p^{e(S)} "
                "exceeds p; lower p (or c_factor) or raise n");
    } else if (cfg.model != "gnp") {
        throw ConfigError("model must be two-layer or gnp");
    }

    setup.v_part_of.assign(cfg.n, -1);
    for (int i = 0; i < s_verts; ++i)
        for (int v : setup.layout.parts[i]) setup.v_part_of[v] = i;

    // H vertex -> layout part: the root pair shares the parts of s's roots,
    // the rest take the U parts in ascending vertex order.
    setup.h_region.assign(h_verts, -1);
    setup.h_region[setup.h.root_a] = setup.s.root_a;
    setup.h_region[setup.h.root_b] = setup.s.root_b;
    int slot = s_verts;
    for (int w = 0; w < h_verts; ++w)
        if (setup.h_region[w] < 0) setup.h_region[w] = slot++;
    return setup;
}

nlohmann::ordered_json degree_json(const DegreeConcentration& dc, double reference,
                                   double delta) {
    return nlohmann::ordered_json{{"reference", reference},
                                  {"delta", delta},
                                  {"fraction_within", dc.fraction_within},
                                  {"min_degree", dc.min_degree},
                                  {"max_degree", dc.max_degree}};
}

constexpr int kMaxSpectralVertices = 400;

nlohmann::ordered_json circuit_json(const Graph& g, int ell) {
    if (g.vertex_count() > kMaxSpectralVertices)
        return nlohmann::ordered_json{{"skipped_large_instance", true}};
    const CircuitWeight cw = circuit_weight_sum(g, ell);
    return nlohmann::ordered_json{{"length", ell},
                                  {"weight_sum", cw.value},
                                  {"excluded_isolated", cw.excluded_isolated}};
}

}  // namespace

nlohmann::ordered_json run_pipeline_experiment(const ExperimentConfig& cfg) {
    if (cfg.n < 1) throw ConfigError("n must be positive");
    const double p = cfg.p >= 0.0
                         ? cfg.p
                         : (!cfg.beta_grid.empty()
                                ? cfg.c_factor * std::pow(static_cast<double>(cfg.n),
                                                          -cfg.beta_grid.front())
                                : -1.0);
    if (!(p >= 0.0 && p <= 1.0))
        throw ConfigError("pipeline needs p in [0,1] (or beta_grid + c_factor)");
    if (cfg.n > 5000) throw InfeasibleError("pipeline capped at n <= 5000");
    PipelineSetup setup = prepare_pipeline(cfg, p);
    const ColoringStrategy strategy = [&] {
        try {
            return parse_strategy(cfg.strategy);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }();

    const int s_verts = setup.s.graph.vertex_count();
    const double y_threshold =
        cfg.alpha * std::pow(static_cast<double>(cfg.n), s_verts) *
        std::pow(p, setup.s.graph.edge_count());
    std::vector<std::vector<int>> v_parts(setup.layout.parts.begin(),
                                          setup.layout.parts.begin() + s_verts);

    std::vector<nlohmann::ordered_json> records(cfg.trials);
    std::vector<double> y_values(cfg.trials, 0.0);
    std::vector<uint8_t> rainbow_found(cfg.trials, 0);
    std::vector<double> degree_fractions(cfg.trials, 0.0);

    parallel_trials(cfg.trials, cfg.threads, [&](long long i) {
        const uint64_t sample_seed = derive_seed(cfg.seed, 8 * i);
        const uint64_t color_seed = derive_seed(cfg.seed, 8 * i + 1);
        const uint64_t sigma_seed = derive_seed(cfg.seed, 8 * i + 2);

        const Graph g = cfg.model == "two-layer"
                            ? sample_two_layer(cfg.n, p, setup.q_prime,
                                               setup.layout, sample_seed)
                                  .graph
                            : sample_gnp(cfg.n, p, sample_seed).graph;
        ColoringOptions copts;
        copts.strategy = strategy;
        copts.seed = color_seed;
        copts.adversary_target = &setup.amalgam;
        const ProperColoring coloring = proper_color(g, copts);
        const ColorAssignment sigma =
            assign_colors(coloring, setup.class_count, sigma_seed);

        std::vector<Graph> class_graphs;
        long long class_edge_total = 0;
        for (int t = 0; t < setup.class_count; ++t) {
            class_graphs.push_back(color_class_subgraph(g, coloring, sigma, t));
            class_edge_total += class_graphs.back().edge_count();
        }
        const bool partition_ok = class_edge_total == g.edge_count();

        // Transversal census of the designated class inside the V block.
        const Graph& root_class_graph = class_graphs[setup.root_class];
        std::vector<bool> keep(root_class_graph.edge_count(), false);
        for (int e = 0; e < root_class_graph.edge_count(); ++e) {
            const auto& [u, v] = root_class_graph.edges()[e];
            keep[e] = setup.v_part_of[u] >= 0 && setup.v_part_of[v] >= 0 &&
                      setup.v_part_of[u] != setup.v_part_of[v];
        }
        const Graph census_graph = spanning_subgraph(root_class_graph, keep);
        const TransversalCounts census =
            transversal_counts(census_graph, setup.s.graph, v_parts, true);
        y_values[i] = static_cast<double>(census.y);

        nlohmann::ordered_json diag = nlohmann::ordered_json::array();
        double fraction_sum = 0.0;
        int fraction_terms = 0;
        if (cfg.class_mode == "EH") {
            for (int t = 0; t < setup.class_count; ++t) {
                const auto& [ha, hb] = setup.h.graph.edges()[t];
                std::vector<int> region = setup.layout.parts[setup.h_region[ha]];
                const auto& other = setup.layout.parts[setup.h_region[hb]];
                region.insert(region.end(), other.begin(), other.end());
                std::sort(region.begin(), region.end());
                const Graph sub = induced_subgraph(class_graphs[t], region);
                const double reference =
                    cfg.model == "two-layer"
                        ? setup.q * static_cast<double>(region.size())
                        : p * static_cast<double>(region.size()) /
                              setup.class_count;
                const DegreeConcentration dc =
                    degree_concentration_report(sub, reference, cfg.delta);
                fraction_sum += dc.fraction_within;
                ++fraction_terms;
                diag.push_back({{"class", t},
                                {"h_edge", {ha, hb}},
                                {"region_size", region.size()},
                                {"degree", degree_json(dc, reference, cfg.delta)},
                                {"circuit", circuit_json(sub, 2 * cfg.ell)}});
            }
        } else {
            for (int t = 0; t < setup.class_count; ++t) {
                const double reference =
                    p * static_cast<double>(cfg.n) / setup.class_count;
                const DegreeConcentration dc = degree_concentration_report(
                    class_graphs[t], reference, cfg.delta);
                fraction_sum += dc.fraction_within;
                ++fraction_terms;
                diag.push_back(
                    {{"class", t},
                     {"degree", degree_json(dc, reference, cfg.delta)},
                     {"circuit", circuit_json(class_graphs[t], 2 * cfg.ell)}});
            }
        }
        degree_fractions[i] = fraction_terms ? fraction_sum / fraction_terms : 0.0;

        const bool rainbow =
            has_rainbow_copy(g, coloring, setup.amalgam).has_value();
        rainbow_found[i] = rainbow ? 1 : 0;

        nlohmann::ordered_json rec;
        rec["trial"] = i;
        rec["seed"] = sample_seed;
        rec["edge_count"] = g.edge_count();
        rec["colors_used"] = coloring.color_count();
        rec["class_partition_ok"] = partition_ok;
        rec["census"] = {{"class", setup.root_class},
                         {"z", census.z},
                         {"y", census.y},
                         {"threshold", y_threshold},
                         {"y_meets_threshold", y_values[i] >= y_threshold}};
        rec["class_diagnostics"] = std::move(diag);
        rec["rainbow_amalgam_found"] = rainbow;
        records[i] = std::move(rec);
    });

    nlohmann::ordered_json out;
    out["schema_version"] = 1;
    out["kind"] = "pipeline";
    out["config"] = cfg.to_json();
    {
        nlohmann::ordered_json derived;
        derived["p"] = p;
        derived["classes"] = setup.class_count;
        derived["root_class"] = setup.root_class;
        if (cfg.model == "two-layer") {
            derived["q"] = setup.q;
            derived["q_prime"] = setup.q_prime;
        }
        derived["y_threshold"] = y_threshold;
        derived["amalgam"] = graph_json(setup.amalgam);
        derived["strategy_is_heuristic"] =
            strategy == ColoringStrategy::adversarial;
        out["derived"] = std::move(derived);
    }
    out["trials"] = records;

    nlohmann::ordered_json summary;
    double y_sum = 0.0, frac_sum = 0.0;
    long long meets = 0, rainbows = 0;
    for (long long i = 0; i < cfg.trials; ++i) {
        y_sum += y_values[i];
        frac_sum += degree_fractions[i];
        if (y_values[i] >= y_threshold) ++meets;
        if (rainbow_found[i]) ++rainbows;
    }
    summary["trials"] = cfg.trials;
    summary["y_mean"] = y_sum / cfg.trials;
    summary["y_meets_threshold_count"] = meets;
    summary["rainbow_found_count"] = rainbows;
    summary["mean_degree_fraction"] = frac_sum / cfg.trials;
    out["summary"] = std::move(summary);
    return out;
}

nlohmann::ordered_json run_arrows_config(const ExperimentConfig& cfg) {
    if (cfg.host.empty() || cfg.target.empty())
        throw ConfigError("arrows needs host and target graph specs");
    const Graph g = parse_graph_spec(cfg.host);
    const Graph h = parse_graph_spec(cfg.target);
    if (g.edge_count() > 24)
        throw InfeasibleError(
            "exact arrows enumeration capped at 24 host edges; use "
            "hunt-counterexample workflows instead");
    ArrowsOptions opts;
    opts.max_colorings = cfg.budget;
    const ArrowsResult res = arrows_rainbow(g, h, opts);
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "arrows";
    j.update(arrows_json(g, h, res));
    return j;
}

nlohmann::ordered_json run_book_lemma_config(const ExperimentConfig& cfg) {
    if (cfg.t < 1) throw ConfigError("book-lemma needs t >= 1");
    if (cfg.t > 4)
        throw InfeasibleError("book-lemma enumeration capped at t <= 4");
    ArrowsOptions opts;
    opts.max_colorings = cfg.budget;
    const ArrowsResult res = verify_book_lemma(cfg.t, opts);
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "book-lemma";
    j["t"] = cfg.t;
    j.update(arrows_json(make_book(3 * cfg.t - 2), make_book(cfg.t), res));
    return j;
}

nlohmann::ordered_json run_density_config(const ExperimentConfig& cfg) {
    if (cfg.host.empty()) throw ConfigError("density needs a host graph spec");
    const Graph g = parse_graph_spec(cfg.host);
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "density";
    j["graph"] = graph_json(g);
    try {
        const DensityReport report = m2_density(g);
        j["m2"] = report.value.str();
        j["m2_double"] = report.value.to_double();
        j["two_balanced"] = report.two_balanced;
        j["witness"] = {{"vertices", report.witness_vertices},
                        {"graph6", to_graph6(report.witness)}};
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (!cfg.s.empty()) {
        const Graph s = parse_graph_spec(cfg.s);
        const Rational b = beta(g, s);
        j["beta"] = {{"s", graph_json(s)},
                     {"value", b.str()},
                     {"value_double", b.to_double()}};
    }
    if (cfg.t > 0) {
        const CorollaryGapReport gap = check_corollary_gap(g, cfg.t);
        j["corollary_gap"] = {
            {"t", gap.t},
            {"beta", gap.beta_value.str()},
            {"m2_amalgam_reciprocal", gap.m2_amalgam_reciprocal.str()},
            {"beta_above_half", gap.beta_above_half},
            {"reciprocal_at_most_half", gap.reciprocal_at_most_half},
            {"strict_gap", gap.strict_gap}};
    }
    return j;
}

nlohmann::ordered_json run_diagnostics_config(const ExperimentConfig& cfg) {
    if (cfg.host.empty()) throw ConfigError("diagnostics needs a host graph spec");
    const Graph g = parse_graph_spec(cfg.host);
    DiagnosticsReport report;

    if (g.edge_count() > 0) {
        const bool exact = g.vertex_count() <= 18;
        const DiscrepancyReport disc =
            disc_discrepancy(g, exact ? CheckMethod::exact : CheckMethod::sampled,
                             cfg.probes, cfg.seed);
        report.entries.push_back(
            {"disc",
             {{"mode", to_string(disc.method)}},
             {{"epsilon", disc.epsilon},
              {"witness_u", disc.witness_u},
              {"witness_v", disc.witness_v}},
             to_string(disc.method),
             disc.probes});
    }

    const int ell = 2 * cfg.ell;
    if (g.edge_count() > 0 && g.vertex_count() <= kMaxSpectralVertices) {
        const CircuitWeight cw = circuit_weight_sum(g, ell);
        report.entries.push_back(
            {"circuit",
             {{"length", ell}, {"eps", cfg.eps}},
             {{"weight_sum", cw.value},
              {"excluded_isolated", cw.excluded_isolated},
              {"holds", std::abs(cw.value - 1.0) <= cfg.eps}},
             "exact",
             0});
    }
    if (g.vertex_count() <= 64) {
        report.entries.push_back({"counts",
                                  {{"length", ell}},
                                  {{"circuits", count_circuits(g, ell)},
                                   {"cycles", count_cycles(g, ell)}},
                                  "exact",
                                  0});
    }
    if (cfg.p >= 0.0) {
        const bool exact = g.vertex_count() <= 16;
        const SubsetCheckReport uu =
            check_upper_uniform(g, cfg.mu, cfg.p,
                                exact ? CheckMethod::exact : CheckMethod::sampled,
                                cfg.probes, cfg.seed);
        report.entries.push_back({"upper-uniform",
                                  {{"mu", cfg.mu}, {"p", cfg.p}},
                                  {{"holds", uu.holds}, {"worst_density", uu.worst}},
                                  to_string(uu.method),
                                  uu.probes});
    }
    if (!cfg.u_set.empty() && !cfg.v_set.empty()) {
        const PairDensity pd = pair_density(g, cfg.u_set, cfg.v_set);
        report.entries.push_back({"pair-density",
                                  {{"u", cfg.u_set}, {"v", cfg.v_set}},
                                  {{"edges_across", pd.edges_across},
                                   {"density", pd.density}},
                                  "exact",
                                  0});
        if (cfg.p >= 0.0) {
            const bool exact = cfg.u_set.size() + cfg.v_set.size() <= 26;
            const SubsetCheckReport reg = check_regular_pair(
                g, cfg.u_set, cfg.v_set, cfg.eps, cfg.p,
                exact ? CheckMethod::exact : CheckMethod::sampled, cfg.probes,
                cfg.seed);
            report.entries.push_back(
                {"regular-pair",
                 {{"eps", cfg.eps}, {"p", cfg.p}},
                 {{"holds", reg.holds}, {"worst_deviation", reg.worst}},
                 to_string(reg.method),
                 reg.probes});
        }
    }

    nlohmann::ordered_json j = report.to_json();
    j["kind"] = "diagnostics";
    j["graph"] = graph_json(g);
    return j;
}

}  // namespace rainbow
