#include "rainbow/graph_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rainbow {

namespace {

constexpr int kBias = 63;
constexpr char kHeader[] = ">>graph6<<";

void append_sextets(std::string& out, uint64_t value, int count) {
    for (int k = count - 1; k >= 0; --k)
        out.push_back(static_cast<char>(((value >> (6 * k)) & 0x3f) + kBias));
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int64_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        append_sextets(out, static_cast<uint64_t>(n), 3);
    } else {
        throw std::invalid_argument("graph6: vertex count too large");
    }
    const int64_t bits = n * (n - 1) / 2;
    std::vector<uint8_t> bitset((bits + 7) / 8, 0);
    for (const auto& [u, v] : g.edges()) {
        const int64_t pos = static_cast<int64_t>(v) * (v - 1) / 2 + u;
        bitset[pos >> 3] |= static_cast<uint8_t>(0x80u >> (pos & 7));
    }
    for (int64_t start = 0; start < bits; start += 6) {
        uint8_t group = 0;
        for (int k = 0; k < 6; ++k) {
            const int64_t pos = start + k;
            group <<= 1;
            if (pos < bits && (bitset[pos >> 3] & (0x80u >> (pos & 7)))) group |= 1;
        }
        out.push_back(static_cast<char>(group + kBias));
    }
    return out;
}

Graph from_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(kHeader, 0) == 0) s = s.substr(sizeof(kHeader) - 1);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : s)
        if (c < kBias || c > 126) throw std::invalid_argument("graph6: bad character");
    size_t pos = 0;
    int64_t n = 0;
    if (s[0] != 126) {
        n = s[0] - kBias;
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == 126)
            throw std::invalid_argument("graph6: vertex count too large");
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated size");
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | (s[k] - kBias);
        pos = 4;
    }
    const int64_t bits = n * (n - 1) / 2;
    const size_t need = static_cast<size_t>((bits + 5) / 6);
    if (s.size() - pos != need) throw std::invalid_argument("graph6: wrong length");
    std::vector<Edge> edges;
    int64_t bit = 0;
    int i = 0, j = 1;
    for (size_t k = pos; k < s.size(); ++k) {
        const int group = s[k] - kBias;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (group >> b) & 1;
            if (bit >= bits) {
                if (set) throw std::invalid_argument("graph6: nonzero padding");
                continue;
            }
            if (set) edges.push_back({i, j});
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_adjacency_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_adjacency_text(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("adjacency text: bad header");
    std::vector<Edge> edges;
    for (int k = 0; k < m; ++k) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("adjacency text: truncated");
        edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        std::istringstream lines(text);
        std::string line;
        if (!std::getline(lines, line))
            throw std::invalid_argument("empty graph6 file: " + path);
        return from_graph6(line);
    }
    return from_adjacency_text(text);
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0)
        out << to_graph6(g) << '\n';
    else
        out << to_adjacency_text(g);
}

}  // namespace rainbow
