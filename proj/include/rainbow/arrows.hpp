#ifndef RAINBOW_ARROWS_HPP
#define RAINBOW_ARROWS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

enum class ArrowsVerdict { holds, fails, unknown };

const char* to_string(ArrowsVerdict v);

struct ArrowsResult {
    ArrowsVerdict verdict = ArrowsVerdict::unknown;
    // Present iff verdict == fails: a proper coloring of g with no rainbow
    // copy of h, re-verified on construction.
    std::optional<ProperColoring> counterexample;
    // For holds: a rainbow copy under the all-distinct coloring, as a sanity
    // exhibit (embedding plus its edge colors).
    std::optional<std::pair<Embedding, std::vector<int>>> witness;
    long long colorings_examined = 0;
};

struct ArrowsOptions {
    // Max complete coloring classes to examine; < 0 means unlimited. Verdicts
    // stay three-valued: an exhausted budget can only yield `unknown`.
    long long max_colorings = -1;
    // Skip subtrees whose colored prefix already contains a fully colored
    // rainbow copy of h (sound: every completion keeps that copy).
    bool prune_rainbow_prefix = true;
    // Orderly pruning against prefix-stabilizing edge automorphisms of g.
    // Off by default; results must agree with the plain search.
    bool automorphism_pruning = false;
};

// First copy of h in g (in enumerate_copies order) whose edges carry
// pairwise distinct colors, together with those colors in host-edge order.
// Rejects non-proper colorings.
std::optional<std::pair<Embedding, std::vector<int>>> has_rainbow_copy(
    const Graph& g, const ProperColoring& c, const Graph& h);

// Visits exactly one representative per color-renaming class of proper
// colorings (equivalently, each partition of E(g) into matchings once), in
// lexicographic order of the canonical color strings. The visitor returns
// false to stop early.
void enumerate_proper_colorings(const Graph& g,
                                const std::function<bool(const ProperColoring&)>& visit);

long long count_proper_coloring_classes(const Graph& g);

// Decides g -rb-> h: exhaustive over coloring classes within budget.
ArrowsResult arrows_rainbow(const Graph& g, const Graph& h,
                            const ArrowsOptions& opts = {});

// arrows_rainbow(B_{3t-2}, B_t).
ArrowsResult verify_book_lemma(int t, const ArrowsOptions& opts = {});

// Randomized adversary: greedy color reuse inside copies of h plus random
// restarts. Any returned coloring is re-checked to be proper with no rainbow
// copy of h.
std::optional<ProperColoring> hunt_counterexample(const Graph& g, const Graph& h,
                                                  int trials, uint64_t seed);

}  // namespace rainbow

#endif
