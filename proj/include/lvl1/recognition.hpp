#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lvl1/cograph.hpp"
#include "lvl1/graph.hpp"
#include "lvl1/network.hpp"

namespace lvl1 {

enum class SplitMode { Union, Join };

// Certificate that G is a (v,G[v1],G[v2])-pseudo-cograph:
// v1 u v2 = V, v1 n v2 = {v}, both sides cographs, G-v the union/join of the sides minus v.
struct PseudoWitness {
    Vertex v = -1;
    std::vector<Vertex> v1, v2;  // sorted, both contain v
    SplitMode mode = SplitMode::Union;
    bool trivially_small = false;  // |V| <= 2
};

struct PolarCatWitness {
    PseudoWitness base;
    CatOrdering side1, side2;  // orderings of G[v1], G[v2]; v is the last entry of each
};

struct RecognitionOutcome {
    bool member = false;
    std::optional<PseudoWitness> pseudo_witness;
    std::optional<PolarCatWitness> polar_witness;
    std::optional<LabeledNetwork> network;
    std::vector<Vertex> offending_module;  // set for cat-prime rejections
};

struct ExplainOptions {
    bool flip_sides = false;      // deterministic alternative side orientation
    bool least_resolved = false;  // post-process the network with least_resolved
};

RecognitionOutcome recognize_pseudo_cograph(const Graph& g);

// Throws std::invalid_argument naming the violated clause (F1/F2/F3) on a bad witness.
LabeledNetwork build_pseudo_network(const Graph& g, const PseudoWitness& w);

RecognitionOutcome recognize_polar_cat(const Graph& g, const ExplainOptions& opts = {});

RecognitionOutcome explain_level1(const Graph& g, const ExplainOptions& opts = {});

// (#prime modules with |M| > 1, #strong cycles of the emitted network).
// Throws when g is not level-1 explainable.
std::pair<int, int> count_strong_cycles_vs_prime_modules(const Graph& g);

bool is_well_proportioned(const PolarCatWitness& w);

}  // namespace lvl1
