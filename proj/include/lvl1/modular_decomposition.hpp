#pragma once

#include <vector>

#include "lvl1/graph.hpp"
#include "lvl1/network.hpp"

namespace lvl1 {

// Modular decomposition tree: one node per strong module, children are the
// maximal modular partition of the node's induced subgraph.
struct Mdt {
    struct Node {
        Lab label = Lab::Leaf;           // Zero (parallel), One (series), Prime, Leaf (singleton)
        std::vector<Vertex> vertices;    // sorted
        std::vector<int> children;       // node ids, ordered by smallest contained vertex
        int depth = 0;
    };
    std::vector<Node> nodes;
    int root = -1;
};

Mdt build_mdt(const Graph& g);

// Children sets of the MDT root. Throws for n < 2.
std::vector<std::vector<Vertex>> max_modular_partition(const Graph& g);

// One vertex per part, adjacency inherited from representatives.
// Throws when parts overlap, do not cover V, or a part is not a module.
Graph quotient(const Graph& g, const std::vector<std::vector<Vertex>>& partition);

std::vector<int> prime_nodes(const Mdt& t);  // node ids, preorder

LabeledNetwork mdt_to_network(const Mdt& t);

}  // namespace lvl1
