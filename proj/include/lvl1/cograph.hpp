#pragma once

#include <optional>
#include <vector>

#include "lvl1/graph.hpp"
#include "lvl1/network.hpp"

namespace lvl1 {

enum class CatMode { Connected, Disconnected };

// Vertex sequence x_1..x_n of a caterpillar-explainable cograph.
// Connected mode: {x_i,x_j} is an edge iff i is odd (1-based, i < j);
// disconnected mode: iff i is even. x_{n-1}, x_n form the cherry.
struct CatOrdering {
    std::vector<Vertex> order;
    CatMode mode = CatMode::Connected;
};

// Present iff g is a cograph; the result is the unique discriminating cotree.
std::optional<LabeledNetwork> build_cotree(const Graph& g);

// Present iff g is a caterpillar-explainable cograph (n <= 2 included).
std::optional<CatOrdering> caterpillar_ordering(const Graph& g);

bool is_cherry_vertex(const CatOrdering& o, Vertex v);

}  // namespace lvl1
