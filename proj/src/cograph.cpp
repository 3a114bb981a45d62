#include "lvl1/cograph.hpp"

#include <algorithm>
#include <stdexcept>

namespace lvl1 {

namespace {

// Components/co-components recursion that bails out at the first prime module.
bool cotree_rec(const Graph& h, const std::vector<Vertex>& orig, NetBuilder& b, int& out) {
    if (h.n == 1) {
        out = b.add(Lab::Leaf, orig[0]);
        return true;
    }
    std::vector<std::vector<int>> parts = connected_components(h);
    Lab lab = Lab::Zero;
    if (parts.size() < 2) {
        parts = co_components(h);
        lab = Lab::One;
    }
    if (parts.size() < 2) return false;  // prime: not a cograph
    int me = b.add(lab);
    for (const auto& part : parts) {
        std::vector<Vertex> sub_orig;
        sub_orig.reserve(part.size());
        for (int v : part) sub_orig.push_back(orig[v]);
        InducedSubgraph sub = induced_subgraph(h, part);
        int cid = -1;
        if (!cotree_rec(sub.graph, sub_orig, b, cid)) return false;
        b.edge(me, cid);
    }
    out = me;
    return true;
}

}  // namespace

std::optional<LabeledNetwork> build_cotree(const Graph& g) {
    if (g.n < 1) return std::nullopt;
    NetBuilder b;
    std::vector<Vertex> all(g.n);
    for (int i = 0; i < g.n; ++i) all[i] = i;
    int root = -1;
    if (!cotree_rec(g, all, b, root)) return std::nullopt;
    return b.finish(root);
}

std::optional<CatOrdering> caterpillar_ordering(const Graph& g) {
    if (g.n == 0) return std::nullopt;
    if (g.n == 1) return CatOrdering{{0}, CatMode::Connected};
    auto ct = build_cotree(g);
    if (!ct) return std::nullopt;
    const Network& net = ct->net;
    const Labeling& lab = ct->lab;

    CatOrdering o;
    o.mode = lab[net.root] == Lab::One ? CatMode::Connected : CatMode::Disconnected;
    int cur = net.root;
    while (true) {
        if (net.outdeg(cur) != 2) return std::nullopt;
        int a = net.kids[cur][0], b = net.kids[cur][1];
        bool la = net.is_leaf(a), lb = net.is_leaf(b);
        if (la && lb) {  // cherry, ascending ids
            int x = net.leaf_name[a], y = net.leaf_name[b];
            o.order.push_back(std::min(x, y));
            o.order.push_back(std::max(x, y));
            break;
        }
        if (la != lb) {
            o.order.push_back(net.leaf_name[la ? a : b]);
            cur = la ? b : a;
            continue;
        }
        return std::nullopt;  // two inner children: spine is not a path
    }
    return o;
}

bool is_cherry_vertex(const CatOrdering& o, Vertex v) {
    size_t n = o.order.size();
    if (std::find(o.order.begin(), o.order.end(), v) == o.order.end())
        throw std::invalid_argument("is_cherry_vertex: vertex not in ordering");
    if (n < 2) return false;
    return v == o.order[n - 1] || v == o.order[n - 2];
}

}  // namespace lvl1
