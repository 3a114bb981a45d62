#include "lvl1/modular_decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lvl1 {

namespace {

// Coarsest partition of V(h) \ {piv} into modules of h avoiding piv.
// Splitting a class by an outside vertex never cuts a piv-avoiding module,
// so the fixpoint classes are exactly the maximal such modules.
std::vector<std::vector<int>> refine_avoiding(const Graph& h, int piv) {
    int n = h.n;
    std::vector<int> class_of(n, 0);
    class_of[piv] = -1;
    std::vector<std::vector<int>> classes(1);
    for (int v = 0; v < n; ++v)
        if (v != piv) classes[0].push_back(v);

    std::vector<char> mark(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int z = 0; z < n; ++z) {
            if (h.adj[z].empty()) continue;
            for (int u : h.adj[z]) mark[u] = 1;
            std::vector<int> touched;
            for (int u : h.adj[z]) {
                int c = class_of[u];
                if (c >= 0 && c != class_of[z]) touched.push_back(c);
            }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (int c : touched) {
                auto& cls = classes[c];
                size_t cnt = 0;
                for (int u : cls) cnt += mark[u];
                if (cnt == 0 || cnt == cls.size()) continue;
                std::vector<int> in, out;
                for (int u : cls) (mark[u] ? in : out).push_back(u);
                int nc = static_cast<int>(classes.size());
                for (int u : out) class_of[u] = nc;
                cls = std::move(in);
                classes.push_back(std::move(out));
                changed = true;
            }
            for (int u : h.adj[z]) mark[u] = 0;
        }
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return classes;
}

// Maximal proper strong modules of h, where h and its complement are connected.
// The classes of refine_avoiding(h, 0) are the maximal 0-avoiding modules; the
// module containing 0 is the largest class of 0 over refinements avoiding one
// representative per class (any representative outside M_0 recovers M_0 exactly).
std::vector<std::vector<int>> mmax_prime(const Graph& h) {
    int n = h.n;
    auto p1 = refine_avoiding(h, 0);
    std::vector<int> m0{0};
    for (const auto& cls : p1) {
        int w = cls[0];
        auto p2 = refine_avoiding(h, w);
        for (const auto& c2 : p2)
            if (std::binary_search(c2.begin(), c2.end(), 0)) {
                if (c2.size() > m0.size()) m0 = c2;
                break;
            }
    }
    std::vector<char> in0(n, 0);
    for (int v : m0) in0[v] = 1;
    std::vector<std::vector<int>> parts{m0};
    size_t covered = m0.size();
    for (auto& cls : p1) {
        if (in0[cls[0]]) continue;  // swallowed by the module containing 0
        covered += cls.size();
        parts.push_back(std::move(cls));
    }
    assert(covered == static_cast<size_t>(n));
    assert(parts.size() >= 2);
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return parts;
}

struct MdtBuilder {
    Mdt t;

    int rec(const Graph& h, const std::vector<Vertex>& orig, int depth) {
        int id = static_cast<int>(t.nodes.size());
        t.nodes.push_back({});
        t.nodes[id].vertices = orig;
        t.nodes[id].depth = depth;
        if (h.n == 1) {
            t.nodes[id].label = Lab::Leaf;
            return id;
        }
        std::vector<std::vector<int>> parts = connected_components(h);
        Lab lab = Lab::Zero;
        if (parts.size() < 2) {
            parts = co_components(h);
            lab = Lab::One;
        }
        if (parts.size() < 2) {
            parts = mmax_prime(h);
            lab = Lab::Prime;
        }
        t.nodes[id].label = lab;
        for (const auto& part : parts) {
            std::vector<Vertex> sub_orig;
            sub_orig.reserve(part.size());
            for (int v : part) sub_orig.push_back(orig[v]);
            InducedSubgraph sub = induced_subgraph(h, part);
            int cid = rec(sub.graph, sub_orig, depth + 1);
            t.nodes[id].children.push_back(cid);
        }
        return id;
    }
};

}  // namespace

Mdt build_mdt(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("build_mdt: empty graph");
    MdtBuilder b;
    std::vector<Vertex> all(g.n);
    for (int i = 0; i < g.n; ++i) all[i] = i;
    b.t.root = b.rec(g, all, 0);
    return b.t;
}

std::vector<std::vector<Vertex>> max_modular_partition(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("max_modular_partition: n < 2");
    std::vector<std::vector<int>> parts = connected_components(g);
    if (parts.size() < 2) parts = co_components(g);
    if (parts.size() < 2) parts = mmax_prime(g);
    return parts;
}

Graph quotient(const Graph& g, const std::vector<std::vector<Vertex>>& partition) {
    std::vector<int> owner(g.n, -1);
    for (size_t i = 0; i < partition.size(); ++i) {
        if (partition[i].empty()) throw std::invalid_argument("quotient: empty part");
        for (Vertex v : partition[i]) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("quotient: unknown vertex");
            if (owner[v] != -1) throw std::invalid_argument("quotient: parts overlap");
            owner[v] = static_cast<int>(i);
        }
        if (!is_module(g, partition[i]))
            throw std::invalid_argument("quotient: part is not a module");
    }
    for (int v = 0; v < g.n; ++v)
        if (owner[v] == -1) throw std::invalid_argument("quotient: parts do not cover V");

    std::vector<std::pair<Vertex, int>> reps;  // (smallest vertex, part index)
    for (size_t i = 0; i < partition.size(); ++i)
        reps.push_back({*std::min_element(partition[i].begin(), partition[i].end()),
                        static_cast<int>(i)});
    std::sort(reps.begin(), reps.end());
    int k = static_cast<int>(reps.size());
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(reps[i].first, reps[j].first)) edges.push_back({i, j});
    return Graph::from_edges(k, edges);
}

std::vector<int> prime_nodes(const Mdt& t) {
    std::vector<int> out;
    std::vector<int> stack{t.root};
    // preorder with children pushed in reverse so the smallest-vertex child pops first
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (t.nodes[v].label == Lab::Prime) out.push_back(v);
        const auto& ch = t.nodes[v].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

LabeledNetwork mdt_to_network(const Mdt& t) {
    NetBuilder b;
    std::vector<int> id(t.nodes.size(), -1);
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& node = t.nodes[i];
        id[i] = node.label == Lab::Leaf ? b.add(Lab::Leaf, node.vertices[0])
                                        : b.add(node.label);
    }
    for (size_t i = 0; i < t.nodes.size(); ++i)
        for (int c : t.nodes[i].children) b.edge(id[i], id[c]);
    return b.finish(id[t.root]);
}

}  // namespace lvl1
