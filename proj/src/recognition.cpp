#include "lvl1/recognition.hpp"

#include <algorithm>
#include <stdexcept>

#include "lvl1/modular_decomposition.hpp"

namespace lvl1 {

namespace {

struct Split {
    std::vector<std::vector<Vertex>> comps;  // original ids, ordered by smallest member
    SplitMode mode;
};

// Components of the disconnected graph in {G-v, complement(G-v)}.
std::optional<Split> disconnected_side(const Graph& g, Vertex v) {
    std::vector<Vertex> rest;
    rest.reserve(g.n - 1);
    for (Vertex u = 0; u < g.n; ++u)
        if (u != v) rest.push_back(u);
    InducedSubgraph sub = induced_subgraph(g, rest);
    auto lift = [&](std::vector<std::vector<int>> comps, SplitMode mode) {
        Split s;
        s.mode = mode;
        for (auto& c : comps) {
            std::vector<Vertex> orig;
            orig.reserve(c.size());
            for (int x : c) orig.push_back(sub.to_original[x]);
            s.comps.push_back(std::move(orig));
        }
        return s;
    };
    auto comps = connected_components(sub.graph);
    if (comps.size() >= 2) return lift(std::move(comps), SplitMode::Union);
    auto cocomps = co_components(sub.graph);
    if (cocomps.size() >= 2) return lift(std::move(cocomps), SplitMode::Join);
    return std::nullopt;
}

std::vector<Vertex> with_vertex(std::vector<Vertex> set, Vertex v) {
    set.push_back(v);
    std::sort(set.begin(), set.end());
    return set;
}

std::vector<Vertex> all_but(const Graph& g, const std::vector<Vertex>& removed) {
    std::vector<char> gone(g.n, 0);
    for (Vertex v : removed) gone[v] = 1;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.n; ++v)
        if (!gone[v]) keep.push_back(v);
    return keep;
}

// Ordering with v rotated into the final slot (unique up to the last two entries).
CatOrdering with_v_last(CatOrdering o, Vertex v) {
    size_t n = o.order.size();
    if (n >= 2 && o.order[n - 2] == v) std::swap(o.order[n - 2], o.order[n - 1]);
    return o;
}

}  // namespace

bool is_well_proportioned(const PolarCatWitness& w) {
    size_t a = w.base.v1.size(), b = w.base.v2.size();
    if (a > b) std::swap(a, b);
    return (a >= 3) || (a == 2 && b >= 5);
}

LabeledNetwork build_pseudo_network(const Graph& g, const PseudoWitness& w) {
    if (w.trivially_small || g.n <= 2) {
        auto ct = build_cotree(g);
        if (!ct) throw std::invalid_argument("witness marked trivially small on a large graph");
        return *ct;
    }
    // (F1)
    std::vector<Vertex> v1 = w.v1, v2 = w.v2;
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    if (v1.size() < 2 || v2.size() < 2)
        throw std::invalid_argument("invalid witness (F1): a side has fewer than two vertices");
    std::vector<Vertex> inter, uni;
    std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(inter));
    std::set_union(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(uni));
    if (inter != std::vector<Vertex>{w.v} || static_cast<int>(uni.size()) != g.n)
        throw std::invalid_argument("invalid witness (F1): sides must cover V and meet in v only");
    // (F2)
    InducedSubgraph s1 = induced_subgraph(g, v1), s2 = induced_subgraph(g, v2);
    auto t1 = build_cotree(s1.graph), t2 = build_cotree(s2.graph);
    if (!t1 || !t2)
        throw std::invalid_argument("invalid witness (F2): a side is not a cograph");
    // (F3)
    for (Vertex x : v1) {
        if (x == w.v) continue;
        for (Vertex y : v2) {
            if (y == w.v) continue;
            if (g.has_edge(x, y) != (w.mode == SplitMode::Join))
                throw std::invalid_argument("invalid witness (F3): G-v is not the " +
                                            std::string(w.mode == SplitMode::Join
                                                            ? "join"
                                                            : "disjoint union") +
                                            " of the sides");
        }
    }
    if (auto ct = build_cotree(g)) return *ct;  // degenerate: a cograph keeps its cotree

    // Merge the two cotrees: subdivide the edge above v in each, join under a new
    // root, identify the subdivision points into the hybrid, keep one copy of v.
    NetBuilder b;
    int root = b.add(w.mode == SplitMode::Join ? Lab::One : Lab::Zero);
    int eta = b.add(Lab::Zero);  // hybrid default label
    int leaf_v = b.add(Lab::Leaf, w.v);
    b.edge(eta, leaf_v);
    auto graft = [&](const LabeledNetwork& ct, const InducedSubgraph& s) {
        std::vector<int> id(ct.net.nv, -1);
        for (int u = 0; u < ct.net.nv; ++u) {
            if (ct.net.is_leaf(u)) {
                Vertex orig = s.to_original[ct.net.leaf_name[u]];
                id[u] = orig == w.v ? -2 : b.add(Lab::Leaf, orig);
            } else {
                id[u] = b.add(ct.lab[u]);
            }
        }
        for (int u = 0; u < ct.net.nv; ++u)
            for (int c : ct.net.kids[u]) b.edge(id[u], id[c] == -2 ? eta : id[c]);
        b.edge(root, id[ct.net.root]);
    };
    graft(*t1, s1);
    graft(*t2, s2);
    return b.finish(root);
}

RecognitionOutcome recognize_pseudo_cograph(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("empty graph");
    RecognitionOutcome out;
    if (g.n <= 2) {
        out.member = true;
        PseudoWitness w;
        w.trivially_small = true;
        w.v = 0;
        out.pseudo_witness = w;
        out.network = build_pseudo_network(g, w);
        return out;
    }
    Mdt mdt = build_mdt(g);
    std::vector<int> primes = prime_nodes(mdt);
    if (primes.empty()) {
        // cograph: v = 0, first side = the component holding the smallest id
        Vertex v = 0;
        auto split = disconnected_side(g, v);
        if (!split) throw std::logic_error("cograph with G-v and its complement connected");
        PseudoWitness w;
        w.v = v;
        w.mode = split->mode;
        w.v1 = with_vertex(split->comps[0], v);
        std::vector<Vertex> rest;
        for (size_t i = 1; i < split->comps.size(); ++i)
            rest.insert(rest.end(), split->comps[i].begin(), split->comps[i].end());
        w.v2 = with_vertex(std::move(rest), v);
        out.member = true;
        out.pseudo_witness = w;
        out.network = build_pseudo_network(g, w);
        return out;
    }

    auto p4 = find_induced_p4(g);
    std::vector<Vertex> u((*p4).begin(), (*p4).end());
    std::sort(u.begin(), u.end());
    for (Vertex v : u) {
        auto split = disconnected_side(g, v);
        if (!split) continue;
        // the component holding at least two of the P4's remaining vertices
        const std::vector<Vertex>* h = nullptr;
        for (const auto& comp : split->comps) {
            int cnt = 0;
            for (Vertex x : u)
                if (x != v && std::binary_search(comp.begin(), comp.end(), x)) ++cnt;
            if (cnt >= 2) {
                h = &comp;
                break;
            }
        }
        if (!h) continue;
        std::vector<Vertex> v1 = with_vertex(*h, v);
        std::vector<Vertex> v2 = all_but(g, *h);
        if (!build_cotree(induced_subgraph(g, v1).graph)) continue;
        if (!build_cotree(induced_subgraph(g, v2).graph)) continue;
        PseudoWitness w;
        w.v = v;
        w.v1 = std::move(v1);
        w.v2 = std::move(v2);
        w.mode = split->mode;
        out.member = true;
        out.pseudo_witness = w;
        out.network = build_pseudo_network(g, w);
        return out;
    }
    return out;
}

RecognitionOutcome recognize_polar_cat(const Graph& g, const ExplainOptions& opts) {
    if (g.n < 1) throw std::invalid_argument("empty graph");
    RecognitionOutcome out;
    if (g.n < 4) return out;
    Mdt mdt = build_mdt(g);
    if (prime_nodes(mdt).empty()) return out;  // cographs are never polar-cats

    auto p4 = find_induced_p4(g);
    std::vector<Vertex> u((*p4).begin(), (*p4).end());
    std::sort(u.begin(), u.end());
    for (Vertex v : u) {
        auto split = disconnected_side(g, v);
        if (!split) continue;
        if (split->comps.size() != 2) continue;
        std::vector<Vertex> v1 = with_vertex(split->comps[0], v);
        std::vector<Vertex> v2 = with_vertex(split->comps[1], v);
        if (opts.flip_sides) std::swap(v1, v2);
        InducedSubgraph s1 = induced_subgraph(g, v1), s2 = induced_subgraph(g, v2);
        bool want_connected = split->mode == SplitMode::Union;
        if (is_connected(s1.graph) != want_connected) continue;
        if (is_connected(s2.graph) != want_connected) continue;
        auto o1 = caterpillar_ordering(s1.graph);
        auto o2 = caterpillar_ordering(s2.graph);
        if (!o1 || !o2) continue;
        for (auto& x : o1->order) x = s1.to_original[x];
        for (auto& x : o2->order) x = s2.to_original[x];
        if (!is_cherry_vertex(*o1, v) || !is_cherry_vertex(*o2, v)) continue;
        PolarCatWitness w;
        w.base.v = v;
        w.base.v1 = std::move(v1);
        w.base.v2 = std::move(v2);
        w.base.mode = split->mode;
        w.side1 = with_v_last(*o1, v);
        w.side2 = with_v_last(*o2, v);
        out.member = true;
        out.network = build_pseudo_network(g, w.base);
        out.polar_witness = std::move(w);
        return out;
    }
    return out;
}

RecognitionOutcome explain_level1(const Graph& g, const ExplainOptions& opts) {
    if (g.n < 1) throw std::invalid_argument("empty graph");
    RecognitionOutcome out;
    Mdt mdt = build_mdt(g);

    NetBuilder b;
    std::vector<int> id(mdt.nodes.size(), -1);
    for (size_t i = 0; i < mdt.nodes.size(); ++i) {
        const auto& node = mdt.nodes[i];
        id[i] = node.label == Lab::Leaf ? b.add(Lab::Leaf, node.vertices[0])
                                        : b.add(node.label);
    }
    for (size_t i = 0; i < mdt.nodes.size(); ++i) {
        const auto& node = mdt.nodes[i];
        if (node.label == Lab::Prime) continue;  // replaced below
        for (int c : node.children) b.edge(id[i], id[c]);
    }
    for (int p : prime_nodes(mdt)) {
        const auto& node = mdt.nodes[p];
        // quotient via one representative per child module (smallest vertex)
        std::vector<Vertex> reps;
        reps.reserve(node.children.size());
        for (int c : node.children) reps.push_back(mdt.nodes[c].vertices.front());
        InducedSubgraph q = induced_subgraph(g, reps);
        RecognitionOutcome pc = recognize_polar_cat(q.graph, {opts.flip_sides, false});
        if (!pc.member) {
            out.offending_module = node.vertices;
            return out;
        }
        const LabeledNetwork& en = *pc.network;
        // splice: the elementary network's root becomes the prime node, its
        // leaf i becomes the child module whose representative is rep i
        std::vector<int> sub_id(en.net.nv, -1);
        for (int v = 0; v < en.net.nv; ++v) {
            if (v == en.net.root)
                sub_id[v] = id[p];
            else if (!en.net.is_leaf(v))
                sub_id[v] = b.add(en.lab[v]);
        }
        b.lab[id[p]] = en.lab[en.net.root];
        for (int v = 0; v < en.net.nv; ++v) {
            if (en.net.is_leaf(v)) continue;
            for (int c : en.net.kids[v]) {
                int target = en.net.is_leaf(c) ? id[node.children[en.net.leaf_name[c]]]
                                               : sub_id[c];
                b.edge(sub_id[v], target);
            }
        }
    }
    LabeledNetwork net = b.finish(id[mdt.root]);
    net = contract_quasi_discriminating(net.net, net.lab);
    if (opts.least_resolved) net = least_resolved(net.net, net.lab);
    out.member = true;
    out.network = std::move(net);
    return out;
}

std::pair<int, int> count_strong_cycles_vs_prime_modules(const Graph& g) {
    RecognitionOutcome r = explain_level1(g);
    if (!r.member)
        throw std::invalid_argument("graph is not explainable by a level-1 network");
    int primes = static_cast<int>(prime_nodes(build_mdt(g)).size());
    int strong = 0;
    for (const auto& c : cycles(r.network->net))
        if (c.strength == CycleStrength::Strong) ++strong;
    return {primes, strong};
}

}  // namespace lvl1
