#include "lvl1/network.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>

namespace lvl1 {

std::vector<int> Network::leaf_names_sorted() const {
    std::vector<int> names;
    for (int v = 0; v < nv; ++v)
        if (leaf_name[v] >= 0) names.push_back(leaf_name[v]);
    std::sort(names.begin(), names.end());
    return names;
}

int Network::leaf_vertex(int name) const {
    for (int v = 0; v < nv; ++v)
        if (leaf_name[v] == name) return v;
    return -1;
}

int NetBuilder::add(Lab l, int leaf_name) {
    kids.push_back({});
    lab.push_back(l);
    name.push_back(leaf_name);
    return static_cast<int>(kids.size()) - 1;
}

void NetBuilder::edge(int u, int v) { kids[u].push_back(v); }

LabeledNetwork NetBuilder::finish(int root) {
    LabeledNetwork r;
    r.net.nv = static_cast<int>(kids.size());
    r.net.kids = kids;
    r.net.pars.assign(r.net.nv, {});
    r.net.root = root;
    r.net.leaf_name = name;
    for (int u = 0; u < r.net.nv; ++u) {
        std::sort(r.net.kids[u].begin(), r.net.kids[u].end());
        if (std::adjacent_find(r.net.kids[u].begin(), r.net.kids[u].end()) !=
            r.net.kids[u].end())
            throw std::invalid_argument("multi-edge");
        for (int v : r.net.kids[u]) {
            if (v < 0 || v >= r.net.nv) throw std::invalid_argument("dangling edge endpoint");
            r.net.pars[v].push_back(u);
        }
    }
    for (auto& p : r.net.pars) std::sort(p.begin(), p.end());
    if (root < 0 || root >= r.net.nv) throw std::invalid_argument("bad root");
    r.lab = lab;
    return r;
}

// ---------------------------------------------------------------- cycles ----

namespace {

// Undirected biconnected components via iterative Tarjan; returns edge lists.
std::vector<std::vector<std::pair<int, int>>> biconnected_components(const Network& n) {
    struct UEdge {
        int a, b;
    };
    std::vector<UEdge> uedges;
    std::vector<std::vector<int>> inc(n.nv);  // incident undirected edge ids
    for (int u = 0; u < n.nv; ++u)
        for (int v : n.kids[u]) {
            inc[u].push_back(static_cast<int>(uedges.size()));
            inc[v].push_back(static_cast<int>(uedges.size()));
            uedges.push_back({u, v});
        }

    std::vector<std::vector<std::pair<int, int>>> comps;
    std::vector<int> num(n.nv, -1), low(n.nv, 0), parent_edge(n.nv, -1), it(n.nv, 0);
    std::vector<int> estack;
    int timer = 0;
    for (int s = 0; s < n.nv; ++s) {
        if (num[s] >= 0) continue;
        std::vector<int> stack{s};
        num[s] = low[s] = timer++;
        while (!stack.empty()) {
            int u = stack.back();
            if (it[u] < static_cast<int>(inc[u].size())) {
                int eid = inc[u][it[u]++];
                if (eid == parent_edge[u]) continue;
                int w = uedges[eid].a == u ? uedges[eid].b : uedges[eid].a;
                if (num[w] < 0) {
                    estack.push_back(eid);
                    num[w] = low[w] = timer++;
                    parent_edge[w] = eid;
                    stack.push_back(w);
                } else if (num[w] < num[u]) {
                    estack.push_back(eid);
                    low[u] = std::min(low[u], num[w]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                int p = stack.back();
                low[p] = std::min(low[p], low[u]);
                if (low[u] >= num[p]) {
                    // pop everything up to and including the tree edge to u
                    std::vector<std::pair<int, int>> comp;
                    while (true) {
                        int eid = estack.back();
                        estack.pop_back();
                        comp.push_back({uedges[eid].a, uedges[eid].b});
                        if (eid == parent_edge[u]) break;
                    }
                    comps.push_back(std::move(comp));
                }
            }
        }
    }
    return comps;
}

}  // namespace

std::vector<CycleDescriptor> cycles(const Network& n) {
    std::vector<CycleDescriptor> out;
    for (auto& comp : biconnected_components(n)) {
        if (comp.size() < 2) continue;  // bridge
        std::vector<int> verts;
        for (auto [a, b] : comp) {
            verts.push_back(a);
            verts.push_back(b);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (comp.size() != verts.size())
            throw std::invalid_argument("biconnected component is not a level-1 cycle");
        std::map<int, std::vector<int>> down;  // within-component children
        std::map<int, int> ind;
        for (int v : verts) ind[v] = 0;
        for (auto [a, b] : comp) {
            down[a].push_back(b);
            ind[b]++;
        }
        CycleDescriptor c;
        for (int v : verts) {
            if (ind[v] == 0) {
                if (c.root != -1) throw std::invalid_argument("cycle with two roots");
                c.root = v;
            }
            if (ind[v] == 2) {
                if (c.hybrid != -1) throw std::invalid_argument("cycle with two hybrids");
                c.hybrid = v;
            }
        }
        if (c.root == -1 || c.hybrid == -1 || down[c.root].size() != 2)
            throw std::invalid_argument("malformed level-1 cycle");
        auto walk = [&](int first) {
            std::vector<int> side{c.root, first};
            int cur = first;
            while (cur != c.hybrid) {
                if (down[cur].size() != 1)
                    throw std::invalid_argument("branching inside a cycle side");
                cur = down[cur][0];
                side.push_back(cur);
            }
            return side;
        };
        std::sort(down[c.root].begin(), down[c.root].end());
        c.side1 = walk(down[c.root][0]);
        c.side2 = walk(down[c.root][1]);
        int i1 = static_cast<int>(c.side1.size()) - 2;
        int i2 = static_cast<int>(c.side2.size()) - 2;
        c.strength = (i1 == 0 || i2 == 0 || (i1 == 1 && i2 == 1)) ? CycleStrength::Weak
                                                                  : CycleStrength::Strong;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const CycleDescriptor& a, const CycleDescriptor& b) { return a.root < b.root; });
    return out;
}

// -------------------------------------------------------------- validate ----

ValidationReport validate(const Network& n, const Labeling& t) {
    ValidationReport r;
    if (static_cast<int>(t.size()) != n.nv)
        throw std::invalid_argument("labeling size mismatch");
    if (n.nv == 0) {
        r.violations.push_back("N1: empty network");
        return r;
    }

    if (n.nv == 1) {
        if (!n.is_leaf(0))
            r.violations.push_back("N2: single vertex must be the leaf x (N0)");
        if (t[0] != Lab::Leaf) r.violations.push_back("LABELS: single leaf must carry the leaf label");
        r.valid = r.violations.empty();
        r.quasi_discriminating = r.discriminating = true;
        r.weak = r.strong = true;
        return r;
    }

    // N1: unique indegree-0 vertex, equal to the declared root, outdegree >= 2
    for (int v = 0; v < n.nv; ++v)
        if (n.indeg(v) == 0 && v != n.root)
            r.violations.push_back("N1: vertex " + std::to_string(v) + " has indegree 0");
    if (n.indeg(n.root) != 0)
        r.violations.push_back("N1: declared root has positive indegree");
    else if (n.outdeg(n.root) < 2)
        r.violations.push_back("N1: root outdegree < 2");

    // acyclicity
    {
        std::vector<int> ind(n.nv);
        for (int v = 0; v < n.nv; ++v) ind[v] = n.indeg(v);
        std::queue<int> q;
        for (int v = 0; v < n.nv; ++v)
            if (ind[v] == 0) q.push(v);
        int seen = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            ++seen;
            for (int w : n.kids[u])
                if (--ind[w] == 0) q.push(w);
        }
        if (seen != n.nv) r.violations.push_back("ACYCLIC: directed cycle present");
    }

    // N2 / N3 / labels
    std::vector<int> names;
    for (int v = 0; v < n.nv; ++v) {
        bool sink = n.outdeg(v) == 0;
        if (sink) {
            if (!n.is_leaf(v) || n.indeg(v) != 1)
                r.violations.push_back("N2: sink " + std::to_string(v) +
                                       " is not a named leaf of indegree 1");
            else
                names.push_back(n.leaf_name[v]);
            if (t[v] != Lab::Leaf)
                r.violations.push_back("LABELS: leaf " + std::to_string(v) + " not labeled as leaf");
            continue;
        }
        if (n.is_leaf(v)) r.violations.push_back("N2: named leaf " + std::to_string(v) + " has children");
        if (t[v] == Lab::Leaf)
            r.violations.push_back("LABELS: inner vertex " + std::to_string(v) + " labeled as leaf");
        if (t[v] == Lab::Prime)
            r.violations.push_back("LABELS: inner vertex " + std::to_string(v) + " labeled prime");
        if (v == n.root) continue;
        bool tree_v = n.indeg(v) == 1 && n.outdeg(v) >= 2;
        bool hyb_v = n.indeg(v) == 2 && n.outdeg(v) >= 1;
        if (!tree_v && !hyb_v)
            r.violations.push_back("N3: vertex " + std::to_string(v) + " has degrees (" +
                                   std::to_string(n.indeg(v)) + "," + std::to_string(n.outdeg(v)) +
                                   ")");
        if (hyb_v) ++r.hybrid_count;
    }
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
        r.violations.push_back("N2: duplicate leaf name");

    // level-1: every nontrivial biconnected component is a cycle with <= 1 hybrid
    std::vector<CycleDescriptor> cyc;
    try {
        cyc = cycles(n);
    } catch (const std::invalid_argument& e) {
        r.violations.push_back(std::string("LEVEL1: ") + e.what());
    }

    r.valid = r.violations.empty();
    if (!r.valid) return r;

    r.cycle_count = static_cast<int>(cyc.size());
    for (const auto& c : cyc)
        if (c.strength == CycleStrength::Weak) ++r.weak_cycle_count;
    r.weak = r.weak_cycle_count == r.cycle_count;
    r.strong = r.weak_cycle_count == 0;
    r.quasi_discriminating = true;
    r.discriminating = true;
    for (int u = 0; u < n.nv; ++u) {
        if (n.is_leaf(u)) continue;
        for (int v : n.kids[u]) {
            if (n.is_leaf(v)) continue;
            if (t[u] == t[v]) {
                r.discriminating = false;
                if (!n.is_hybrid(v)) r.quasi_discriminating = false;
            }
        }
    }
    r.elementary = is_elementary(n);
    return r;
}

bool is_elementary(const Network& n) {
    if (n.nv <= 1) return false;
    std::vector<CycleDescriptor> cyc;
    try {
        cyc = cycles(n);
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (cyc.size() != 1) return false;
    const CycleDescriptor& c = cyc[0];
    if (c.root != n.root) return false;
    std::vector<char> on_cycle(n.nv, 0);
    int cyc_len = 0;
    for (int v : c.side1) on_cycle[v] = 1;
    for (int v : c.side2) on_cycle[v] = 1;
    for (int v = 0; v < n.nv; ++v) cyc_len += on_cycle[v];
    int leaves = static_cast<int>(n.leaf_names_sorted().size());
    if (cyc_len != leaves + 1) return false;
    if (n.nv != cyc_len + leaves) return false;
    for (int v = 0; v < n.nv; ++v) {
        if (!on_cycle[v]) continue;
        int off_leaf = 0, off_other = 0;
        for (int w : n.kids[v]) {
            if (on_cycle[w]) continue;
            if (n.is_leaf(w)) ++off_leaf; else ++off_other;
        }
        if (v == n.root) {
            if (off_leaf + off_other != 0) return false;
        } else if (off_leaf != 1 || off_other != 0) {
            return false;
        }
    }
    return true;
}

// ------------------------------------------------------------------- lca ----

namespace {

struct Bitset {
    std::vector<std::uint64_t> w;
    explicit Bitset(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void or_with(const Bitset& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
};

struct LcaOracle {
    const Network& n;
    std::vector<Bitset> desc;  // descendant vertex sets, including self

    explicit LcaOracle(const Network& net) : n(net) {
        desc.assign(n.nv, Bitset(n.nv));
        // reverse topological order
        std::vector<int> ind(n.nv), order;
        for (int v = 0; v < n.nv; ++v) ind[v] = n.indeg(v);
        std::queue<int> q;
        for (int v = 0; v < n.nv; ++v)
            if (ind[v] == 0) q.push(v);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            order.push_back(u);
            for (int w : n.kids[u])
                if (--ind[w] == 0) q.push(w);
        }
        if (static_cast<int>(order.size()) != n.nv)
            throw std::invalid_argument("lca on a cyclic digraph");
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            desc[*it].set(*it);
            for (int w : n.kids[*it]) desc[*it].or_with(desc[w]);
        }
    }

    int lca(int va, int vb) const {
        if (va == vb) return va;
        std::vector<int> common;
        for (int u = 0; u < n.nv; ++u)
            if (desc[u].get(va) && desc[u].get(vb)) common.push_back(u);
        std::vector<char> is_common(n.nv, 0);
        for (int u : common) is_common[u] = 1;
        int found = -1;
        for (int u : common) {
            bool minimal = true;
            for (int w = 0; w < n.nv && minimal; ++w)
                if (w != u && is_common[w] && desc[u].get(w)) minimal = false;
            if (minimal) {
                if (found != -1)
                    throw std::invalid_argument("lca not unique (network is not level-1)");
                found = u;
            }
        }
        return found;
    }
};

}  // namespace

int lca(const Network& n, int leaf_a, int leaf_b) {
    int va = n.leaf_vertex(leaf_a), vb = n.leaf_vertex(leaf_b);
    if (va < 0 || vb < 0) throw std::invalid_argument("lca: argument is not a leaf");
    LcaOracle o(n);
    return o.lca(va, vb);
}

Graph evaluate(const Network& n, const Labeling& t) {
    std::vector<int> names = n.leaf_names_sorted();
    int k = static_cast<int>(names.size());
    LcaOracle o(n);
    std::vector<int> vert(k);
    for (int i = 0; i < k; ++i) vert[i] = n.leaf_vertex(names[i]);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int a = o.lca(vert[i], vert[j]);
            if (t[a] == Lab::Leaf || t[a] == Lab::Prime)
                throw std::invalid_argument("evaluate: lca carries a non-binary label");
            if (t[a] == Lab::One) edges.push_back({i, j});
        }
    return Graph::from_edges(k, edges);
}

}  // namespace lvl1
