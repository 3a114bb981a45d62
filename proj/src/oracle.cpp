#include "lvl1/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "lvl1/modular_decomposition.hpp"

namespace lvl1 {

// ------------------------------------------------------- brute verifiers ----

bool brute_cograph(const Graph& g) {
    // induced P4 = 4 vertices, 3 edges, degrees within the subset all 1 or 2
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                for (int d = c + 1; d < g.n; ++d) {
                    int verts[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int m = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.has_edge(verts[i], verts[j])) {
                                ++m;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (m != 3) continue;
                    bool path = true;
                    for (int i = 0; i < 4; ++i)
                        if (deg[i] < 1 || deg[i] > 2) path = false;
                    if (path) return false;
                }
    return true;
}

BrutePseudoResult brute_pseudo_cograph(const Graph& g, bool collect_all) {
    if (g.n > 12) throw std::invalid_argument("brute_pseudo_cograph: n > 12");
    BrutePseudoResult r;
    if (g.n <= 2) {
        r.member = true;
        PseudoWitness w;
        w.trivially_small = true;
        w.v = 0;
        r.witnesses.push_back(w);
        return r;
    }
    for (Vertex v = 0; v < g.n; ++v) {
        std::vector<Vertex> rest;
        for (Vertex u = 0; u < g.n; ++u)
            if (u != v) rest.push_back(u);
        InducedSubgraph sub = induced_subgraph(g, rest);
        auto comps = connected_components(sub.graph);
        SplitMode mode = SplitMode::Union;
        if (comps.size() < 2) {
            comps = connected_components(complement(sub.graph));
            mode = SplitMode::Join;
        }
        if (comps.size() < 2) continue;
        int c = static_cast<int>(comps.size());
        // every bipartition of the component set
        for (std::uint32_t pick = 1; pick < (1u << (c - 1)); ++pick) {
            std::vector<Vertex> v1{v}, v2{v};
            for (int i = 0; i < c; ++i) {
                bool side1 = i < c - 1 ? ((pick >> i) & 1) : false;
                for (int x : comps[i])
                    (side1 ? v1 : v2).push_back(sub.to_original[x]);
            }
            if (v1.size() < 2 || v2.size() < 2) continue;
            std::sort(v1.begin(), v1.end());
            std::sort(v2.begin(), v2.end());
            if (!brute_cograph(induced_subgraph(g, v1).graph)) continue;
            if (!brute_cograph(induced_subgraph(g, v2).graph)) continue;
            r.member = true;
            PseudoWitness w;
            w.v = v;
            w.v1 = v1;
            w.v2 = v2;
            w.mode = mode;
            r.witnesses.push_back(std::move(w));
            if (!collect_all) return r;
        }
    }
    return r;
}

void for_each_strong_elementary(int n, const std::function<void(const LabeledNetwork&)>& fn) {
    if (n < 4) return;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
        rest.clear();
        for (int u = 0; u < n; ++u)
            if (u != v) rest.push_back(u);
        std::sort(rest.begin(), rest.end());
        do {
            for (int p = 1; p <= n - 2; ++p) {
                int q = n - 1 - p;
                if (q < 1 || (p == 1 && q == 1)) continue;  // weak shapes skipped
                for (int rl = 0; rl <= 1; ++rl) {
                    NetBuilder b;
                    int rho = b.add(rl ? Lab::One : Lab::Zero);
                    int eta = b.add(Lab::Zero);  // outdegree 1: label never queried
                    b.edge(eta, b.add(Lab::Leaf, v));
                    auto side = [&](int from, int len) {
                        int prev = rho;
                        for (int i = 0; i < len; ++i) {
                            // labels alternate away from the root's label
                            Lab l = ((i % 2 == 0) != (rl == 1)) ? Lab::One : Lab::Zero;
                            int s = b.add(l);
                            b.edge(prev, s);
                            b.edge(s, b.add(Lab::Leaf, rest[from + i]));
                            prev = s;
                        }
                        b.edge(prev, eta);
                    };
                    side(0, p);
                    side(p, q);
                    fn(b.finish(rho));
                }
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
}

bool brute_polar_cat(const Graph& g) {
    if (g.n > 8) throw std::invalid_argument("brute_polar_cat: n > 8");
    if (g.n < 4) return false;
    std::uint64_t want = graph_mask(g);
    bool found = false;
    for_each_strong_elementary(g.n, [&](const LabeledNetwork& net) {
        if (found) return;
        if (graph_mask(evaluate(net.net, net.lab)) == want) found = true;
    });
    return found;
}

bool brute_cat_prime(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("empty graph");
    Mdt mdt = build_mdt(g);
    for (int p : prime_nodes(mdt)) {
        const auto& node = mdt.nodes[p];
        std::vector<Vertex> reps;
        for (int c : node.children) reps.push_back(mdt.nodes[c].vertices.front());
        if (reps.size() > 8) throw std::invalid_argument("brute_cat_prime: quotient > 8");
        if (!brute_polar_cat(induced_subgraph(g, reps).graph)) return false;
    }
    return true;
}

// ------------------------------------------------------------ enumeration ----

std::uint64_t graph_mask(const Graph& g) {
    if (g.n > 11) throw std::invalid_argument("graph_mask: n > 11");
    std::uint64_t mask = 0;
    int bit = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j, ++bit)
            if (g.has_edge(i, j)) mask |= 1ull << bit;
    return mask;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

long long labeled_graph_count(int n) { return 1ll << (n * (n - 1) / 2); }

void for_each_labeled_graph(int n, const std::function<void(const Graph&, std::uint64_t)>& fn) {
    if (n < 1 || n > 7) throw std::invalid_argument("for_each_labeled_graph: n must be 1..7");
    long long total = labeled_graph_count(n);
    for (long long mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(n, static_cast<std::uint64_t>(mask));
        fn(g, static_cast<std::uint64_t>(mask));
    }
}

// -------------------------------------------------------------- generators ----

Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: bad parameters");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

namespace {

// Random discriminating cotree over the given leaves, built as a NetBuilder
// subtree; returns the subtree root. Labels alternate levels starting at `lab`.
int random_cotree_rec(NetBuilder& b, std::vector<int>& leaves, std::mt19937_64& rng,
                      Lab lab, int max_join_block) {
    if (leaves.size() == 1) return b.add(Lab::Leaf, leaves[0]);
    int me = b.add(lab);
    size_t want = 2 + rng() % 3;
    size_t parts = std::min(want, leaves.size());
    // cap the subtree below any series vertex so evaluate() stays sparse
    if (lab == Lab::Zero && max_join_block > 0 &&
        leaves.size() > static_cast<size_t>(max_join_block))
        parts = std::max(parts, (leaves.size() + max_join_block - 1) /
                                    static_cast<size_t>(max_join_block));
    parts = std::min(parts, leaves.size());
    std::shuffle(leaves.begin(), leaves.end(), rng);
    std::vector<size_t> cut{0, leaves.size()};
    while (cut.size() < parts + 1) {
        size_t c = 1 + rng() % (leaves.size() - 1);
        if (std::find(cut.begin(), cut.end(), c) == cut.end()) cut.push_back(c);
    }
    std::sort(cut.begin(), cut.end());
    if (lab == Lab::Zero && max_join_block > 0) {
        // even slices keep every join block small
        cut.clear();
        for (size_t c = 0; c < leaves.size(); c += max_join_block) cut.push_back(c);
        cut.push_back(leaves.size());
    }
    Lab child = lab == Lab::One ? Lab::Zero : Lab::One;
    for (size_t i = 0; i + 1 < cut.size(); ++i) {
        std::vector<int> part(leaves.begin() + cut[i], leaves.begin() + cut[i + 1]);
        int cid = random_cotree_rec(b, part, rng, child, max_join_block);
        b.edge(me, cid);
    }
    return me;
}

LabeledNetwork random_cotree(int n, std::mt19937_64& rng, int max_join_block) {
    NetBuilder b;
    std::vector<int> leaves(n);
    std::iota(leaves.begin(), leaves.end(), 0);
    if (n == 1) {
        int l = b.add(Lab::Leaf, 0);
        return b.finish(l);
    }
    Lab root = max_join_block > 0 ? Lab::Zero : (rng() & 1 ? Lab::One : Lab::Zero);
    int r = random_cotree_rec(b, leaves, rng, root, max_join_block);
    return b.finish(r);
}

}  // namespace

Graph random_cograph(int n, std::uint64_t seed, int max_join_block) {
    if (n < 1) throw std::invalid_argument("random_cograph: n < 1");
    std::mt19937_64 rng(seed);
    LabeledNetwork t = random_cotree(n, rng, max_join_block);
    return evaluate(t.net, t.lab);
}

Graph perturbed_cograph(int n, int flips, std::uint64_t seed, int max_join_block) {
    Graph g = random_cograph(n, seed, max_join_block);
    if (n < 2) return g;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::set<std::pair<Vertex, Vertex>> edges(g.edges().begin(), g.edges().end());
    std::uniform_int_distribution<int> pick(0, n - 1);
    int done = 0;
    while (done < flips) {
        Vertex u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        auto it = edges.find({u, v});
        if (it != edges.end()) edges.erase(it); else edges.insert({u, v});
        ++done;
    }
    return Graph::from_edges(n, {edges.begin(), edges.end()});
}

LabeledNetwork random_level1_network(int leaves, int max_cycles, std::uint64_t seed) {
    if (leaves < 1) throw std::invalid_argument("random_level1_network: leaves < 1");
    std::mt19937_64 rng(seed);
    LabeledNetwork t = random_cotree(leaves, rng, 0);

    // expand up to max_cycles tree vertices into cycles: the vertex keeps its
    // label and becomes the cycle root, its children are distributed over the
    // side interiors and the hybrid
    struct Mut {
        std::vector<std::vector<int>> kids;
        std::vector<Lab> lab;
        std::vector<int> name;
        int add(Lab l) {
            kids.push_back({});
            lab.push_back(l);
            name.push_back(-1);
            return static_cast<int>(kids.size()) - 1;
        }
    } m;
    m.kids = t.net.kids;
    m.lab = t.lab;
    m.name = t.net.leaf_name;

    std::vector<int> candidates;
    for (int v = 0; v < t.net.nv; ++v)
        if (!t.net.is_leaf(v) && t.net.outdeg(v) >= 2) candidates.push_back(v);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    int cyc = std::min<int>(max_cycles, static_cast<int>(candidates.size()));
    cyc = cyc > 0 ? static_cast<int>(rng() % (cyc + 1)) : 0;

    for (int i = 0; i < cyc; ++i) {
        int w = candidates[i];
        std::vector<int> ch = m.kids[w];
        std::shuffle(ch.begin(), ch.end(), rng);
        int k = static_cast<int>(ch.size());
        int p, q;  // side interior sizes
        bool weak = k < 4 || (rng() & 1);
        if (weak) {
            if (k >= 3 && (rng() & 1)) {
                p = 1;
                q = 1;  // both interiors single: weak type (ii)
            } else {
                p = 1 + static_cast<int>(rng() % std::min(3, k - 1));
                q = 0;  // direct root-hybrid edge: weak type (i)
            }
        } else {
            p = 1 + static_cast<int>(rng() % (k - 3));  // p <= k-3, so q >= 2 fits
            q = std::min(k - 1 - p, 2 + static_cast<int>(rng() % 2));
        }
        int slots = p + q + 1;
        // distribute the k children over the slots, each slot nonempty
        std::vector<std::vector<int>> slot(slots);
        for (int s = 0; s < slots; ++s) slot[s].push_back(ch[s]);
        for (int j = slots; j < k; ++j) slot[rng() % slots].push_back(ch[j]);
        auto rnd_lab = [&]() { return rng() & 1 ? Lab::One : Lab::Zero; };
        int eta = m.add(rnd_lab());
        for (int c : slot[slots - 1]) m.kids[eta].push_back(c);
        m.kids[w].clear();
        int prev = w;
        for (int s = 0; s < p; ++s) {
            int u = m.add(rnd_lab());
            m.kids[prev].push_back(u);
            for (int c : slot[s]) m.kids[u].push_back(c);
            prev = u;
        }
        m.kids[prev].push_back(eta);
        prev = w;
        for (int s = 0; s < q; ++s) {
            int u = m.add(rnd_lab());
            m.kids[prev].push_back(u);
            for (int c : slot[p + s]) m.kids[u].push_back(c);
            prev = u;
        }
        m.kids[prev].push_back(eta);
    }

    NetBuilder b;
    for (size_t v = 0; v < m.kids.size(); ++v) b.add(m.lab[v], m.name[v]);
    for (size_t v = 0; v < m.kids.size(); ++v)
        for (int c : m.kids[v]) b.edge(static_cast<int>(v), c);
    return b.finish(t.net.root);
}

}  // namespace lvl1
