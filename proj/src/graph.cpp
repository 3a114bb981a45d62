#include "lvl1/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lvl1 {

Graph Graph::empty(int n) {
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g = empty(n);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    Vertex other = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

long long Graph::edge_count() const {
    long long s = 0;
    for (const auto& a : adj) s += static_cast<long long>(a.size());
    return s / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : adj[u])
            if (u < v) e.push_back({u, v});
    return e;
}

Graph complement(const Graph& g) {
    Graph c = Graph::empty(g.n);
    std::vector<char> nb(g.n, 0);
    for (Vertex u = 0; u < g.n; ++u) {
        for (Vertex v : g.adj[u]) nb[v] = 1;
        for (Vertex v = 0; v < g.n; ++v)
            if (v != u && !nb[v]) c.adj[u].push_back(v);
        for (Vertex v : g.adj[u]) nb[v] = 0;
    }
    return c;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& w) {
    InducedSubgraph s;
    s.to_original = w;
    std::sort(s.to_original.begin(), s.to_original.end());
    for (size_t i = 1; i < s.to_original.size(); ++i)
        if (s.to_original[i] == s.to_original[i - 1])
            throw std::invalid_argument("duplicate vertex in induced_subgraph");
    s.from_original.assign(g.n, -1);
    for (size_t i = 0; i < s.to_original.size(); ++i) {
        Vertex v = s.to_original[i];
        if (v < 0 || v >= g.n) throw std::invalid_argument("unknown vertex id");
        s.from_original[v] = static_cast<int>(i);
    }
    s.graph = Graph::empty(static_cast<int>(s.to_original.size()));
    for (size_t i = 0; i < s.to_original.size(); ++i)
        for (Vertex v : g.adj[s.to_original[i]])
            if (s.from_original[v] >= 0) s.graph.adj[i].push_back(s.from_original[v]);
    for (auto& a : s.graph.adj) std::sort(a.begin(), a.end());
    return s;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> vis(g.n, 0);
    for (Vertex s = 0; s < g.n; ++s) {
        if (vis[s]) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        vis[s] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            comp.push_back(u);
            for (Vertex v : g.adj[u])
                if (!vis[v]) {
                    vis[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;  // ordered by smallest member since starts are ascending
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> vis(g.n, 0);
    std::queue<Vertex> q;
    q.push(0);
    vis[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex v : g.adj[u])
            if (!vis[v]) {
                vis[v] = 1;
                ++cnt;
                q.push(v);
            }
    }
    return cnt == g.n;
}

std::vector<std::vector<Vertex>> co_components(const Graph& g) {
    // BFS in the complement, iterating only over still-unvisited vertices.
    std::vector<std::vector<Vertex>> comps;
    int n = g.n;
    std::vector<int> nxt(n), prv(n);
    for (int i = 0; i < n; ++i) {
        nxt[i] = i + 1;  // n acts as end sentinel
        prv[i] = i - 1;
    }
    int head = 0;
    auto remove = [&](int v) {
        int p = prv[v], x = nxt[v];
        if (p < 0) head = x; else nxt[p] = x;
        if (x < n) prv[x] = p;
    };
    std::vector<char> mark(n, 0);
    while (head < n) {
        int s = head;
        remove(s);
        std::vector<Vertex> comp{s};
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.adj[u]) mark[w] = 1;
            std::vector<int> grabbed;
            for (int w = head; w < n; w = nxt[w])
                if (!mark[w]) grabbed.push_back(w);
            for (Vertex w : g.adj[u]) mark[w] = 0;
            for (int w : grabbed) {
                remove(w);
                comp.push_back(w);
                q.push(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return comps;
}

std::optional<int> diameter(const Graph& g) {
    if (g.n == 0) return 0;
    int best = 0;
    std::vector<int> dist(g.n);
    for (Vertex s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Vertex> q;
        q.push(s);
        dist[s] = 0;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            best = std::max(best, dist[u]);
            for (Vertex v : g.adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (int d : dist)
            if (d < 0) return std::nullopt;
    }
    return best;
}

bool is_module(const Graph& g, const std::vector<Vertex>& m) {
    if (m.empty()) throw std::invalid_argument("is_module: empty set");
    std::vector<char> in(g.n, 0);
    for (Vertex v : m) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("is_module: unknown vertex");
        in[v] = 1;
    }
    std::vector<Vertex> ref;
    for (Vertex u : g.adj[m[0]])
        if (!in[u]) ref.push_back(u);
    for (size_t i = 1; i < m.size(); ++i) {
        std::vector<Vertex> cur;
        for (Vertex u : g.adj[m[i]])
            if (!in[u]) cur.push_back(u);
        if (cur != ref) return false;
    }
    return true;
}

GammaGraph gamma_graph(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("gamma_graph: unknown vertex");
    std::vector<Vertex> rest;
    for (Vertex u = 0; u < g.n; ++u)
        if (u != v) rest.push_back(u);
    InducedSubgraph sub = induced_subgraph(g, rest);
    std::vector<std::vector<Vertex>> comps = connected_components(sub.graph);
    if (comps.size() < 2) comps = co_components(sub.graph);
    if (comps.size() < 2)
        throw std::invalid_argument("gamma_graph: both G-v and its complement are connected");
    GammaGraph gg;
    for (auto& c : comps) {
        std::vector<Vertex> orig;
        for (Vertex x : c) orig.push_back(sub.to_original[x]);
        std::sort(orig.begin(), orig.end());
        gg.component_list.push_back(std::move(orig));
    }
    int k = static_cast<int>(gg.component_list.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            std::vector<Vertex> u = gg.component_list[i];
            u.insert(u.end(), gg.component_list[j].begin(), gg.component_list[j].end());
            u.push_back(v);
            if (detail::find_p4_scan(induced_subgraph(g, u).graph)) gg.edges.push_back({i, j});
        }
    }
    return gg;
}

namespace detail {

std::optional<std::array<Vertex, 4>> find_p4_scan(const Graph& g) {
    // For each edge (b,c): a in N(b)\N[c], d in N(c)\N[b], a and d non-adjacent.
    std::vector<char> nb(g.n, 0), nc(g.n, 0);
    for (Vertex b = 0; b < g.n; ++b) {
        for (Vertex u : g.adj[b]) nb[u] = 1;
        for (Vertex c : g.adj[b]) {
            for (Vertex u : g.adj[c]) nc[u] = 1;
            std::vector<Vertex> A, D;
            for (Vertex a : g.adj[b])
                if (a != c && !nc[a]) A.push_back(a);
            for (Vertex d : g.adj[c])
                if (d != b && !nb[d]) D.push_back(d);
            for (Vertex a : A)
                for (Vertex d : D)
                    if (!g.has_edge(a, d)) {
                        for (Vertex u : g.adj[c]) nc[u] = 0;
                        for (Vertex u : g.adj[b]) nb[u] = 0;
                        return std::array<Vertex, 4>{a, b, c, d};
                    }
            for (Vertex u : g.adj[c]) nc[u] = 0;
        }
        for (Vertex u : g.adj[b]) nb[u] = 0;
    }
    return std::nullopt;
}

}  // namespace detail

Graph read_graph(std::istream& is) {
    std::string line;
    long long n = -1, m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    long long seen = 0;
    while (std::getline(is, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw std::invalid_argument("graph header must be \"n m\"");
            std::string extra;
            if (ls >> extra) throw std::invalid_argument("trailing tokens after header");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("malformed edge line");
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        if (++seen > m) throw std::invalid_argument("more edges than declared");
    }
    if (n < 0) throw std::invalid_argument("missing graph header");
    if (seen != m) throw std::invalid_argument("fewer edges than declared");
    return Graph::from_edges(static_cast<int>(n), edges);  // rejects dups/self-loops
}

void write_graph(std::ostream& os, const Graph& g) {
    auto e = g.edges();
    os << g.n << ' ' << e.size() << '\n';
    for (auto [u, v] : e) os << u << ' ' << v << '\n';
}

}  // namespace lvl1
