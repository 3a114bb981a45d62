#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lvl1/network.hpp"

namespace lvl1 {

namespace {

char lab_char(Lab l) {
    switch (l) {
        case Lab::Zero: return '0';
        case Lab::One: return '1';
        case Lab::Prime: return 'P';
        case Lab::Leaf: return '-';
    }
    return '?';
}

}  // namespace

void write_network(std::ostream& os, const Network& n, const Labeling& t,
                   const std::string& name) {
    os << "network " << name << '\n';
    os << "leaves:";
    for (int nm : n.leaf_names_sorted()) os << ' ' << n.leaf_vertex(nm);
    os << '\n';
    for (int v = 0; v < n.nv; ++v) os << "node " << v << ' ' << lab_char(t[v]) << '\n';
    for (int u = 0; u < n.nv; ++u)
        for (int v : n.kids[u]) os << "edge " << u << ' ' << v << '\n';
    os << "root " << n.root << '\n';
}

LabeledNetwork read_network(std::istream& is) {
    std::string line;
    bool saw_header = false;
    std::vector<int> leaves;
    std::map<int, char> nodes;
    std::vector<std::pair<int, int>> edges;
    int root = -1;
    bool saw_root = false;

    while (std::getline(is, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "network") {
            std::string nm;
            if (!(ls >> nm)) throw std::invalid_argument("network line without a name");
            saw_header = true;
        } else if (kw == "leaves:") {
            int id;
            while (ls >> id) leaves.push_back(id);
        } else if (kw == "node") {
            int id;
            std::string l;
            if (!(ls >> id >> l) || l.size() != 1 ||
                (l[0] != '0' && l[0] != '1' && l[0] != 'P' && l[0] != '-'))
                throw std::invalid_argument("malformed node line");
            if (nodes.count(id)) throw std::invalid_argument("duplicate node id");
            nodes[id] = l[0];
        } else if (kw == "edge") {
            int u, v;
            if (!(ls >> u >> v)) throw std::invalid_argument("malformed edge line");
            edges.push_back({u, v});
        } else if (kw == "root") {
            if (!(ls >> root)) throw std::invalid_argument("malformed root line");
            saw_root = true;
        } else {
            throw std::invalid_argument("unknown line: " + kw);
        }
    }
    if (!saw_header) throw std::invalid_argument("missing network header");
    if (!saw_root) throw std::invalid_argument("missing root line");

    std::map<int, int> id_map;
    NetBuilder b;
    std::map<int, int> leaf_rank;
    for (size_t i = 0; i < leaves.size(); ++i) {
        if (leaf_rank.count(leaves[i])) throw std::invalid_argument("duplicate leaf id");
        leaf_rank[leaves[i]] = static_cast<int>(i);
    }
    for (auto [id, l] : nodes) {
        Lab lab = l == '0' ? Lab::Zero : l == '1' ? Lab::One : l == 'P' ? Lab::Prime : Lab::Leaf;
        if (l == '-') {
            auto it = leaf_rank.find(id);
            if (it == leaf_rank.end())
                throw std::invalid_argument("leaf node missing from the leaves line");
            id_map[id] = b.add(Lab::Leaf, it->second);
        } else {
            if (leaf_rank.count(id))
                throw std::invalid_argument("inner node listed as a leaf");
            id_map[id] = b.add(lab);
        }
    }
    for (int id : leaves)
        if (!nodes.count(id)) throw std::invalid_argument("leaf id not declared as a node");
    for (auto [u, v] : edges) {
        if (!id_map.count(u) || !id_map.count(v))
            throw std::invalid_argument("edge references undeclared node");
        b.edge(id_map[u], id_map[v]);
    }
    if (!id_map.count(root)) throw std::invalid_argument("root references undeclared node");
    return b.finish(id_map[root]);
}

void write_dot(std::ostream& os, const Network& n, const Labeling& t,
               const std::string& name) {
    os << "digraph " << name << " {\n";
    os << "  rankdir=TB;\n";
    for (int v = 0; v < n.nv; ++v) {
        os << "  v" << v << " [";
        if (n.is_leaf(v)) {
            os << "shape=plaintext,label=\"" << n.leaf_name[v] << "\"";
        } else {
            bool hyb = n.is_hybrid(v);
            os << "shape=" << (hyb ? "box" : (t[v] == Lab::One ? "circle" : "square"));
            if (hyb) os << ",peripheries=2";
            if (t[v] == Lab::One) os << ",style=filled,fillcolor=black,fontcolor=white";
            os << ",label=\"" << (t[v] == Lab::One ? '1' : t[v] == Lab::Zero ? '0' : 'P')
               << "\",width=0.25,height=0.25,fixedsize=true";
        }
        os << "];\n";
    }
    for (int u = 0; u < n.nv; ++u)
        for (int v : n.kids[u]) os << "  v" << u << " -> v" << v << ";\n";
    os << "}\n";
}

}  // namespace lvl1
