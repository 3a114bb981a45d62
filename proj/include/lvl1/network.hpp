#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lvl1/graph.hpp"

namespace lvl1 {

enum class Lab : std::uint8_t { Zero = 0, One = 1, Leaf = 2, Prime = 3 };

// Rooted DAG on a leaf set X. Leaves carry names (usually the vertices of the
// explained graph); inner vertices have leaf_name == -1.
struct Network {
    int nv = 0;
    std::vector<std::vector<int>> kids;  // sorted
    std::vector<std::vector<int>> pars;  // sorted
    int root = -1;
    std::vector<int> leaf_name;

    int indeg(int v) const { return static_cast<int>(pars[v].size()); }
    int outdeg(int v) const { return static_cast<int>(kids[v].size()); }
    bool is_leaf(int v) const { return leaf_name[v] >= 0; }
    bool is_hybrid(int v) const { return indeg(v) == 2; }
    std::vector<int> leaf_names_sorted() const;
    int leaf_vertex(int name) const;  // -1 if absent
};

using Labeling = std::vector<Lab>;

struct LabeledNetwork {
    Network net;
    Labeling lab;
};

// Incremental construction; finish() sorts adjacency and checks basic shape.
struct NetBuilder {
    std::vector<std::vector<int>> kids;
    std::vector<Lab> lab;
    std::vector<int> name;

    int add(Lab l, int leaf_name = -1);
    void edge(int u, int v);
    LabeledNetwork finish(int root);
};

struct ValidationReport {
    bool valid = false;
    std::vector<std::string> violations;  // "N1: ...", "N2: ...", "N3: ...", "LEVEL1: ...", "LABELS: ...", "ACYCLIC: ..."
    bool quasi_discriminating = false;
    bool discriminating = false;
    bool weak = false;    // all cycles weak (trees: vacuously true)
    bool strong = false;  // no weak cycles
    bool elementary = false;
    int hybrid_count = 0;
    int cycle_count = 0;
    int weak_cycle_count = 0;
};

enum class CycleStrength { Weak, Strong };

struct CycleDescriptor {
    int root = -1;
    int hybrid = -1;
    std::vector<int> side1;  // full path root..hybrid
    std::vector<int> side2;
    CycleStrength strength = CycleStrength::Weak;
};

ValidationReport validate(const Network& n, const Labeling& t);

// Every biconnected component that is not a vertex or an edge.
// Throws std::invalid_argument when such a component is not a level-1 cycle.
std::vector<CycleDescriptor> cycles(const Network& n);

bool is_elementary(const Network& n);

// Unique lowest common ancestor of two leaves, addressed by leaf name.
int lca(const Network& n, int leaf_a, int leaf_b);

// Graph on rank(leaf name): vertex i of the result is the i-th smallest leaf name.
Graph evaluate(const Network& n, const Labeling& t);

LabeledNetwork contract_quasi_discriminating(const Network& n, const Labeling& t);
LabeledNetwork remove_weak_cycles(const Network& n, const Labeling& t);
LabeledNetwork delete_leaf(const Network& n, const Labeling& t, int leaf_name);
LabeledNetwork least_resolved(const Network& n, const Labeling& t);

// DAG isomorphism fixing leaf names pointwise and preserving labels; the label
// of an outdegree-1 hybrid is a wildcard. Exact for level-1 networks.
bool networks_isomorphic(const Network& n1, const Labeling& t1,
                         const Network& n2, const Labeling& t2);

// Text format:
//   network <name>
//   leaves: <node-id> ...        (position in the list is the leaf's name)
//   node <id> <label>            label in {0,1,P,-}
//   edge <u> <v>
//   root <id>
LabeledNetwork read_network(std::istream& is);
void write_network(std::ostream& os, const Network& n, const Labeling& t,
                   const std::string& name = "N");
void write_dot(std::ostream& os, const Network& n, const Labeling& t,
               const std::string& name = "N");

}  // namespace lvl1
