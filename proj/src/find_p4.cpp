#include <stdexcept>

#include "lvl1/graph.hpp"
#include "lvl1/modular_decomposition.hpp"

namespace lvl1 {

std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g) {
    if (g.n < 4) return std::nullopt;
    Mdt t = build_mdt(g);
    std::vector<int> primes = prime_nodes(t);
    if (primes.empty()) return std::nullopt;  // cograph
    // The first prime node's quotient is primitive, hence contains a P4 that is
    // induced in g via one representative per child module.
    const Mdt::Node& p = t.nodes[primes.front()];
    std::vector<Vertex> reps;
    reps.reserve(p.children.size());
    for (int c : p.children) reps.push_back(t.nodes[c].vertices.front());
    InducedSubgraph sub = induced_subgraph(g, reps);
    auto local = detail::find_p4_scan(sub.graph);
    if (!local) throw std::logic_error("primitive quotient without induced P4");
    return std::array<Vertex, 4>{sub.to_original[(*local)[0]], sub.to_original[(*local)[1]],
                                 sub.to_original[(*local)[2]], sub.to_original[(*local)[3]]};
}

}  // namespace lvl1
