#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lvl1/graph.hpp"
#include "lvl1/network.hpp"
#include "lvl1/recognition.hpp"

namespace lvl1 {

// ---- brute-force verifiers (independent of the recognition module) ----

// Scans all 4-subsets for an induced P4. Intended for n <= 12.
bool brute_cograph(const Graph& g);

struct BrutePseudoResult {
    bool member = false;
    std::vector<PseudoWitness> witnesses;  // all (v, component bipartition) certificates
};

// (F1)-(F3) checked literally over every vertex and every component bipartition. n <= 12.
BrutePseudoResult brute_pseudo_cograph(const Graph& g, bool collect_all = true);

// Enumerates all strong quasi-discriminating elementary networks on X and
// compares evaluate() with g. n <= 8.
bool brute_polar_cat(const Graph& g);

// The enumeration behind brute_polar_cat: every strong quasi-discriminating
// elementary network on leaves 0..n-1 (each shape visited for both root labels).
void for_each_strong_elementary(int n, const std::function<void(const LabeledNetwork&)>& fn);

// Shares build_mdt, runs brute_polar_cat on every prime quotient. Quotients <= 8.
bool brute_cat_prime(const Graph& g);

// ---- small-graph enumeration ----

// Edge-mask order: bit k is the k-th pair (i,j), i<j, lexicographic.
std::uint64_t graph_mask(const Graph& g);
Graph graph_from_mask(int n, std::uint64_t mask);
long long labeled_graph_count(int n);  // 2^C(n,2)
// Calls fn for every labeled graph on n vertices, mask order. n <= 7.
void for_each_labeled_graph(int n, const std::function<void(const Graph&, std::uint64_t)>& fn);

// ---- seeded generators ----

Graph gnp(int n, double p, std::uint64_t seed);
// Random discriminating cotree evaluated back to a graph. max_join_block > 0 caps
// the vertex count under any series node so the result stays sparse.
Graph random_cograph(int n, std::uint64_t seed, int max_join_block = 0);
Graph perturbed_cograph(int n, int flips, std::uint64_t seed, int max_join_block = 0);
// Random discriminating cotree, then up to max_cycles tree vertices expanded into
// weak or strong cycles with random labels.
LabeledNetwork random_level1_network(int leaves, int max_cycles, std::uint64_t seed);

// ---- census ----

struct CensusMismatch {
    int n = 0;
    std::uint64_t mask = 0;
    std::string klass;
    bool fast_verdict = false;
    bool oracle_verdict = false;
};

struct CensusStats {
    int n = 0;
    long long total = 0;
    long long cograph = 0, pseudo = 0, polar_cat = 0, cat_prime = 0;
    std::vector<CensusMismatch> mismatches;
};

// n <= 6: exhaustive; n == 7: `samples` seeded random graphs; larger n: throws.
// workers == 0 picks hardware concurrency (capped), overridable via L1NET_WORKERS.
CensusStats run_census(int n, int workers = 0, long long samples = 100000,
                       std::uint64_t seed = 1);

std::string census_report(const CensusStats& s);

}  // namespace lvl1
