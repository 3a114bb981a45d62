#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "lvl1/modular_decomposition.hpp"
#include "lvl1/oracle.hpp"
#include "lvl1/recognition.hpp"

namespace lvl1 {

namespace {

// Evaluations of every strong quasi-discriminating elementary network on
// 0..n-1 leaves, as edge masks. Built once per size through the honest
// enumerate-and-evaluate route, then shared read-only by the workers.
struct PolarMaskCache {
    std::vector<std::unordered_set<std::uint64_t>> by_n;

    explicit PolarMaskCache(int max_n) : by_n(max_n + 1) {
        for (int n = 4; n <= max_n; ++n) {
            auto& set = by_n[n];
            for_each_strong_elementary(n, [&](const LabeledNetwork& net) {
                set.insert(graph_mask(evaluate(net.net, net.lab)));
            });
        }
    }

    bool polar(const Graph& g) const {
        if (g.n < 4 || g.n >= static_cast<int>(by_n.size())) return false;
        return by_n[g.n].count(graph_mask(g)) > 0;
    }

    bool cat_prime(const Graph& g) const {
        Mdt mdt = build_mdt(g);
        for (int p : prime_nodes(mdt)) {
            const auto& node = mdt.nodes[p];
            std::vector<Vertex> reps;
            for (int c : node.children) reps.push_back(mdt.nodes[c].vertices.front());
            if (!polar(induced_subgraph(g, reps).graph)) return false;
        }
        return true;
    }
};

struct WorkerStats {
    long long cograph = 0, pseudo = 0, polar = 0, catp = 0, total = 0;
    std::vector<CensusMismatch> mismatches;
};

void classify_one(const Graph& g, std::uint64_t mask, const PolarMaskCache& cache,
                  WorkerStats& s) {
    ++s.total;
    bool fast_cograph = build_cotree(g).has_value();
    bool fast_pseudo = recognize_pseudo_cograph(g).member;
    bool fast_polar = recognize_polar_cat(g).member;
    bool fast_catp = explain_level1(g).member;

    bool oracle_cograph = brute_cograph(g);
    bool oracle_pseudo = brute_pseudo_cograph(g, false).member;
    bool oracle_polar = cache.polar(g);
    bool oracle_catp = cache.cat_prime(g);

    auto check = [&](const char* klass, bool fast, bool oracle) {
        if (fast != oracle && s.mismatches.size() < 200)
            s.mismatches.push_back({g.n, mask, klass, fast, oracle});
    };
    check("cograph", fast_cograph, oracle_cograph);
    check("pseudo", fast_pseudo, oracle_pseudo);
    check("polar_cat", fast_polar, oracle_polar);
    check("cat_prime", fast_catp, oracle_catp);
    s.cograph += oracle_cograph;
    s.pseudo += oracle_pseudo;
    s.polar += oracle_polar;
    s.catp += oracle_catp;
}

int pick_workers(int requested) {
    if (const char* env = std::getenv("L1NET_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
}

}  // namespace

CensusStats run_census(int n, int workers, long long samples, std::uint64_t seed) {
    if (n < 1 || n > 7) throw std::invalid_argument("census: n must be 1..6 (7 sampled)");
    PolarMaskCache cache(n);
    int w = pick_workers(workers);

    std::vector<WorkerStats> per(w);
    std::vector<std::thread> threads;
    if (n <= 6) {
        long long total = labeled_graph_count(n);
        std::atomic<long long> next{0};
        const long long chunk = 256;
        for (int t = 0; t < w; ++t)
            threads.emplace_back([&, t]() {
                while (true) {
                    long long lo = next.fetch_add(chunk);
                    if (lo >= total) break;
                    long long hi = std::min(total, lo + chunk);
                    for (long long mask = lo; mask < hi; ++mask)
                        classify_one(graph_from_mask(n, mask), mask, cache, per[t]);
                }
            });
    } else {
        int bits = n * (n - 1) / 2;
        std::atomic<long long> next{0};
        for (int t = 0; t < w; ++t)
            threads.emplace_back([&, t]() {
                while (true) {
                    long long i = next.fetch_add(1);
                    if (i >= samples) break;
                    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (i + 1));
                    std::uint64_t mask = rng() & ((1ull << bits) - 1);
                    classify_one(graph_from_mask(n, mask), mask, cache, per[t]);
                }
            });
    }
    for (auto& th : threads) th.join();

    CensusStats out;
    out.n = n;
    for (auto& p : per) {
        out.total += p.total;
        out.cograph += p.cograph;
        out.pseudo += p.pseudo;
        out.polar_cat += p.polar;
        out.cat_prime += p.catp;
        out.mismatches.insert(out.mismatches.end(), p.mismatches.begin(), p.mismatches.end());
    }
    return out;
}

std::string census_report(const CensusStats& s) {
    std::ostringstream os;
    os << "census n=" << s.n << " graphs=" << s.total << '\n';
    os << "  cograph:    " << s.cograph << '\n';
    os << "  pseudo:     " << s.pseudo << '\n';
    os << "  polar-cat:  " << s.polar_cat << '\n';
    os << "  cat-prime:  " << s.cat_prime << '\n';
    os << "  mismatches: " << s.mismatches.size() << '\n';
    for (const auto& m : s.mismatches) {
        os << "n=" << m.n << " mask=" << std::hex << m.mask << std::dec << " class=" << m.klass
           << " fast=" << (m.fast_verdict ? "MEMBER" : "NON_MEMBER")
           << " oracle=" << (m.oracle_verdict ? "MEMBER" : "NON_MEMBER") << '\n';
    }
    return os.str();
}

}  // namespace lvl1
