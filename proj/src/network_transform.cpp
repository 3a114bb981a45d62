#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "lvl1/network.hpp"

namespace lvl1 {

namespace {

// Mutable working copy for edge contractions and the suppression worklist of
// steps (1)-(4): suppress indeg-1/outdeg-1, drop indeg-2/outdeg-0, trim an
// outdeg-1 root, deduplicate multi-edges. Deterministic: smallest id first.
struct MutNet {
    std::vector<std::vector<int>> kids, pars;
    std::vector<Lab> lab;
    std::vector<int> name;
    std::vector<char> alive;
    int root;

    MutNet(const Network& n, const Labeling& t)
        : kids(n.kids), pars(n.pars), lab(t), name(n.leaf_name),
          alive(n.nv, 1), root(n.root) {}

    int add(Lab l, int nm = -1) {
        kids.push_back({});
        pars.push_back({});
        lab.push_back(l);
        name.push_back(nm);
        alive.push_back(1);
        return static_cast<int>(kids.size()) - 1;
    }
    static void erase_one(std::vector<int>& v, int x) {
        auto it = std::find(v.begin(), v.end(), x);
        if (it != v.end()) v.erase(it);
    }
    void unlink(int u, int v) {
        erase_one(kids[u], v);
        erase_one(pars[v], u);
    }
    void link(int u, int v) {
        kids[u].push_back(v);
        pars[v].push_back(u);
    }
    void kill(int v) {
        for (int p : std::vector<int>(pars[v].begin(), pars[v].end())) unlink(p, v);
        for (int c : std::vector<int>(kids[v].begin(), kids[v].end())) unlink(v, c);
        alive[v] = 0;
    }
    // merge child v into its parent u; u keeps its id and label
    void contract_child_into_parent(int u, int v) {
        erase_one(kids[u], v);
        erase_one(pars[v], u);
        for (int c : kids[v]) {
            std::replace(pars[c].begin(), pars[c].end(), v, u);
            kids[u].push_back(c);
        }
        kids[v].clear();
        for (int p : std::vector<int>(pars[v].begin(), pars[v].end())) unlink(p, v);
        alive[v] = 0;
    }

    bool dedupe_one() {
        for (size_t u = 0; u < kids.size(); ++u) {
            if (!alive[u]) continue;
            std::vector<int> sorted = kids[u];
            std::sort(sorted.begin(), sorted.end());
            auto it = std::adjacent_find(sorted.begin(), sorted.end());
            if (it != sorted.end()) {
                unlink(static_cast<int>(u), *it);
                return true;
            }
        }
        return false;
    }

    void normalize() {
        bool changed = true;
        while (changed) {
            changed = false;
            if (dedupe_one()) {
                changed = true;
                continue;
            }
            for (size_t v = 0; v < kids.size() && !changed; ++v) {
                if (!alive[v] || name[v] >= 0) continue;
                int id = static_cast<int>(pars[v].size());
                int od = static_cast<int>(kids[v].size());
                int vi = static_cast<int>(v);
                if (vi == root && id == 0 && od == 1) {
                    int c = kids[v][0];
                    unlink(vi, c);
                    alive[v] = 0;
                    root = c;
                    changed = true;
                } else if (vi != root && id == 1 && od == 1) {
                    int p = pars[v][0], c = kids[v][0];
                    unlink(p, vi);
                    unlink(vi, c);
                    link(p, c);
                    alive[v] = 0;
                    changed = true;
                } else if (id == 2 && od == 0) {
                    kill(vi);
                    changed = true;
                } else if (id == 0 && od == 0 && vi != root) {
                    alive[v] = 0;
                    changed = true;
                }
            }
        }
    }

    LabeledNetwork finish() const {
        std::vector<int> remap(kids.size(), -1);
        NetBuilder b;
        for (size_t v = 0; v < kids.size(); ++v)
            if (alive[v]) remap[v] = b.add(lab[v], name[v]);
        for (size_t v = 0; v < kids.size(); ++v)
            if (alive[v])
                for (int c : kids[v]) b.edge(remap[v], remap[c]);
        return b.finish(remap[root]);
    }

    bool inner(int v) const { return alive[v] && name[v] < 0; }
    int indeg(int v) const { return static_cast<int>(pars[v].size()); }
    int outdeg(int v) const { return static_cast<int>(kids[v].size()); }
};

// One pass of quasi-discriminating contraction to fixpoint on a MutNet.
void contract_qd(MutNet& m) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t u = 0; u < m.kids.size() && !changed; ++u) {
            if (!m.inner(static_cast<int>(u))) continue;
            std::vector<int> cs = m.kids[u];
            std::sort(cs.begin(), cs.end());
            for (int v : cs) {
                if (!m.inner(v) || m.indeg(v) != 1) continue;  // hybrids keep their in-edges
                if (m.lab[u] != m.lab[v]) continue;
                m.contract_child_into_parent(static_cast<int>(u), v);
                m.normalize();
                changed = true;
                break;
            }
        }
    }
}

}  // namespace

LabeledNetwork contract_quasi_discriminating(const Network& n, const Labeling& t) {
    MutNet m(n, t);
    contract_qd(m);
    return m.finish();
}

LabeledNetwork delete_leaf(const Network& n, const Labeling& t, int leaf_name) {
    int x = n.leaf_vertex(leaf_name);
    if (x < 0) throw std::invalid_argument("delete_leaf: no such leaf");
    if (n.leaf_names_sorted().size() < 2)
        throw std::invalid_argument("delete_leaf: cannot remove the last leaf");
    MutNet m(n, t);
    m.kill(x);
    m.normalize();
    return m.finish();
}

LabeledNetwork remove_weak_cycles(const Network& n, const Labeling& t) {
    LabeledNetwork cur{n, t};
    while (true) {
        std::vector<CycleDescriptor> cyc = cycles(cur.net);
        const CycleDescriptor* weak = nullptr;
        for (const auto& c : cyc)
            if (c.strength == CycleStrength::Weak) {
                weak = &c;
                break;  // cycles() is ordered by root id
            }
        if (!weak) return cur;
        MutNet m(cur.net, cur.lab);
        int rho = weak->root, eta = weak->hybrid;
        int i1 = static_cast<int>(weak->side1.size()) - 2;
        int i2 = static_cast<int>(weak->side2.size()) - 2;
        if (i1 == 0 || i2 == 0) {
            // direct edge (rho, eta): drop it and let suppression run
            m.unlink(rho, eta);
            m.normalize();
        } else {
            int u = weak->side1[1], v = weak->side2[1];
            if (m.lab[u] == m.lab[rho] || m.lab[v] == m.lab[rho]) {
                // contract the same-label side vertex into the cycle root first;
                // the cycle then has a direct (rho, eta) edge and is handled above
                int w = m.lab[u] == m.lab[rho] ? (m.lab[v] == m.lab[rho] ? std::min(u, v) : u) : v;
                m.contract_child_into_parent(rho, w);
                m.normalize();
            } else {
                // both side labels differ from the root's, hence agree with each other
                int rho2 = m.add(m.lab[u]);
                int w0 = m.add(m.lab[rho]);
                m.unlink(rho, u);
                m.unlink(rho, v);
                m.unlink(u, eta);
                m.unlink(v, eta);
                m.link(rho, rho2);
                m.link(rho2, eta);
                m.link(rho2, w0);
                m.link(w0, u);
                m.link(w0, v);
                m.normalize();
            }
        }
        cur = m.finish();
    }
}

LabeledNetwork least_resolved(const Network& n, const Labeling& t) {
    MutNet m(n, t);
    bool changed = true;
    while (changed) {
        contract_qd(m);
        changed = false;
        for (size_t v = 0; v < m.kids.size() && !changed; ++v) {
            int vi = static_cast<int>(v);
            if (!m.inner(vi) || m.indeg(vi) != 2 || m.outdeg(vi) != 1) continue;
            int c = m.kids[v][0];
            if (!m.inner(c) || m.indeg(c) != 1) continue;  // hybrid edges onto leaves stay
            m.lab[v] = m.lab[c];                           // outdeg-1 hybrid labels are free
            m.contract_child_into_parent(vi, c);
            m.normalize();
            changed = true;
        }
    }
    return m.finish();
}

// ----------------------------------------------------------- isomorphism ----

namespace {

// Canonical form for level-1 networks with pointwise-fixed leaves. Cycles are
// encoded as the lexicographically smaller of their two side orders; outdeg-1
// hybrid labels are wildcards.
struct Encoder {
    const Network& n;
    const Labeling& t;
    std::map<int, std::vector<const CycleDescriptor*>> by_root;
    std::set<std::pair<int, int>> cycle_edges;
    std::vector<std::string> memo;

    Encoder(const Network& net, const Labeling& lab, const std::vector<CycleDescriptor>& cyc)
        : n(net), t(lab), memo(net.nv) {
        for (const auto& c : cyc) {
            by_root[c.root].push_back(&c);
            auto add_side = [&](const std::vector<int>& s) {
                for (size_t i = 0; i + 1 < s.size(); ++i) cycle_edges.insert({s[i], s[i + 1]});
            };
            add_side(c.side1);
            add_side(c.side2);
        }
    }

    std::string lab_char(int v) const {
        if (n.is_leaf(v)) return "L" + std::to_string(n.leaf_name[v]);
        if (n.is_hybrid(v) && n.outdeg(v) == 1) return "*";
        return t[v] == Lab::One ? "1" : (t[v] == Lab::Zero ? "0" : "P");
    }

    std::string hanging(int v) {
        // non-cycle children plus cycles rooted here
        std::vector<std::string> parts;
        for (int c : n.kids[v])
            if (!cycle_edges.count({v, c})) parts.push_back(enc(c));
        auto it = by_root.find(v);
        if (it != by_root.end()) {
            std::vector<std::string> cs;
            for (const CycleDescriptor* c : it->second) cs.push_back(enc_cycle(*c));
            std::sort(cs.begin(), cs.end());
            parts.insert(parts.end(), cs.begin(), cs.end());
        }
        std::sort(parts.begin(), parts.end());
        std::string out = "{";
        for (auto& p : parts) out += p + ",";
        return out + "}";
    }

    std::string enc_side(const std::vector<int>& side) {
        std::string out = "[";
        for (size_t i = 1; i + 1 < side.size(); ++i)
            out += "(" + lab_char(side[i]) + hanging(side[i]) + ")";
        return out + "]";
    }

    std::string enc_cycle(const CycleDescriptor& c) {
        std::string s1 = enc_side(c.side1), s2 = enc_side(c.side2);
        if (s2 < s1) std::swap(s1, s2);
        return "C<" + s1 + "|" + s2 + "|eta:" + lab_char(c.hybrid) + hanging(c.hybrid) + ">";
    }

    std::string enc(int v) {
        if (!memo[v].empty()) return memo[v];
        std::string out = n.is_leaf(v) ? lab_char(v)
                                       : "(" + lab_char(v) + hanging(v) + ")";
        memo[v] = out;
        return out;
    }
};

}  // namespace

bool networks_isomorphic(const Network& n1, const Labeling& t1,
                         const Network& n2, const Labeling& t2) {
    if (n1.leaf_names_sorted() != n2.leaf_names_sorted())
        throw std::invalid_argument("networks_isomorphic: different leaf sets");
    std::vector<CycleDescriptor> c1 = cycles(n1), c2 = cycles(n2);
    Encoder e1(n1, t1, c1), e2(n2, t2, c2);
    return e1.enc(n1.root) == e2.enc(n2.root);
}

}  // namespace lvl1
