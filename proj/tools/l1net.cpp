// Command-line front end: recognize, explain, eval, validate, census, bench.
// Exit codes: 0 success/MEMBER, 1 NON_MEMBER or invalid network, 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lvl1/cograph.hpp"
#include "lvl1/modular_decomposition.hpp"
#include "lvl1/network.hpp"
#include "lvl1/oracle.hpp"
#include "lvl1/recognition.hpp"

using namespace lvl1;

namespace {

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_graph(in);
}

LabeledNetwork load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_network(in);
}

void print_set(std::ostream& os, const std::vector<Vertex>& s) {
    os << '{';
    for (size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    os << '}';
}

void print_witness(const PseudoWitness& w) {
    if (w.trivially_small) {
        std::cout << "witness: trivially small (|V| <= 2)\n";
        return;
    }
    std::cout << "witness: v=" << w.v << " V1=";
    print_set(std::cout, w.v1);
    std::cout << " V2=";
    print_set(std::cout, w.v2);
    std::cout << " mode=" << (w.mode == SplitMode::Union ? "UNION" : "JOIN") << '\n';
}

void print_ordering(const char* tag, const CatOrdering& o) {
    std::cout << tag << ":";
    for (Vertex v : o.order) std::cout << ' ' << v;
    std::cout << " (mode " << (o.mode == CatMode::Connected ? "CONNECTED" : "DISCONNECTED")
              << ")\n";
}

int cmd_recognize(const std::string& file, const std::string& klass, bool witness) {
    Graph g = load_graph(file);
    bool member = false;
    RecognitionOutcome out;
    if (klass == "cograph") {
        member = build_cotree(g).has_value();
    } else if (klass == "pseudo") {
        out = recognize_pseudo_cograph(g);
        member = out.member;
    } else if (klass == "polar-cat") {
        out = recognize_polar_cat(g);
        member = out.member;
    } else {
        out = explain_level1(g);
        member = out.member;
    }
    std::cout << (member ? "MEMBER" : "NON_MEMBER") << '\n';
    if (witness && member) {
        if (out.polar_witness) {
            print_witness(out.polar_witness->base);
            print_ordering("ordering V1", out.polar_witness->side1);
            print_ordering("ordering V2", out.polar_witness->side2);
        } else if (out.pseudo_witness) {
            print_witness(*out.pseudo_witness);
        }
    }
    if (!member && !out.offending_module.empty()) {
        std::cout << "offending prime module: ";
        print_set(std::cout, out.offending_module);
        std::cout << '\n';
    }
    return member ? 0 : 1;
}

int cmd_explain(const std::string& file, const std::string& out_path,
                const std::string& dot_path, bool least, const std::string& format) {
    Graph g = load_graph(file);
    ExplainOptions opts;
    opts.least_resolved = least;
    RecognitionOutcome r = explain_level1(g, opts);
    if (!r.member) {
        std::cout << "NON_MEMBER\noffending prime module: ";
        print_set(std::cout, r.offending_module);
        std::cout << '\n';
        return 1;
    }
    const LabeledNetwork& net = *r.network;
    auto emit = [&](std::ostream& os) {
        if (format == "dot")
            write_dot(os, net.net, net.lab);
        else
            write_network(os, net.net, net.lab);
    };
    if (out_path.empty() || out_path == "-") {
        emit(std::cout);
    } else {
        std::ofstream os(out_path);
        if (!os) throw std::invalid_argument("cannot write " + out_path);
        emit(os);
    }
    if (!dot_path.empty()) {
        std::ofstream os(dot_path);
        if (!os) throw std::invalid_argument("cannot write " + dot_path);
        write_dot(os, net.net, net.lab);
    }
    return 0;
}

int cmd_eval(const std::string& file, const std::string& out_path) {
    LabeledNetwork n = load_network(file);
    ValidationReport rep = validate(n.net, n.lab);
    if (!rep.valid) {
        for (const auto& v : rep.violations) std::cout << v << '\n';
        return 1;
    }
    Graph g = evaluate(n.net, n.lab);
    if (out_path.empty() || out_path == "-") {
        write_graph(std::cout, g);
    } else {
        std::ofstream os(out_path);
        if (!os) throw std::invalid_argument("cannot write " + out_path);
        write_graph(os, g);
    }
    return 0;
}

int cmd_validate(const std::string& file) {
    LabeledNetwork n = load_network(file);
    ValidationReport r = validate(n.net, n.lab);
    if (!r.valid) {
        std::cout << "INVALID\n";
        for (const auto& v : r.violations) std::cout << v << '\n';
        return 1;
    }
    std::cout << "VALID\n";
    std::cout << "hybrids: " << r.hybrid_count << '\n';
    std::cout << "cycles: " << r.cycle_count << " (weak " << r.weak_cycle_count << ")\n";
    std::cout << "quasi-discriminating: " << (r.quasi_discriminating ? "yes" : "no") << '\n';
    std::cout << "discriminating: " << (r.discriminating ? "yes" : "no") << '\n';
    std::cout << "weak: " << (r.weak ? "yes" : "no") << '\n';
    std::cout << "strong: " << (r.strong ? "yes" : "no") << '\n';
    std::cout << "elementary: " << (r.elementary ? "yes" : "no") << '\n';
    return 0;
}

int cmd_census(int n, long long samples, std::uint64_t seed) {
    CensusStats s = run_census(n, 0, samples, seed);
    std::cout << census_report(s);
    return s.mismatches.empty() ? 0 : 1;
}

int cmd_bench(const std::string& sizes_csv, std::uint64_t seed) {
    std::vector<int> sizes;
    std::stringstream ss(sizes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
    if (sizes.empty()) throw std::invalid_argument("bench: empty size list");

    auto run = [&](const char* kind, const Graph& g) {
        auto t0 = std::chrono::steady_clock::now();
        recognize_pseudo_cograph(g);
        recognize_polar_cat(g);
        RecognitionOutcome r = explain_level1(g);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::cout << kind << " n=" << g.n << " m=" << g.edge_count() << " verdict="
                  << (r.member ? "MEMBER" : "NON_MEMBER") << " ms=" << ms << '\n';
        return ms;
    };
    double prev_c = -1, prev_p = -1;
    for (int n : sizes) {
        double c = run("cograph  ", random_cograph(n, seed, 12));
        double p = run("perturbed", perturbed_cograph(n, 5, seed, 12));
        if (prev_c > 0)
            std::cout << "ratio vs previous size: cograph " << c / prev_c << " perturbed "
                      << p / prev_p << '\n';
        prev_c = c;
        prev_p = p;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recognition of cographs, pseudo-cographs, polar-cats and level-1 "
                 "explainable graphs; construction of explaining labeled networks"};
    app.require_subcommand(1);

    std::string file, klass = "cat-prime", out_path, dot_path, format = "text";
    bool witness = false, least = false;
    int census_n = 6;
    long long samples = 100000;
    std::uint64_t seed = 1;
    std::string sizes = "1000,10000,100000";

    auto* rec = app.add_subcommand("recognize", "classify a graph file");
    rec->add_option("file", file)->required();
    rec->add_option("--class", klass)
        ->check(CLI::IsMember({"cograph", "pseudo", "polar-cat", "cat-prime"}));
    rec->add_flag("--witness", witness, "print the membership certificate");

    auto* exp = app.add_subcommand("explain", "construct an explaining level-1 network");
    exp->add_option("file", file)->required();
    exp->add_option("--out", out_path, "output file ('-' = stdout)");
    exp->add_option("--dot", dot_path, "additionally write DOT to this file");
    exp->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));
    exp->add_flag("--least-resolved", least);

    auto* ev = app.add_subcommand("eval", "evaluate a network file back to a graph");
    ev->add_option("file", file)->required();
    ev->add_option("--out", out_path);

    auto* val = app.add_subcommand("validate", "validate a network file");
    val->add_option("file", file)->required();

    auto* cen = app.add_subcommand("census", "compare recognizers against the oracles");
    cen->add_option("--n", census_n)->check(CLI::Range(1, 7));
    cen->add_option("--samples", samples, "sample count for n=7");
    cen->add_option("--seed", seed);

    auto* ben = app.add_subcommand("bench", "time recognize+explain on generated graphs");
    ben->add_option("--sizes", sizes, "comma-separated vertex counts");
    ben->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed()) return cmd_recognize(file, klass, witness);
        if (exp->parsed()) return cmd_explain(file, out_path, dot_path, least, format);
        if (ev->parsed()) return cmd_eval(file, out_path);
        if (val->parsed()) return cmd_validate(file);
        if (cen->parsed()) return cmd_census(census_n, samples, seed);
        if (ben->parsed()) return cmd_bench(sizes, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
