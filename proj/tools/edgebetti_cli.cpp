// Command-line front end: graded Betti numbers of edge ideals, integral and
// field homology of flag complexes, characteristic-dependence detection, and
// the pruned exhaustive search.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgebetti/betti.hpp"
#include "edgebetti/search.hpp"
#include "edgebetti/taylor.hpp"

using namespace edgebetti;

namespace {

struct InputOpts {
    std::string g6;
    std::string g6_file;
    std::string facets_file;
};

void add_input_flags(CLI::App* cmd, InputOpts& in, bool allow_facets = true) {
    auto* a = cmd->add_option("--g6", in.g6, "graph6 string");
    auto* b = cmd->add_option("--g6-file", in.g6_file, "file with one graph6 string");
    a->excludes(b);
    b->excludes(a);
    if (allow_facets) {
        auto* c = cmd->add_option("--facets", in.facets_file,
                                  "file with one facet per line (vertex labels)");
        c->excludes(a)->excludes(b);
        a->excludes(c);
        b->excludes(c);
    }
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f.good()) throw CLI::ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool has_graph(const InputOpts& in) { return !in.g6.empty() || !in.g6_file.empty(); }

Graph read_graph(const InputOpts& in) {
    std::string text = in.g6;
    if (!in.g6_file.empty()) {
        std::istringstream ss(slurp(in.g6_file));
        ss >> text;
    }
    if (text.empty()) throw CLI::ValidationError("no graph given: use --g6 or --g6-file");
    return parse_graph6(text);
}

void check_char(long ch) {
    if (ch != 0 && !is_prime(ch))
        throw CLI::ValidationError("--char must be 0 or a prime");
}

std::string homology_text(const std::vector<HomologyGroup>& groups) {
    std::ostringstream out;
    for (const auto& g : groups) {
        out << "H~_" << g.degree << " = ";
        std::vector<std::string> parts;
        if (g.free_rank == 1) parts.push_back("Z");
        else if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
        for (const auto& f : g.torsion) parts.push_back("Z/" + f.get_str());
        if (parts.empty()) {
            out << "0";
        } else {
            for (std::size_t i = 0; i < parts.size(); ++i)
                out << (i ? " + " : "") << parts[i];
        }
        out << '\n';
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"graded Betti numbers of edge ideals and torsion search"};
    app.require_subcommand(1);

    // betti
    auto* betti_cmd = app.add_subcommand("betti", "graded Betti diagram");
    InputOpts betti_in;
    add_input_flags(betti_cmd, betti_in);
    long betti_ch = 0;
    std::string engine = "hochster", format = "m2";
    betti_cmd->add_option("--char", betti_ch, "field characteristic (0 or a prime)");
    betti_cmd->add_option("--engine", engine, "hochster | eagon-reiner | taylor")
        ->check(CLI::IsMember({"hochster", "eagon-reiner", "taylor"}));
    betti_cmd->add_option("--format", format, "m2 | json")
        ->check(CLI::IsMember({"m2", "json"}));

    // homology
    auto* hom_cmd = app.add_subcommand("homology", "reduced homology of the flag complex");
    InputOpts hom_in;
    add_input_flags(hom_cmd, hom_in);
    bool integral = false;
    long hom_ch = 0;
    bool hom_ch_set = false;
    hom_cmd->add_flag("--integral", integral, "integral homology groups");
    hom_cmd->add_option("--char", hom_ch, "field characteristic")
        ->each([&](const std::string&) { hom_ch_set = true; });
    std::string hom_format = "text";
    hom_cmd->add_option("--format", hom_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // dual
    auto* dual_cmd = app.add_subcommand("dual", "Alexander dual of the flag complex");
    InputOpts dual_in;
    add_input_flags(dual_cmd, dual_in, /*allow_facets=*/false);

    // dependence
    auto* dep_cmd = app.add_subcommand("dependence", "characteristic dependence report");
    InputOpts dep_in;
    add_input_flags(dep_cmd, dep_in, /*allow_facets=*/false);
    bool dep_expect_none = false;
    std::string dep_format = "text";
    dep_cmd->add_flag("--expect-none", dep_expect_none,
                      "exit 1 if any characteristic dependence is found");
    dep_cmd->add_option("--format", dep_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "filter + torsion scan of a graph6 stream");
    std::string scan_file, checkpoint;
    int jobs = 1;
    bool expect_none = false, no_window = false;
    scan_cmd->add_option("--g6-file", scan_file, "graph6 stream (default: stdin)");
    scan_cmd->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--checkpoint", checkpoint, "JSONL journal for resume");
    scan_cmd->add_flag("--expect-none", expect_none, "exit 1 if a witness is found");
    scan_cmd->add_flag("--full-range", no_window,
                       "search all homology degrees, not just the minimal-counterexample window");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "certify no witness on n <= 10 vertices");
    int verify_n = 0;
    std::string verify_checkpoint;
    int verify_jobs = 1;
    verify_cmd->add_option("-n,--n", verify_n, "vertex count")->required()
        ->check(CLI::Range(1, 10));
    verify_cmd->add_option("--jobs", verify_jobs, "worker count")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--checkpoint", verify_checkpoint, "JSONL journal for resume");

    // selftest
    auto* self_cmd = app.add_subcommand("selftest", "built-in smoke battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    if (betti_cmd->parsed()) {
        check_char(betti_ch);
        BettiDiagram d;
        if (!betti_in.facets_file.empty()) {
            if (engine != "hochster")
                throw CLI::ValidationError("--engine applies to graph input only");
            d = stanley_reisner_betti(parse_facets(slurp(betti_in.facets_file)),
                                      Field{betti_ch});
        } else {
            Graph g = read_graph(betti_in);
            if (engine == "hochster") d = hochster_betti_graph(g, Field{betti_ch});
            else if (engine == "eagon-reiner") d = eagon_reiner_betti(g, Field{betti_ch});
            else d = taylor_betti(g, Field{betti_ch});
        }
        std::cout << (format == "m2" ? d.to_m2() : d.to_json() + "\n");
        return 0;
    }

    if (hom_cmd->parsed()) {
        SimplicialComplex dd = !hom_in.facets_file.empty()
                                   ? parse_facets(slurp(hom_in.facets_file))
                                   : flag_complex(read_graph(hom_in));
        if (integral && hom_ch_set)
            throw CLI::ValidationError("--integral and --char are mutually exclusive");
        if (!integral && !hom_ch_set) integral = true;
        if (integral) {
            auto groups = integral_reduced_homology(dd);
            if (hom_format == "text") {
                std::cout << homology_text(groups);
            } else {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& g : groups) {
                    nlohmann::json t = nlohmann::json::array();
                    for (const auto& f : g.torsion) t.push_back(f.get_str());
                    j.push_back({{"degree", g.degree},
                                 {"free_rank", g.free_rank},
                                 {"torsion", t}});
                }
                std::cout << j.dump() << '\n';
            }
        } else {
            check_char(hom_ch);
            auto dims = field_homology_dims(dd, Field{hom_ch});
            if (hom_format == "text") {
                for (std::size_t jj = 0; jj < dims.size(); ++jj)
                    std::cout << "dim H~_" << static_cast<int>(jj) - 1 << " = " << dims[jj]
                              << '\n';
            } else {
                nlohmann::json j;
                j["char"] = hom_ch;
                j["dims"] = dims;
                std::cout << j.dump() << '\n';
            }
        }
        return 0;
    }

    if (dual_cmd->parsed()) {
        Graph g = read_graph(dual_in);
        SimplicialComplex dual = alexander_dual_of_graph(g);
        for (std::uint64_t f : dual.facets()) {
            bool first = true;
            for (int v = 0; v < 64; ++v)
                if ((f >> v) & 1) {
                    std::cout << (first ? "" : " ") << v + 1;
                    first = false;
                }
            if (first) std::cout << "()";  // the empty facet
            std::cout << '\n';
        }
        return 0;
    }

    if (dep_cmd->parsed()) {
        Graph g = read_graph(dep_in);
        CharDependenceReport rep = char_dependence(g);
        if (dep_format == "json") {
            nlohmann::json j;
            j["primes"] = rep.primes;
            j["indices"] = rep.dependent_indices();
            j["witnesses"] = nlohmann::json::array();
            for (const auto& w : rep.witnesses) {
                nlohmann::json factors = nlohmann::json::array();
                for (const auto& f : w.factors) factors.push_back(f.get_str());
                j["witnesses"].push_back(
                    {{"subset", w.w}, {"degree", w.degree}, {"factors", factors}});
            }
            std::cout << j.dump() << '\n';
        } else if (rep.primes.empty()) {
            std::cout << "independent of characteristic\n";
        } else {
            std::cout << "dependent at characteristics:";
            for (long p : rep.primes) std::cout << ' ' << p;
            std::cout << "\nhomological indices:";
            for (int i : rep.dependent_indices()) std::cout << ' ' << i;
            std::cout << '\n';
        }
        return dep_expect_none && !rep.primes.empty() ? 1 : 0;
    }

    if (scan_cmd->parsed()) {
        ScanConfig cfg;
        cfg.jobs = jobs;
        cfg.checkpoint = checkpoint;
        cfg.degree_window = !no_window;
        std::ifstream file;
        std::istream* in = &std::cin;
        if (!scan_file.empty()) {
            file.open(scan_file);
            if (!file.good()) throw CLI::ValidationError("cannot open file: " + scan_file);
            in = &file;
        }
        SearchReport rep = scan(
            [&](const std::function<void(const Graph&)>& sink) {
                std::string line;
                long lineno = 0;
                while (std::getline(*in, line)) {
                    ++lineno;
                    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                        line.pop_back();
                    if (line.empty() || line[0] == '#') continue;
                    try {
                        sink(parse_graph6(line));
                    } catch (const std::exception& e) {
                        std::cerr << "line " << lineno << ": " << e.what() << '\n';
                    }
                }
            },
            cfg);
        std::cout << rep.to_json() << '\n';
        return expect_none && !rep.torsion_witnesses.empty() ? 1 : 0;
    }

    if (verify_cmd->parsed()) {
        ScanConfig cfg;
        cfg.jobs = verify_jobs;
        cfg.checkpoint = verify_checkpoint;
        try {
            SearchReport rep = verify_minimality(verify_n, cfg);
            std::cout << rep.to_json() << '\n';
        } catch (const std::runtime_error& e) {
            std::cerr << e.what() << '\n';
            return 1;
        }
        return 0;
    }

    if (self_cmd->parsed()) {
        int failures = 0;
        auto check = [&](const std::string& name, bool ok) {
            std::cout << (ok ? "ok   " : "FAIL ") << name << '\n';
            if (!ok) ++failures;
        };
        SimplicialComplex rp2 = parse_facets(
            "1 2 3\n1 2 6\n1 3 5\n1 4 5\n1 4 6\n2 3 4\n2 4 5\n2 5 6\n3 4 6\n3 5 6\n");
        check("projective plane, char 0 totals 1 10 15 6",
              stanley_reisner_betti(rp2, Field{0}).totals() ==
                  std::vector<long long>{1, 10, 15, 6});
        check("projective plane, char 2 totals 1 10 15 7 1",
              stanley_reisner_betti(rp2, Field{2}).totals() ==
                  std::vector<long long>{1, 10, 15, 7, 1});
        Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        check("pentagon: three engines agree",
              hochster_betti_graph(c5, Field{0}).entries ==
                      eagon_reiner_betti(c5, Field{0}).entries &&
                  hochster_betti_graph(c5, Field{0}).entries ==
                      taylor_betti(c5, Field{0}).entries);
        check("pentagon torsion-free", torsion_primes(flag_complex(c5)).empty());
        check("projective plane torsion {2}",
              torsion_primes(rp2) == std::set<long>{2});
        return failures == 0 ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
