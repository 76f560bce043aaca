#include "edgebetti/search.hpp"

#include <bit>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "edgebetti/canonical.hpp"
#include "edgebetti/enumerate.hpp"
#include "edgebetti/homology.hpp"

namespace edgebetti {

namespace {

Graph strip_isolated(const Graph& g) {
    std::uint64_t keep = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v]) keep |= std::uint64_t{1} << v;
    if (keep == g.full_mask()) return g;
    return induced_subgraph(g, keep);
}

const CanonicalForm& two_k2_form() {
    static const CanonicalForm form =
        canonical_form(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    return form;
}

const std::set<CanonicalForm>& admissible_s5_forms() {
    static const std::set<CanonicalForm> forms = [] {
        std::set<CanonicalForm> s;
        for (const Graph& g : admissible_s5_graphs()) s.insert(canonical_form(g));
        return s;
    }();
    return forms;
}

// per-isomorphism-class outcome, as journaled
struct Record {
    std::vector<std::string> reasons;  // empty iff kept
    std::set<long> primes;
    std::vector<int> degrees;
    // Graphs cut only by the max-degree-2 rule still count as survivors:
    // their Betti numbers are characteristic-independent outright, so the
    // homology stage is a guaranteed no-torsion pass rather than a discard.
    // This matches the published survivor counts, which include the 2-regular
    // connected graph at each n.
    bool survivor() const {
        return reasons.empty() || (reasons.size() == 1 && reasons[0] == "max_degree_2");
    }
};

Record compute_record(const Graph& g, const ScanConfig& cfg) {
    Record rec;
    PruneVerdict verdict = prune(g);
    rec.reasons = verdict.reasons;
    if (!verdict.keep) return rec;
    ChainComplexZ cc = chain_complex(flag_complex(g));
    int jhi = cfg.degree_window ? std::max(1, g.n - 6) : cc.dims;
    for (int j = 1; j <= std::min(jhi, cc.dims); ++j) {
        if (j + 1 >= static_cast<int>(cc.boundary.size())) break;
        SmithForm snf = smith_normal_form(cc.boundary[j + 1]);
        bool hit = false;
        for (const mpz_class& f : snf.invariant_factors)
            if (f > 1) {
                hit = true;
                for (long p : prime_divisors(f)) rec.primes.insert(p);
            }
        if (hit) rec.degrees.push_back(j);
    }
    return rec;
}

nlohmann::json record_to_json(const std::string& g6, const Record& rec) {
    nlohmann::json j;
    j["g6"] = g6;
    j["verdict"] = rec.reasons;
    j["torsion"] = {{"primes", rec.primes}, {"degrees", rec.degrees}};
    return j;
}

void load_journal(const std::string& path, std::unordered_map<std::string, Record>& cache) {
    std::ifstream in(path);
    if (!in.good()) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        // a truncated trailing line from an interrupted run is skipped; the
        // class is simply recomputed
        if (j.is_discarded() || !j.contains("g6")) continue;
        Record rec;
        for (const auto& r : j["verdict"]) rec.reasons.push_back(r.get<std::string>());
        for (const auto& p : j["torsion"]["primes"]) rec.primes.insert(p.get<long>());
        for (const auto& d : j["torsion"]["degrees"]) rec.degrees.push_back(d.get<int>());
        cache.emplace(j["g6"].get<std::string>(), std::move(rec));
    }
}

// single-producer multi-consumer bounded queue
class GraphQueue {
public:
    void push(Graph g) {
        std::unique_lock<std::mutex> lock(mtx_);
        room_.wait(lock, [&] { return items_.size() < 1024; });
        items_.push_back(std::move(g));
        avail_.notify_one();
    }
    bool pop(Graph& g) {
        std::unique_lock<std::mutex> lock(mtx_);
        avail_.wait(lock, [&] { return !items_.empty() || closed_; });
        if (items_.empty()) return false;
        g = std::move(items_.front());
        items_.pop_front();
        room_.notify_one();
        return true;
    }
    void close() {
        std::lock_guard<std::mutex> lock(mtx_);
        closed_ = true;
        avail_.notify_all();
    }

private:
    std::mutex mtx_;
    std::condition_variable avail_, room_;
    std::deque<Graph> items_;
    bool closed_ = false;
};

}  // namespace

const std::vector<Graph>& admissible_s5_graphs() {
    static const std::vector<Graph> graphs = {
        // P3 + K2
        Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}}),
        // P5
        Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
        // K3 + K2
        Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}}),
        // triangle with a pendant 2-path
        Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}}),
        // bowtie: two triangles sharing a vertex
        Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}),
        // C5
        Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}),
    };
    return graphs;
}

PruneVerdict prune(const Graph& g) {
    PruneVerdict verdict;
    auto fire = [&](const char* rule) {
        verdict.keep = false;
        verdict.reasons.push_back(rule);
    };
    if (g.n == 0 || g.min_degree() <= 1) fire("degree1_reduction");
    if (g.n > 0 && g.max_degree() >= g.n - 4) fire("high_degree_reduction");
    if (g.n > 0 && !is_connected(g)) fire("disconnected_split");
    if (g.n == 0 || g.max_degree() <= 2) fire("max_degree_2");
    bool s4 = false, s5 = false;
    for (int v = 0; v < g.n; ++v) {
        std::uint64_t others = g.full_mask() & ~g.adj[v] & ~(std::uint64_t{1} << v);
        int s = std::popcount(others);
        if (s == 4 && canonical_form(induced_subgraph(g, others)) != two_k2_form()) s4 = true;
        if (s == 5 &&
            !admissible_s5_forms().count(canonical_form(induced_subgraph(g, others))))
            s5 = true;
    }
    if (s4) fire("nonneighbor_condition_s4");
    if (s5) fire("nonneighbor_condition_s5");
    return verdict;
}

std::string canonical_graph6(const Graph& g) {
    CanonicalLabeling lab = canonicalize(g);
    Graph h(g.n);
    for (auto [u, v] : g.edges()) h.add_edge(lab.to_canonical[u], lab.to_canonical[v]);
    return emit_graph6(h);
}

std::string SearchReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["enumerated"] = enumerated;
    j["survivors"] = survivors;
    j["seconds"] = seconds;
    j["torsion_witnesses"] = nlohmann::json::array();
    for (const TorsionWitness& w : torsion_witnesses)
        j["torsion_witnesses"].push_back(
            {{"g6", w.g6}, {"primes", w.primes}, {"degrees", w.degrees}});
    return j.dump();
}

SearchReport scan(const std::function<void(const std::function<void(const Graph&)>&)>& source,
                  const ScanConfig& config) {
    auto start = std::chrono::steady_clock::now();
    std::unordered_map<std::string, Record> cache;
    std::ofstream journal;
    if (!config.checkpoint.empty()) {
        load_journal(config.checkpoint, cache);
        journal.open(config.checkpoint, std::ios::app);
        if (!journal.good())
            throw std::runtime_error("scan: cannot open checkpoint file " + config.checkpoint);
    }

    SearchReport report;
    std::map<std::string, TorsionWitness> witnesses;
    std::mutex mtx;  // guards cache, journal, report, witnesses

    auto tally = [&](const std::string& g6, const Record& rec) {
        // caller holds mtx
        if (!rec.survivor()) return;
        ++report.survivors;
        if (!rec.primes.empty())
            witnesses.emplace(g6, TorsionWitness{g6, rec.primes, rec.degrees});
    };
    auto process = [&](const Graph& raw) {
        Graph g = strip_isolated(raw);
        std::string g6 = canonical_graph6(g);
        {
            std::lock_guard<std::mutex> lock(mtx);
            ++report.enumerated;
            report.n = std::max(report.n, raw.n);
            auto it = cache.find(g6);
            if (it != cache.end()) {
                tally(g6, it->second);
                return;
            }
        }
        Record rec = compute_record(g, config);
        std::lock_guard<std::mutex> lock(mtx);
        auto [it, fresh] = cache.emplace(g6, std::move(rec));
        if (fresh && journal.is_open()) {
            journal << record_to_json(g6, it->second).dump() << '\n';
            journal.flush();
        }
        tally(g6, it->second);
    };

    if (config.jobs <= 1) {
        source(process);
    } else {
        GraphQueue queue;
        std::vector<std::thread> workers;
        for (int t = 0; t < config.jobs; ++t)
            workers.emplace_back([&] {
                Graph g;
                while (queue.pop(g)) process(g);
            });
        source([&](const Graph& g) { queue.push(g); });
        queue.close();
        for (std::thread& w : workers) w.join();
    }

    for (auto& [g6, w] : witnesses) report.torsion_witnesses.push_back(std::move(w));
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SearchReport scan(const std::vector<Graph>& graphs, const ScanConfig& config) {
    return scan(
        [&](const std::function<void(const Graph&)>& sink) {
            for (const Graph& g : graphs) sink(g);
        },
        config);
}

SearchReport verify_minimality(int n, const ScanConfig& config) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("verify_minimality: n must be in [1, 10]");
    EnumConstraints constraints;
    constraints.connected = true;
    constraints.min_degree = 2;
    constraints.max_degree = std::max(0, n - 5);
    SearchReport report = scan(
        [&](const std::function<void(const Graph&)>& sink) {
            enumerate_graphs(n, constraints, sink);
        },
        config);
    report.n = n;
    if (!report.torsion_witnesses.empty())
        throw std::runtime_error("verify_minimality: torsion witness found at n=" +
                                 std::to_string(n) + ": " + report.torsion_witnesses[0].g6);
    return report;
}

}  // namespace edgebetti
