#include "cli.hpp"

#include "bench.hpp"

#include "hdense/decomp.hpp"
#include "hdense/dsm.hpp"
#include "hdense/dynamic.hpp"
#include "hdense/error.hpp"
#include "hdense/io.hpp"
#include "hdense/metrics.hpp"
#include "hdense/oracle.hpp"
#include "hdense/synthetic.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

namespace hdense::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Raised for flag combinations CLI11 cannot express.
struct ConfigError : Error {
    using Error::Error;
};

struct Common {
    std::string input;
    bool string_labels = false;
    bool deterministic = false;
    unsigned threads = 1;
};

double round6(double x) {
    return std::round(x * 1e6) / 1e6;
}

double millis_since(Clock::time_point start, bool deterministic) {
    if (deterministic) {
        return 0.0;
    }
    return round6(std::chrono::duration<double, std::milli>(Clock::now() - start).count());
}

unsigned resolve_threads(unsigned t) {
    if (t == 0) {
        return std::max(1u, std::thread::hardware_concurrency());
    }
    return t;
}

// Parse errors name the file they came from.
template <class F>
auto with_path(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ConfigError(path + ": " + e.what());
    } catch (const EmptyInputError& e) {
        throw EmptyInputError(path + ": " + e.what());
    }
}

LoadedHypergraph load(const Common& c) {
    return with_path(c.input, [&] { return load_hypergraph_file(c.input, {.string_labels = c.string_labels}); });
}

// Integer labels are emitted as JSON numbers, string labels as strings.
json label_json(const LoadedHypergraph& g, VertexId u, bool string_labels) {
    const auto& s = g.labels.label(u);
    if (string_labels) {
        return s;
    }
    return std::stoull(s);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\v' || c == '\f'; };
    while (i < line.size()) {
        while (i < line.size() && sep(line[i])) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !sep(line[j])) {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line_no) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return v;
}

// Output sink: "-" is the command's stdout, anything else a file.
class Sink {
public:
    Sink(const std::string& path, std::ostream& out) {
        if (path == "-") {
            stream_ = &out;
        } else {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw Error("cannot write '" + path + "'");
            }
            stream_ = file_.get();
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

std::vector<int> delta_sweep(const Hypergraph& h, const std::vector<int>& deltas, bool all) {
    if (all) {
        std::vector<int> out;
        for (int d = 1; d <= static_cast<int>(std::max<std::size_t>(1, h.max_edge_size())); ++d) {
            out.push_back(d);
        }
        return out;
    }
    return deltas;
}

void write_idn_tsv(std::ostream& out, const VertexLabelTable& labels, std::size_t n,
                   const std::vector<std::pair<int, const std::vector<int>*>>& maps) {
    out << "vertexLabel\tdelta\tidn\n";
    for (const auto& [delta, idn] : maps) {
        for (VertexId u = 0; u < n; ++u) {
            out << labels.label(u) << '\t' << delta << '\t' << (*idn)[u] << '\n';
        }
    }
}

json mine_json(const LoadedHypergraph& g, const Common& c, int k, int delta, std::string_view algo,
               const std::vector<VertexId>& vertices, double millis) {
    json j;
    j["schema"] = 1;
    j["k"] = k;
    j["delta"] = delta;
    j["algo"] = algo;
    j["size"] = vertices.size();
    json vs = json::array();
    for (VertexId u : vertices) {
        vs.push_back(label_json(g, u, c.string_labels));
    }
    j["vertices"] = std::move(vs);
    j["millis"] = millis;
    return j;
}

// ---- stats ---------------------------------------------------------------

int cmd_stats(const Common& c, std::ostream& out) {
    auto g = load(c);
    const auto& h = g.graph;
    json j;
    j["schema"] = 1;
    j["n"] = h.vertex_count();
    j["m"] = h.edge_count();
    j["d_e_max"] = h.max_edge_size();
    j["d_e_min"] = h.min_edge_size();
    j["m_over_n"] = round6(static_cast<double>(h.edge_count()) / static_cast<double>(h.vertex_count()));
    j["d_e_avg"] = round6(h.avg_edge_size());
    out << j.dump(2) << '\n';
    return kOk;
}

// ---- mine / oracle -------------------------------------------------------

struct MineArgs {
    int k = 1;
    int delta = 1;
    std::string algo = "all";
};

int cmd_mine(const Common& c, const MineArgs& a, std::ostream& out) {
    auto g = load(c);
    const auto miner = parse_miner(a.algo);
    const auto start = Clock::now();
    auto r = mine(g.graph, a.k, a.delta, miner);
    const double ms = millis_since(start, c.deterministic);
    out << mine_json(g, c, a.k, a.delta, miner_name(miner), r.vertices, ms).dump(2) << '\n';
    return kOk;
}

int cmd_oracle(const Common& c, const MineArgs& a, std::ostream& out) {
    auto g = load(c);
    if (a.k < 0) {
        throw ParameterError("k must be >= 0");
    }
    const auto start = Clock::now();
    auto d = oracle::dense(g.graph, a.k, a.delta);
    const double ms = millis_since(start, c.deterministic);
    out << mine_json(g, c, a.k, a.delta, "oracle", d, ms).dump(2) << '\n';
    return kOk;
}

// ---- decompose -----------------------------------------------------------

struct DecomposeArgs {
    std::vector<int> deltas;
    bool all_deltas = false;
    std::string algo = "dsd+";
    std::string tsv = "-";
    std::string summary;
};

int cmd_decompose(const Common& c, const DecomposeArgs& a, std::ostream& out) {
    if (a.deltas.empty() && !a.all_deltas) {
        throw ConfigError("one of --delta or --all-deltas is required");
    }
    if (a.tsv == "-" && a.summary == "-") {
        throw ConfigError("--tsv and --summary cannot both go to stdout");
    }
    Driver driver;
    if (a.algo == "dsd") {
        driver = Driver::dsd;
    } else if (a.algo == "dsd+") {
        driver = Driver::dsd_plus;
    } else {
        throw ConfigError("unknown decomposition algorithm '" + a.algo + "'");
    }
    auto g = load(c);
    const auto deltas = delta_sweep(g.graph, a.deltas, a.all_deltas);

    // One timed run per delta; with several threads each delta is timed on
    // its own worker.
    std::vector<Decomposition> suite(deltas.size());
    std::vector<double> millis(deltas.size(), 0.0);
    const unsigned threads = std::min<unsigned>(resolve_threads(c.threads), static_cast<unsigned>(deltas.size()));
    {
        std::vector<std::exception_ptr> errors(deltas.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next++; i < deltas.size(); i = next++) {
                try {
                    const auto start = Clock::now();
                    suite[i] = driver == Driver::dsd ? dsd(g.graph, deltas[i]) : dsd_plus(g.graph, deltas[i]);
                    millis[i] = millis_since(start, c.deterministic);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(work);
        }
        work();
        for (auto& t : pool) {
            t.join();
        }
        for (auto& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    {
        Sink sink(a.tsv, out);
        std::vector<std::pair<int, const std::vector<int>*>> maps;
        for (const auto& d : suite) {
            maps.emplace_back(d.delta, &d.idn);
        }
        write_idn_tsv(*sink, g.labels, g.graph.vertex_count(), maps);
    }
    if (!a.summary.empty()) {
        json j;
        j["schema"] = 1;
        j["algo"] = a.algo;
        json list = json::array();
        for (std::size_t i = 0; i < suite.size(); ++i) {
            const auto& d = suite[i];
            json item;
            item["delta"] = d.delta;
            item["k_max"] = d.k_max;
            json layers = json::array();
            const auto sizes = d.layer_sizes();
            for (std::size_t k = 0; k < sizes.size(); ++k) {
                layers.push_back({{"k", k}, {"size", sizes[k]}});
            }
            item["layers"] = std::move(layers);
            item["millis"] = millis[i];
            item["dsm_calls"] = d.dsm_calls;
            list.push_back(std::move(item));
        }
        j["decompositions"] = std::move(list);
        Sink sink(a.summary, out);
        *sink << j.dump(2) << '\n';
    }
    return kOk;
}

// ---- dynamic -------------------------------------------------------------

struct DynamicArgs {
    std::string updates;
    std::vector<int> deltas;
    std::string timing = "-";
    std::string idn = "-";
};

struct Update {
    bool insert = true;
    std::vector<std::string> labels;  // insert
    EdgeId edge = 0;                  // delete
    std::size_t line = 0;
};

std::vector<Update> read_updates(const std::string& path, bool string_labels) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::vector<Update> ups;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            continue;
        }
        Update u;
        u.line = line_no;
        if (tokens.front() == "+") {
            if (tokens.size() < 2) {
                throw ParseError(line_no, "insertion needs at least one vertex");
            }
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                u.labels.push_back(string_labels ? std::string(tokens[i])
                                                 : std::to_string(parse_uint(tokens[i], line_no)));
            }
        } else if (tokens.front() == "-") {
            if (tokens.size() != 2) {
                throw ParseError(line_no, "deletion takes exactly one edge index");
            }
            u.insert = false;
            const auto e = parse_uint(tokens[1], line_no);
            if (e >= kNoEdge) {
                throw ParseError(line_no, "edge index out of range");
            }
            u.edge = static_cast<EdgeId>(e);
        } else {
            throw ParseError(line_no, "expected '+' or '-', got '" + std::string(tokens.front()) + "'");
        }
        ups.push_back(std::move(u));
    }
    return ups;
}

int cmd_dynamic(const Common& c, const DynamicArgs& a, std::ostream& out) {
    auto g = load(c);
    auto ups = with_path(a.updates, [&] { return read_updates(a.updates, c.string_labels); });
    DynamicState state(g.graph, a.deltas);

    std::ostringstream timing;
    timing << "step\top\tedge\tmicros\treversals\tsearches\tregion\n";
    std::size_t step = 0;
    for (const auto& u : ups) {
        ++step;
        const auto start = Clock::now();
        EdgeId id = u.edge;
        try {
            if (u.insert) {
                std::vector<VertexId> members;
                for (const auto& l : u.labels) {
                    members.push_back(g.labels.intern(l));
                }
                id = state.insert_edge(std::move(members));
            } else {
                state.delete_edge(u.edge);
            }
        } catch (const NotFoundError& e) {
            throw NotFoundError("update on line " + std::to_string(u.line) + ": " + e.what());
        }
        const auto micros =
            c.deterministic ? 0 : std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
        const auto& st = state.last_update();
        timing << step << '\t' << (u.insert ? '+' : '-') << '\t' << id << '\t' << micros << '\t' << st.reversals
               << '\t' << st.searches << '\t' << st.region << '\n';
    }

    std::ostringstream idn;
    std::vector<std::pair<int, const std::vector<int>*>> maps;
    for (int d : state.deltas()) {
        maps.emplace_back(d, &state.idn(d));
    }
    write_idn_tsv(idn, g.labels, state.vertex_count(), maps);

    if (a.timing == "-" && a.idn == "-") {
        out << timing.str() << '\n' << idn.str();
    } else {
        *Sink(a.timing, out) << timing.str();
        *Sink(a.idn, out) << idn.str();
    }
    return kOk;
}

// ---- metrics -------------------------------------------------------------

struct MetricsArgs {
    std::vector<int> deltas;
    bool all_deltas = false;
    std::string decomp;
    bool assert_bounds = false;
};

// Reads "vertexLabel<TAB>delta<TAB>idn" rows as written by decompose.
std::vector<Decomposition> read_decomposition(const std::string& path, const LoadedHypergraph& g,
                                              bool string_labels) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::map<int, Decomposition> by_delta;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#' || tokens.front() == "vertexLabel") {
            continue;
        }
        if (tokens.size() != 3) {
            throw ParseError(line_no, "expected vertexLabel, delta and idn");
        }
        const std::string label =
            string_labels ? std::string(tokens[0]) : std::to_string(parse_uint(tokens[0], line_no));
        auto u = g.labels.find(label);
        if (!u) {
            throw ParseError(line_no, "unknown vertex '" + label + "'");
        }
        const auto delta = parse_uint(tokens[1], line_no);
        const auto idn = parse_uint(tokens[2], line_no);
        if (delta < 1 || delta > 1'000'000 || idn > 1'000'000'000) {
            throw ParseError(line_no, "delta or idn out of range");
        }
        auto& d = by_delta[static_cast<int>(delta)];
        if (d.idn.empty()) {
            d.delta = static_cast<int>(delta);
            d.idn.assign(g.graph.vertex_count(), 0);
        }
        d.idn[*u] = static_cast<int>(idn);
        d.k_max = std::max(d.k_max, static_cast<int>(idn));
    }
    std::vector<Decomposition> suite;
    for (auto& [delta, d] : by_delta) {
        suite.push_back(std::move(d));
    }
    if (suite.empty()) {
        throw EmptyInputError("decomposition file '" + path + "' has no rows");
    }
    return suite;
}

json ratio_json(const Ratio& r) {
    return round6(r.value());
}

int cmd_metrics(const Common& c, const MetricsArgs& a, std::ostream& out) {
    if (!a.decomp.empty() && (a.all_deltas || !a.deltas.empty())) {
        throw ConfigError("--decomp takes its deltas from the file");
    }
    if (a.decomp.empty() && a.deltas.empty() && !a.all_deltas) {
        throw ConfigError("one of --delta, --all-deltas or --decomp is required");
    }
    auto g = load(c);
    const auto& h = g.graph;
    std::vector<Decomposition> suite;
    if (!a.decomp.empty()) {
        suite = with_path(a.decomp, [&] { return read_decomposition(a.decomp, g, c.string_labels); });
    } else {
        suite = decompose_all(h, Driver::dsd, delta_sweep(h, a.deltas, a.all_deltas), resolve_threads(c.threads));
    }
    const auto reports = layer_quality(h, suite);

    std::size_t violations = 0;
    json list = json::array();
    for (const auto& r : reports) {
        violations += r.violations();
        json item;
        item["delta"] = r.delta;
        item["k_max"] = r.k_max;
        item["non_empty_ratio"] = round6(r.non_empty_ratio);
        item["avg_jaccard_distance"] = round6(r.avg_jaccard_distance);
        item["jaccard_defined"] = r.jaccard_defined;
        item["sat"] = round6(r.sat);
        item["cont"] = round6(r.cont);
        item["cont_defined"] = r.cont_defined;
        Ratio best_ev;
        Ratio best_rho;
        json layers = json::array();
        for (const auto& l : r.layers) {
            best_ev = std::max(best_ev, l.edge_vertex);
            best_rho = std::max(best_rho, l.guarantee.rho);
            json lj;
            lj["k"] = l.k;
            lj["layer_size"] = l.layer_size;
            lj["dense_size"] = l.dense_size;
            lj["layer_rho_d"] = ratio_json(l.layer_rho_d);
            lj["edge_vertex"] = ratio_json(l.edge_vertex);
            lj["rho"] = ratio_json(l.guarantee.rho);
            lj["rho_d"] = ratio_json(l.guarantee.rho_d);
            lj["theta"] = ratio_json(l.guarantee.theta);
            lj["f_k"] = ratio_json(l.guarantee.f_k);
            lj["phi"] = ratio_json(l.conductance.phi);
            lj["phi_bound"] = ratio_json(l.conductance.bound);
            lj["layer_density_ok"] = l.layer_density_ok;
            lj["indegree_bound_ok"] = l.guarantee.indegree_bound_ok;
            lj["degree_bound_ok"] = l.guarantee.degree_bound_ok;
            lj["conductance_ok"] = l.conductance.ok;
            layers.push_back(std::move(lj));
        }
        item["max_edge_vertex_ratio"] = ratio_json(best_ev);
        item["max_degree_density"] = ratio_json(best_rho);
        item["violations"] = r.violations();
        item["layers"] = std::move(layers);
        list.push_back(std::move(item));
    }
    json j;
    j["schema"] = 1;
    j["violations"] = violations;
    j["reports"] = std::move(list);
    out << j.dump(2) << '\n';
    return a.assert_bounds && violations > 0 ? kBoundViolation : kOk;
}

// ---- bench ---------------------------------------------------------------

struct BenchArgs {
    std::string synthetic;
    std::uint64_t seed = 1;
    std::vector<std::string> algos{"path", "flow", "flow+", "all"};
    int k = 5;
    int delta = 1;
    int repeat = 3;
    double timeout = 60.0;
    std::size_t mem_limit_mb = 0;
};

// "uniform:n,m,min,max" or "power:n,m,alpha,extra,max"
Hypergraph make_synthetic(const std::string& spec, std::uint64_t seed) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    std::vector<double> v;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                v.push_back(std::stod(part));
            } catch (const std::exception&) {
                throw ConfigError("bad number '" + part + "' in --synthetic");
            }
        }
    }
    auto sz = [](double x) { return static_cast<std::size_t>(x); };
    if (kind == "uniform" && v.size() == 4) {
        return synthetic::uniform(sz(v[0]), sz(v[1]), sz(v[2]), sz(v[3]), seed);
    }
    if (kind == "power" && v.size() == 5) {
        return synthetic::power_law(sz(v[0]), sz(v[1]), v[2], v[3], sz(v[4]), seed);
    }
    throw ConfigError("--synthetic expects uniform:n,m,min,max or power:n,m,alpha,extra,max");
}

int cmd_bench(const Common& c, const BenchArgs& a, std::ostream& out) {
    if (c.input.empty() == a.synthetic.empty()) {
        throw ConfigError("bench needs exactly one of --input or --synthetic");
    }
    for (const auto& algo : a.algos) {
        if (algo != "dsd" && algo != "dsd+") {
            parse_miner(algo);
        }
    }
    BenchConfig config;
    config.algos = a.algos;
    config.k = a.k;
    config.delta = a.delta;
    config.repeat = a.repeat;
    config.timeout_seconds = a.timeout;
    config.mem_limit_mb = a.mem_limit_mb;
    config.deterministic = c.deterministic;
    Hypergraph h;
    if (!a.synthetic.empty()) {
        h = make_synthetic(a.synthetic, a.seed);
        config.label = a.synthetic + "@" + std::to_string(a.seed);
    } else {
        h = load(c).graph;
        config.label = c.input;
    }
    write_bench_tsv(run_bench(h, config), config, out);
    return kOk;
}

void add_common(CLI::App* sub, Common& c, bool input_required = true) {
    auto* opt = sub->add_option("--input,-i", c.input, "hyperedge list file");
    if (input_required) {
        opt->required();
    }
    sub->add_flag("--string-labels", c.string_labels, "treat vertex tokens as strings, not integers");
    sub->add_flag("--deterministic", c.deterministic, "report all timings as 0 so output bytes are reproducible");
    sub->add_option("--threads", c.threads, "worker threads, 0 for all cores")
        ->envname("HDENSE_THREADS")
        ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hdense: nested (k, delta)-dense decomposition of hypergraphs", "hdense"};
    app.require_subcommand(1);

    Common common;
    MineArgs mine_args;
    DecomposeArgs dec;
    DynamicArgs dyn;
    MetricsArgs met;
    BenchArgs bench;

    auto* stats = app.add_subcommand("stats", "dataset statistics as JSON");
    add_common(stats, common);

    auto* mine = app.add_subcommand("mine", "one (k, delta)-dense subhypergraph as JSON");
    add_common(mine, common);
    mine->add_option("--k", mine_args.k)->required()->check(CLI::NonNegativeNumber);
    mine->add_option("--delta", mine_args.delta)->required()->check(CLI::PositiveNumber);
    mine->add_option("--algo", mine_args.algo)->check(CLI::IsMember({"path", "flow", "flow+", "all"}));

    auto* orc = app.add_subcommand("oracle", "brute-force reference for tiny inputs, same JSON as mine");
    add_common(orc, common);
    orc->add_option("--k", mine_args.k)->required()->check(CLI::NonNegativeNumber);
    orc->add_option("--delta", mine_args.delta)->required()->check(CLI::PositiveNumber);

    auto* decompose = app.add_subcommand("decompose", "idn of every vertex as TSV, optional JSON summary");
    add_common(decompose, common);
    auto* d_delta = decompose->add_option("--delta", dec.deltas, "one or more deltas")->check(CLI::PositiveNumber);
    auto* d_all = decompose->add_flag("--all-deltas", dec.all_deltas, "every delta from 1 to the largest edge size");
    d_delta->excludes(d_all);
    decompose->add_option("--algo", dec.algo)->check(CLI::IsMember({"dsd", "dsd+"}));
    decompose->add_option("--tsv", dec.tsv, "idn table, '-' for stdout");
    decompose->add_option("--summary", dec.summary, "JSON summary, '-' for stdout");

    auto* dynamic = app.add_subcommand("dynamic", "replay insertions and deletions");
    add_common(dynamic, common);
    dynamic->add_option("--updates", dyn.updates, "lines '+ v1 v2 ...' or '- edgeIndex'")->required();
    dynamic->add_option("--delta", dyn.deltas, "maintained deltas (default: floor of the mean edge size)")
        ->check(CLI::PositiveNumber);
    dynamic->add_option("--timing", dyn.timing, "per-step TSV, '-' for stdout");
    dynamic->add_option("--idn", dyn.idn, "final idn TSV, '-' for stdout");

    auto* metrics = app.add_subcommand("metrics", "layer quality and bound checks as JSON");
    add_common(metrics, common);
    auto* m_delta = metrics->add_option("--delta", met.deltas)->check(CLI::PositiveNumber);
    auto* m_all = metrics->add_flag("--all-deltas", met.all_deltas);
    m_delta->excludes(m_all);
    metrics->add_option("--decomp", met.decomp, "idn TSV from decompose instead of computing one");
    metrics->add_flag("--assert-bounds", met.assert_bounds, "exit 3 if any bound check fails");

    auto* bench_cmd = app.add_subcommand("bench", "timing TSV, one forked child per run");
    add_common(bench_cmd, common, false);
    bench_cmd->add_option("--synthetic", bench.synthetic, "uniform:n,m,min,max or power:n,m,alpha,extra,max");
    bench_cmd->add_option("--seed", bench.seed);
    bench_cmd->add_option("--algos", bench.algos, "path, flow, flow+, all, dsd, dsd+")->delimiter(',');
    bench_cmd->add_option("--k", bench.k)->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--delta", bench.delta)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--repeat", bench.repeat)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--timeout", bench.timeout, "seconds per run")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--mem-limit", bench.mem_limit_mb, "address-space cap per run in MB");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (stats->parsed()) {
            return cmd_stats(common, out);
        }
        if (mine->parsed()) {
            return cmd_mine(common, mine_args, out);
        }
        if (orc->parsed()) {
            return cmd_oracle(common, mine_args, out);
        }
        if (decompose->parsed()) {
            return cmd_decompose(common, dec, out);
        }
        if (dynamic->parsed()) {
            return cmd_dynamic(common, dyn, out);
        }
        if (metrics->parsed()) {
            return cmd_metrics(common, met, out);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(common, bench, out);
        }
    } catch (const SizeGuardError& e) {
        err << "hdense: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const std::bad_alloc&) {
        err << "hdense: out of memory\n";
        return kResourceLimit;
    } catch (const InvariantViolation& e) {
        err << "hdense: internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const Error& e) {
        err << "hdense: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        err << "hdense: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}

}  // namespace hdense::cli
