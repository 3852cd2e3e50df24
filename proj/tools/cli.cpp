#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hadclique/counting.hpp"
#include "hadclique/error.hpp"
#include "hadclique/essays.hpp"
#include "hadclique/exact_search.hpp"
#include "hadclique/fast_search.hpp"
#include "hadclique/ga_search.hpp"
#include "hadclique/oracle.hpp"
#include "hadclique/seeds.hpp"
#include "inputs.hpp"
#include "reference_data.hpp"
#include "report_json.hpp"

namespace hadclique::cli {

namespace {

// Thrown for problems the user can fix on the command line.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> seed_from_env()
{
    const char* raw = std::getenv("HADCLIQUE_SEED");
    if (raw == nullptr || *raw == '\0')
        return std::nullopt;
    const std::string_view text(raw);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError("HADCLIQUE_SEED='" + std::string(text) + "' is not an unsigned integer");
    return value;
}

std::string fixed(double v, int precision)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision) << v;
    return s.str();
}

std::string plain(double v)
{
    std::ostringstream s;
    s << v;
    return s.str();
}

double median(std::vector<double> v)
{
    if (v.empty())
        return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

// ---------------------------------------------------------------- stats

struct StatsOptions {
    int t = 0;
    bool json = false;
};

int cmd_stats(const StatsOptions& o, std::ostream& out)
{
    Json doc;
    doc["t"] = o.t;
    Json classes = Json::array();
    for (int k = 0; k <= o.t; ++k) {
        Json row;
        row["k"] = k;
        row["vertices"] = static_cast<std::uint64_t>(vertices_with_k(o.t, k));
        row["degree"] = static_cast<std::uint64_t>(degree(o.t, k));
        classes.push_back(std::move(row));
    }
    doc["classes"] = std::move(classes);
    doc["total_vertices"] = static_cast<std::uint64_t>(vertex_count(o.t));
    doc["total_edges"] = static_cast<std::uint64_t>(edge_count(o.t));

    if (o.json) {
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << "G_" << o.t << " (vectors of length " << 4 * o.t << ")\n";
    out << std::setw(4) << "k" << std::setw(16) << "vertices" << std::setw(16) << "degree" << "\n";
    for (const auto& row : doc["classes"])
        out << std::setw(4) << row["k"].get<int>() << std::setw(16) << row["vertices"].get<std::uint64_t>() << std::setw(16)
            << row["degree"].get<std::uint64_t>() << "\n";
    out << "total vertices " << doc["total_vertices"].get<std::uint64_t>() << "\n";
    out << "total edges    " << doc["total_edges"].get<std::uint64_t>() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- search

struct SearchOptions {
    std::string algorithm;
    int t = 0;
    int essays = 0; // 0: 10 for exact, 1 otherwise
    std::uint64_t rng_seed = 0;
    double time_limit = 0.0;
    int population = 5;
    int generations = 20;
    double p_m = 0.1;
    double p_b = 0.8;
    std::uint64_t candidate_cap = kDefaultCandidateCap;
    int attempts = 10;
    int stall_limit = 0;
    std::string seed_file;
    std::string out;
    unsigned jobs = 1;
};

Clique load_seed(const std::string& path, int t)
{
    if (path.empty())
        return Clique{t, {}};
    Clique seed = load_clique(path);
    if (seed.t != t)
        throw UsageError("seed file " + path + " holds a clique for t=" + std::to_string(seed.t) + ", search is for t=" +
                         std::to_string(t));
    if (const auto check = oracle::verify_clique(seed); !check.ok)
        throw Error(ErrorKind::InvalidSeed, "seed file " + path + ": " + check.message);
    return seed;
}

SearchReport search_exact(const SearchOptions& o, const Clique& seed)
{
    ExactSearchConfig cfg;
    cfg.t = o.t;
    cfg.essays = o.essays;
    cfg.rng_seed = o.rng_seed;
    cfg.candidate_cap = o.candidate_cap;
    cfg.seed = seed;
    cfg.jobs = o.jobs;
    cfg.time_limit_seconds = o.time_limit;
    SearchReport report = run_exact(cfg);
    report.config.emplace_back("time_limit", plain(o.time_limit));
    return report;
}

SearchReport search_ga(const SearchOptions& o, const Clique& seed)
{
    GaConfig base;
    base.t = o.t;
    base.population_size = o.population;
    base.max_generations = o.generations;
    base.p_m = o.p_m;
    base.p_b = o.p_b;
    base.candidate_cap = o.candidate_cap;
    base.seed = seed;
    base.time_limit_seconds = o.time_limit;
    validate(base);

    SearchReport report;
    report.algorithm = "ga";
    report.t = o.t;
    report.essays = run_essays(o.essays, o.jobs, o.time_limit, [&](int index) {
        GaConfig cfg = base;
        cfg.rng_seed = o.rng_seed + static_cast<std::uint64_t>(index);
        SearchReport one = run_ga(cfg);
        if (report.config.empty() && index == 0)
            report.config = one.config;
        EssayRecord record = std::move(one.essays.front());
        record.extended = record.clique.size() > seed.size();
        return record;
    });
    if (report.config.empty())
        report.config = {{"population_size", std::to_string(o.population)}, {"max_generations", std::to_string(o.generations)}};
    report.config.emplace_back("essays", std::to_string(o.essays));
    report.config.emplace_back("time_limit", plain(o.time_limit));
    return report;
}

SearchReport search_fast(const SearchOptions& o, const Clique& seed)
{
    FastConfig base;
    base.t = o.t;
    base.attempts_per_vector = o.attempts;
    base.stall_limit = o.stall_limit;
    const FastConfig resolved = base.resolved();

    SearchReport report;
    report.algorithm = "fast";
    report.t = o.t;
    report.config = {
        {"essays", std::to_string(o.essays)},
        {"rng_seed", std::to_string(o.rng_seed)},
        {"attempts_per_vector", std::to_string(resolved.attempts_per_vector)},
        {"inner_population", std::to_string(resolved.inner_population)},
        {"inner_generations", std::to_string(resolved.inner_generations)},
        {"quarter_backtracks", std::to_string(resolved.quarter_backtracks)},
        {"stall_limit", std::to_string(resolved.stall_limit)},
        {"seed_size", std::to_string(seed.size())},
        {"time_limit", plain(o.time_limit)},
    };
    report.essays = run_essays(o.essays, o.jobs, o.time_limit, [&](int index) {
        const auto start = SteadyClock::now();
        FastConfig cfg = base;
        cfg.rng_seed = o.rng_seed + static_cast<std::uint64_t>(index);
        EssayRecord record;
        record.clique = run_fast(seed, cfg);
        record.extended = record.clique.size() > seed.size();
        record.seconds = seconds_since(start);
        return record;
    });
    return report;
}

void print_search_table(const SearchReport& r, const std::string& path, std::ostream& out)
{
    out << r.algorithm << " search, t=" << r.t << ", " << r.essays.size() << " essay" << (r.essays.size() == 1 ? "" : "s")
        << "\n";
    out << std::setw(6) << "essay" << std::setw(7) << "size" << std::setw(11) << "seconds" << "  note\n";
    for (const auto& e : r.essays) {
        std::string note;
        if (e.overflow)
            note = "candidate cap exceeded";
        else if (!e.extended)
            note = "not extended";
        else if (e.best_generation >= 0)
            note = "best at generation " + std::to_string(e.best_generation);
        out << std::setw(6) << e.index << std::setw(7) << e.clique.size() << std::setw(11) << fixed(e.seconds, 3) << "  " << note
            << "\n";
    }
    if (r.essays.empty()) {
        out << "no essay ran\n";
        return;
    }
    out << "best: essay " << r.best_index() << ", size " << r.best_size() << ", median " << plain(r.median_size()) << "\n";
    out << "partial Hadamard depth " << r.depth() << " x " << 4 * r.t << " (floor(4t/3) = " << r.third_threshold()
        << ", 2t = " << r.half_threshold() << ")\n";
    out << "best clique: " << format_clique(r.best()).substr(std::to_string(r.t).size() + 1);
    if (!path.empty())
        out << "report written to " << path << "\n";
}

int cmd_search(SearchOptions o, std::ostream& out, std::ostream& err)
{
    if (const auto env = seed_from_env())
        o.rng_seed = *env;
    if (o.essays == 0)
        o.essays = o.algorithm == "exact" ? 10 : 1;
    if (o.algorithm != "fast" && o.t < 2)
        throw UsageError(o.algorithm + " search needs t >= 2");
    const Clique seed = load_seed(o.seed_file, o.t);

    const auto started = std::chrono::system_clock::now();
    const auto clock = SteadyClock::now();
    SearchReport report;
    if (o.algorithm == "exact")
        report = search_exact(o, seed);
    else if (o.algorithm == "ga")
        report = search_ga(o, seed);
    else
        report = search_fast(o, seed);
    const double total = seconds_since(clock);
    const auto finished = std::chrono::system_clock::now();

    const Json doc = full_report(report, started, finished, total);
    const std::string path = o.out.empty() ? "hadclique-" + o.algorithm + "-t" + std::to_string(o.t) + ".json" : o.out;
    write_file(path, doc.dump(2) + "\n");
    print_search_table(report, path, out);

    if (!doc["report"]["best"]["verified"].get<bool>()) {
        err << "error: best clique failed verification\n";
        return kExitVerifyFailed;
    }
    const bool produced = std::any_of(report.essays.begin(), report.essays.end(),
                                      [](const EssayRecord& e) { return !e.overflow && !e.clique.empty(); });
    if (!produced) {
        err << "error: no essay produced a clique\n";
        return kExitNothingProduced;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify / normalize / paley / extend

int cmd_verify(const std::string& path, std::ostream& out)
{
    const std::string text = read_file(path);
    switch (sniff(text)) {
    case InputKind::Report: {
        const Clique c = best_clique_from_report(Json::parse(text));
        out << "PASS: report best clique of size " << c.size() << " in G_" << c.t << "\n";
        return kExitOk;
    }
    case InputKind::Matrix: {
        const SignMatrix m = ingest_sign_matrix(text);
        const auto check = oracle::verify_ph(m);
        out << (check.ok ? "PASS: " : "FAIL: ") << check.message << "\n";
        return check.ok ? kExitOk : kExitVerifyFailed;
    }
    case InputKind::Clique: break;
    }
    const Clique c = parse_clique(text);
    const auto check = oracle::verify_clique(c);
    out << (check.ok ? "PASS: " : "FAIL: ") << check.message << "\n";
    if (check.ok)
        out << "partial Hadamard matrix " << c.size() + 3 << " x " << 4 * c.t << "\n";
    return check.ok ? kExitOk : kExitVerifyFailed;
}

struct NormalizeOptions {
    std::string path;
    std::string out;
    bool clique = false;
};

void emit(const std::string& target, const std::string& content, std::ostream& out)
{
    if (target.empty())
        out << content;
    else
        write_file(target, content);
}

int cmd_normalize(const NormalizeOptions& o, std::ostream& out)
{
    const NormalizedMatrix n = normalize(ingest_sign_matrix(read_file(o.path)));
    emit(o.out, o.clique ? format_clique(matrix_to_clique(n)) : n.matrix().to_text(), out);
    return kExitOk;
}

struct PaleyOptions {
    int t = 0;
    bool matrix = false;
    std::string out;
};

int cmd_paley(const PaleyOptions& o, std::ostream& out)
{
    const NormalizedMatrix n = normalize(paley_partial_hadamard(o.t));
    emit(o.out, o.matrix ? n.matrix().to_text() : format_clique(matrix_to_clique(n)), out);
    return kExitOk;
}

struct ExtendOptions {
    std::string path;
    std::string algorithm = "fast";
    std::uint64_t rng_seed = 0;
    std::uint64_t candidate_cap = kDefaultCandidateCap;
    std::string out;
};

int cmd_extend(ExtendOptions o, std::ostream& out, std::ostream& err)
{
    if (const auto env = seed_from_env())
        o.rng_seed = *env;
    const Clique input = load_clique(o.path);
    if (const auto check = oracle::verify_clique(input); !check.ok) {
        err << "error: " << o.path << ": " << check.message << "\n";
        return kExitVerifyFailed;
    }
    Clique result;
    if (o.algorithm == "exact") {
        Rng rng(o.rng_seed);
        ExtendResult r = extend_exact(input, rng, o.candidate_cap);
        if (r.overflow)
            err << "warning: candidate set exceeds the cap of " << o.candidate_cap << "\n";
        result = std::move(r.clique);
    } else {
        result = run_fast(input, FastConfig{.t = input.t, .rng_seed = o.rng_seed});
    }
    if (result.size() == input.size())
        err << "warning: no extension found\n";
    else
        err << "extended from " << input.size() << " to " << result.size() << " members\n";
    emit(o.out, format_clique(result), out);
    return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
    std::string suite;
    int reps = 3;
    int t_max = 0; // 0: suite default
    std::uint64_t rng_seed = 0;
};

template <class Table>
const reference::TimedRun* find_reference(const Table& table, int t)
{
    for (const auto& row : table)
        if (row.t == t)
            return &row;
    return nullptr;
}

int bench_census(const BenchOptions& o, std::ostream& out)
{
    const int t_max = o.t_max == 0 ? 7 : o.t_max;
    bool all_equal = true;
    out << std::setw(3) << "t" << std::setw(12) << "vertices" << std::setw(16) << "edges" << std::setw(12) << "median ms"
        << "  published\n";
    for (int t = 1; t <= t_max; ++t) {
        std::vector<double> ms;
        BigInt vertices, edges;
        for (int r = 0; r < o.reps; ++r) {
            const auto start = SteadyClock::now();
            vertices = vertex_count(t);
            edges = edge_count(t);
            ms.push_back(seconds_since(start) * 1000.0);
        }
        std::string status = "-";
        for (const auto& row : reference::kCensus) {
            if (row.t != t)
                continue;
            const bool equal = vertices == row.vertices && edges == row.edges;
            all_equal = all_equal && equal;
            status = equal ? "equal" : "MISMATCH";
        }
        out << std::setw(3) << t << std::setw(12) << vertices.str() << std::setw(16) << edges.str() << std::setw(12)
            << fixed(median(ms), 3) << "  " << status << "\n";
    }
    out << (all_equal ? "census matches the published values\n" : "census differs from the published values\n");
    return all_equal ? kExitOk : kExitVerifyFailed;
}

template <class RunFn, class Table>
int bench_search(const BenchOptions& o, int t_min, int t_default, const Table& table, RunFn&& run, std::ostream& out)
{
    const int t_max = o.t_max == 0 ? t_default : o.t_max;
    out << std::setw(3) << "t" << std::setw(12) << "median s" << std::setw(13) << "median size" << std::setw(10) << "best"
        << "  published time / size (informational)\n";
    for (int t = t_min; t <= t_max; ++t) {
        std::vector<double> secs, sizes;
        std::size_t best = 0;
        for (int r = 0; r < o.reps; ++r) {
            const auto start = SteadyClock::now();
            const std::size_t size = run(t, o.rng_seed + static_cast<std::uint64_t>(r));
            secs.push_back(seconds_since(start));
            sizes.push_back(static_cast<double>(size));
            best = std::max(best, size);
        }
        const auto* ref = find_reference(table, t);
        out << std::setw(3) << t << std::setw(12) << fixed(median(secs), 3) << std::setw(13) << plain(median(sizes))
            << std::setw(10) << best << "  " << (ref ? std::string(ref->time) + " / " + std::string(ref->size) : "-") << "\n";
    }
    out << "published times were measured on much older hardware and are not comparable\n";
    return kExitOk;
}

int cmd_bench(const BenchOptions& o, std::ostream& out)
{
    if (o.suite == "census")
        return bench_census(o, out);
    if (o.suite == "exact")
        return bench_search(o, 2, 5, reference::kExact,
                            [](int t, std::uint64_t seed) {
                                Rng rng(seed);
                                return extend_exact({t, {}}, rng).clique.size();
                            },
                            out);
    if (o.suite == "ga")
        return bench_search(o, 2, 4, reference::kGenetic,
                            [](int t, std::uint64_t seed) {
                                GaConfig cfg;
                                cfg.t = t;
                                cfg.rng_seed = seed;
                                return run_ga(cfg).best_size();
                            },
                            out);
    return bench_search(o, 2, 5, reference::kFast,
                        [](int t, std::uint64_t seed) {
                            return run_fast({t, {}}, FastConfig{.t = t, .rng_seed = seed}).size();
                        },
                        out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cliques of the Hadamard graph G_t and the partial Hadamard matrices they encode.", "hadclique"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    StatsOptions stats_o;
    auto* stats = app.add_subcommand("stats", "Vertex and edge census of G_t");
    stats->add_option("t", stats_o.t, "Graph parameter (vectors of length 4t)")->required()->check(CLI::Range(1, 8));
    stats->add_flag("--json", stats_o.json, "Print JSON instead of a table");

    SearchOptions search_o;
    auto* search = app.add_subcommand("search", "Grow cliques with the exact, genetic or fast search");
    search->add_option("algorithm", search_o.algorithm, "exact, ga or fast")
        ->required()
        ->check(CLI::IsMember({"exact", "ga", "fast"}));
    search->add_option("--t", search_o.t, "Graph parameter")->required()->check(CLI::Range(1, kMaxT));
    search->add_option("--essays", search_o.essays, "Independent runs (default 10 for exact, 1 otherwise)")
        ->check(CLI::PositiveNumber);
    search->add_option("--rng-seed", search_o.rng_seed, "Base seed; essay i uses seed + i");
    search->add_option("--time-limit", search_o.time_limit, "Seconds; essays not started by then are skipped")
        ->check(CLI::NonNegativeNumber);
    search->add_option("--population", search_o.population, "GA population size")->check(CLI::Range(2, 100000));
    search->add_option("--generations", search_o.generations, "GA generations")->check(CLI::NonNegativeNumber);
    search->add_option("--pm", search_o.p_m, "GA per-member mutation probability")->check(CLI::Range(0.0, 1.0));
    search->add_option("--pb", search_o.p_b, "GA tournament probability for the fitter candidate")->check(CLI::Range(0.5, 1.0));
    search->add_option("--candidate-cap", search_o.candidate_cap, "Largest candidate set the exact search materializes");
    search->add_option("--attempts", search_o.attempts, "Fast: construction attempts per vector")->check(CLI::PositiveNumber);
    search->add_option("--stall-limit", search_o.stall_limit, "Fast: consecutive failures ending a phase (default t)")
        ->check(CLI::NonNegativeNumber);
    search->add_option("--seed-file", search_o.seed_file, "Starting clique (clique, matrix or report file)");
    search->add_option("--out", search_o.out, "Report path (default hadclique-<algorithm>-t<t>.json)");
    search->add_option("--jobs", search_o.jobs, "Worker threads for essays")->check(CLI::Range(1U, 256U));

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "Check a clique, sign-matrix or report file");
    verify->add_option("path", verify_path, "File to check")->required();

    NormalizeOptions normalize_o;
    auto* normalize_cmd = app.add_subcommand("normalize", "Normalize a (partial) Hadamard matrix");
    normalize_cmd->add_option("path", normalize_o.path, "Sign-matrix file")->required();
    normalize_cmd->add_option("--out", normalize_o.out, "Output path (default stdout)");
    normalize_cmd->add_flag("--clique", normalize_o.clique, "Emit rows 4.. as a clique file");

    PaleyOptions paley_o;
    auto* paley = app.add_subcommand("paley", "Paley-type seed clique for G_t");
    paley->add_option("t", paley_o.t, "Graph parameter")->required()->check(CLI::Range(1, kMaxT));
    paley->add_flag("--matrix", paley_o.matrix, "Emit the normalized partial Hadamard matrix");
    paley->add_option("--out", paley_o.out, "Output path (default stdout)");

    ExtendOptions extend_o;
    auto* extend = app.add_subcommand("extend", "Extend a clique with the exact or fast search");
    extend->add_option("path", extend_o.path, "Clique, matrix or report file")->required();
    extend->add_option("--algorithm", extend_o.algorithm, "exact or fast")->check(CLI::IsMember({"exact", "fast"}));
    extend->add_option("--rng-seed", extend_o.rng_seed, "Seed");
    extend->add_option("--candidate-cap", extend_o.candidate_cap, "Exact: largest candidate set");
    extend->add_option("--out", extend_o.out, "Output path (default stdout)");

    BenchOptions bench_o;
    auto* bench = app.add_subcommand("bench", "Timing runs next to the published figures");
    bench->add_option("suite", bench_o.suite, "census, exact, ga or fast")
        ->required()
        ->check(CLI::IsMember({"census", "exact", "ga", "fast"}));
    bench->add_option("--reps", bench_o.reps, "Repetitions per t")->check(CLI::PositiveNumber);
    bench->add_option("--t-max", bench_o.t_max, "Largest t")->check(CLI::Range(1, 10));
    bench->add_option("--rng-seed", bench_o.rng_seed, "Base seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*stats)
            return cmd_stats(stats_o, out);
        if (*search)
            return cmd_search(search_o, out, err);
        if (*verify)
            return cmd_verify(verify_path, out);
        if (*normalize_cmd)
            return cmd_normalize(normalize_o, out);
        if (*paley)
            return cmd_paley(paley_o, out);
        if (*extend)
            return cmd_extend(extend_o, out, err);
        if (*bench)
            return cmd_bench(bench_o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::Range:
        case ErrorKind::MismatchedT:
        case ErrorKind::KOutOfRange: return kExitUsage;
        case ErrorKind::NoDecomposition: return kExitNothingProduced;
        default: return kExitVerifyFailed;
        }
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed report: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace hadclique::cli
