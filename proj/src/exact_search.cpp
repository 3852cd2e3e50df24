#include "hadclique/exact_search.hpp"

#include <algorithm>
#include <string>

#include "hadclique/counting.hpp"
#include "hadclique/error.hpp"
#include "hadclique/essays.hpp"
#include "hadclique/generators.hpp"
#include "hadclique/oracle.hpp"

namespace hadclique {

Vertex random_start_vertex(int t, Rng& rng)
{
    require_valid_t(t);
    std::vector<int> classes;
    for (int k = 0; k <= t / 2; ++k) {
        if (degree(t, k) > 0)
            classes.push_back(k);
    }
    if (classes.empty())
        throw Error(ErrorKind::IsolatedVertex, "G_" + std::to_string(t) + " has no edges");
    std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
    return random_k_vertex(t, classes[pick(rng)], rng);
}

ExtendResult extend_exact(const Clique& c, Rng& rng, std::uint64_t candidate_cap, const ExactObserver& observer)
{
    if (const auto report = oracle::verify_clique(c); !report.ok)
        throw Error(ErrorKind::InvalidClique, report.message);

    ExtendResult result{c, false};
    Clique& clique = result.clique;
    if (clique.empty())
        clique.members.push_back(random_start_vertex(c.t, rng).code());

    const int t = clique.t;
    const Vertex anchor = decode(clique.members.front(), t);
    if (degree(t, anchor.k()) > candidate_cap) {
        result.overflow = true;
        return result;
    }

    std::vector<Code> adj = enumerate_adjacency(anchor);
    auto filter_by = [&](Code member) {
        std::erase_if(adj, [&](Code w) { return !codes_orthogonal(w, member, t); });
    };
    for (std::size_t i = 1; i < clique.members.size(); ++i)
        filter_by(clique.members[i]);
    if (observer)
        observer(clique, adj);

    while (!adj.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, adj.size() - 1);
        const Code w = adj[pick(rng)];
        clique.members.push_back(w);
        filter_by(w);
        if (observer)
            observer(clique, adj);
    }
    return result;
}

SearchReport run_exact(const ExactSearchConfig& cfg)
{
    require_valid_t(cfg.t);
    if (cfg.t < 2)
        throw Error(ErrorKind::Range, "exact search needs t >= 2");
    if (cfg.essays < 1)
        throw Error(ErrorKind::Range, "essays must be >= 1");
    if (!cfg.seed.empty() && cfg.seed.t != cfg.t)
        throw Error(ErrorKind::MismatchedT, "seed clique is for t=" + std::to_string(cfg.seed.t));

    Clique initial = cfg.seed;
    initial.t = cfg.t;
    if (initial.empty() && cfg.start_vertex)
        initial.members.push_back(decode(*cfg.start_vertex, cfg.t).code());

    SearchReport report;
    report.algorithm = "exact";
    report.t = cfg.t;
    report.config = {
        {"essays", std::to_string(cfg.essays)},
        {"rng_seed", std::to_string(cfg.rng_seed)},
        {"start_vertex", cfg.start_vertex ? std::to_string(*cfg.start_vertex) : "random"},
        {"candidate_cap", std::to_string(cfg.candidate_cap)},
        {"seed_size", std::to_string(cfg.seed.size())},
    };
    report.essays = run_essays(cfg.essays, cfg.jobs, cfg.time_limit_seconds, [&](int index) {
        const auto start = SteadyClock::now();
        Rng rng(cfg.rng_seed + static_cast<std::uint64_t>(index));
        ExtendResult grown = extend_exact(initial, rng, cfg.candidate_cap);
        EssayRecord record;
        record.clique = std::move(grown.clique);
        record.overflow = grown.overflow;
        record.extended = record.clique.size() > initial.size();
        record.seconds = seconds_since(start);
        return record;
    });
    return report;
}

} // namespace hadclique
