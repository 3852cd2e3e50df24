#include "hadclique/ga_search.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hadclique/error.hpp"
#include "hadclique/essays.hpp"

namespace hadclique {

void validate(const GaConfig& cfg)
{
    require_valid_t(cfg.t);
    if (cfg.t < 2)
        throw Error(ErrorKind::Range, "GA needs t >= 2");
    if (cfg.population_size < 2)
        throw Error(ErrorKind::Range, "population_size must be >= 2");
    if (cfg.max_generations < 0)
        throw Error(ErrorKind::Range, "max_generations must be >= 0");
    if (!(cfg.p_m >= 0.0 && cfg.p_m <= 1.0))
        throw Error(ErrorKind::Range, "p_m must lie in [0, 1]");
    if (!(cfg.p_b >= 0.5 && cfg.p_b <= 1.0))
        throw Error(ErrorKind::Range, "p_b must lie in [0.5, 1]");
    if (!cfg.seed.empty() && cfg.seed.t != cfg.t)
        throw Error(ErrorKind::MismatchedT, "seed clique is for t=" + std::to_string(cfg.seed.t));
}

std::size_t binary_tournament(std::span<const Chromosome> population, double p_b, Rng& rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    const bool a_fitter = population[a].fitness() >= population[b].fitness();
    const bool fitter_wins = std::bernoulli_distribution(p_b)(rng);
    return (a_fitter == fitter_wins) ? a : b;
}

std::vector<Code> crossover(const Chromosome& a, const Chromosome& b, Rng& rng)
{
    if (a.clique.t != b.clique.t)
        throw Error(ErrorKind::MismatchedT, "parents from different graphs");
    const double fa = static_cast<double>(a.fitness());
    const double fb = static_cast<double>(b.fitness());
    if (fa + fb == 0.0)
        throw Error(ErrorKind::BothEmpty, "both parents are empty cliques");

    std::bernoulli_distribution from_a(fa / (fa + fb));
    const std::size_t slots = std::max(a.clique.size(), b.clique.size());
    std::vector<Code> child;
    for (std::size_t i = 0; i < slots; ++i) {
        const auto& parent = from_a(rng) ? a.clique.members : b.clique.members;
        if (i < parent.size())
            child.push_back(parent[i]);
    }
    return child;
}

namespace {

bool pairwise_orthogonal(const std::vector<Code>& members, int t)
{
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!codes_orthogonal(members[i], members[j], t))
                return false;
    return true;
}

} // namespace

Clique repair(int t, std::vector<Code> members, Rng& rng)
{
    for (Code m : members)
        decode(m, t);

    while (!pairwise_orthogonal(members, t)) {
        std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
        const std::size_t u = pick(rng);
        if (std::bernoulli_distribution(0.5)(rng)) {
            members.erase(members.begin() + static_cast<std::ptrdiff_t>(u));
            continue;
        }
        const Code keep = members[u];
        std::vector<Code> survivors;
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (j == u || codes_orthogonal(members[j], keep, t))
                survivors.push_back(members[j]);
        }
        members = std::move(survivors);
    }
    return Clique{t, std::move(members)};
}

std::vector<Code> mutate(const Clique& c, double p_m, Rng& rng)
{
    std::bernoulli_distribution flip(p_m);
    std::vector<Code> out = c.members;
    for (Code& m : out) {
        if (flip(rng))
            m = random_vertex(c.t, rng).code();
    }
    return out;
}

namespace {

bool duplicate_of_any(const Clique& c, const std::vector<Chromosome>& population)
{
    const Clique key = canonical(c);
    return std::any_of(population.begin(), population.end(),
                       [&](const Chromosome& ch) { return canonical(ch.clique).members == key.members; });
}

GenerationStats stats_of(int generation, const std::vector<Chromosome>& population, bool accepted)
{
    GenerationStats s;
    s.generation = generation;
    s.child_accepted = accepted;
    s.best = 0;
    s.worst = population.front().fitness();
    double sum = 0.0;
    for (const auto& ch : population) {
        s.best = std::max(s.best, ch.fitness());
        s.worst = std::min(s.worst, ch.fitness());
        sum += static_cast<double>(ch.fitness());
    }
    s.mean = sum / static_cast<double>(population.size());
    return s;
}

} // namespace

SearchReport run_ga(const GaConfig& cfg)
{
    validate(cfg);
    const auto start = SteadyClock::now();
    const int t = cfg.t;
    Rng rng(cfg.rng_seed);

    auto extend = [&](const Clique& c) { return extend_exact(c, rng, cfg.candidate_cap).clique; };

    std::vector<Chromosome> population;
    if (!cfg.seed.empty())
        population.push_back({extend(cfg.seed)});
    const int max_attempts = 50 * cfg.population_size;
    int attempts = 0;
    while (static_cast<int>(population.size()) < cfg.population_size) {
        if (++attempts > max_attempts)
            throw std::runtime_error("could not build " + std::to_string(cfg.population_size) +
                                     " distinct initial cliques in G_" + std::to_string(t));
        Clique c = extend(Clique{t, {}});
        if (!duplicate_of_any(c, population))
            population.push_back({std::move(c)});
    }

    EssayRecord record;
    record.generations.push_back(stats_of(0, population, true));
    if (cfg.on_generation)
        cfg.on_generation(0, population);

    for (int g = 1; g <= cfg.max_generations; ++g) {
        if (cfg.time_limit_seconds > 0.0 && seconds_since(start) > cfg.time_limit_seconds)
            break;
        const auto& a = population[binary_tournament(population, cfg.p_b, rng)];
        const auto& b = population[binary_tournament(population, cfg.p_b, rng)];
        Clique child = repair(t, crossover(a, b, rng), rng);
        child = repair(t, mutate(child, cfg.p_m, rng), rng);
        child = extend(child);

        bool accepted = false;
        if (!duplicate_of_any(child, population)) {
            const auto worst = std::min_element(population.begin(), population.end(),
                                                [](const Chromosome& x, const Chromosome& y) { return x.fitness() < y.fitness(); });
            *worst = Chromosome{std::move(child)};
            accepted = true;
        }
        record.generations.push_back(stats_of(g, population, accepted));
        if (cfg.on_generation)
            cfg.on_generation(g, population);
    }

    const auto best = std::max_element(population.begin(), population.end(),
                                       [](const Chromosome& x, const Chromosome& y) { return x.fitness() < y.fitness(); });
    record.clique = best->clique;
    for (const auto& gs : record.generations) {
        if (gs.best == best->fitness()) {
            record.best_generation = gs.generation;
            break;
        }
    }
    record.seconds = seconds_since(start);

    SearchReport report;
    report.algorithm = "ga";
    report.t = t;
    std::ostringstream pm, pb;
    pm << cfg.p_m;
    pb << cfg.p_b;
    report.config = {
        {"population_size", std::to_string(cfg.population_size)},
        {"max_generations", std::to_string(cfg.max_generations)},
        {"p_m", pm.str()},
        {"p_b", pb.str()},
        {"rng_seed", std::to_string(cfg.rng_seed)},
        {"candidate_cap", std::to_string(cfg.candidate_cap)},
        {"seed_size", std::to_string(cfg.seed.size())},
    };
    report.essays.push_back(std::move(record));
    return report;
}

} // namespace hadclique
