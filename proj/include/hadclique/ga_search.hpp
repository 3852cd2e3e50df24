#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hadclique/clique.hpp"
#include "hadclique/exact_search.hpp"
#include "hadclique/report.hpp"

namespace hadclique {

struct Chromosome {
    Clique clique;

    std::size_t fitness() const noexcept { return clique.size(); }
};

struct GaConfig {
    int t = 0;
    int population_size = 5;
    int max_generations = 20;
    double p_m = 0.1; // per-member resampling probability
    double p_b = 0.8; // probability the fitter tournament candidate wins
    std::uint64_t rng_seed = 0;
    std::uint64_t candidate_cap = kDefaultCandidateCap;
    /// Extended and placed first in the initial population when non-empty.
    Clique seed;
    /// Stop evolving after this many seconds; 0 disables.
    double time_limit_seconds = 0.0;
    /// Observes the population after initialization (generation 0) and after every generation.
    std::function<void(int generation, std::span<const Chromosome> population)> on_generation;
};

/// Throws Error(Range) on an invalid configuration.
void validate(const GaConfig& cfg);

/// Index of the winner of a binary tournament between two random members.
std::size_t binary_tournament(std::span<const Chromosome> population, double p_b, Rng& rng);

/// Slot-wise fitness-weighted crossover over the member lists padded to the
/// longer parent: slot i comes from `a` with probability
/// fitness(a) / (fitness(a) + fitness(b)), otherwise from `b`; a slot past the
/// end of the chosen parent contributes nothing. The result may not be a
/// clique. Throws Error(BothEmpty).
std::vector<Code> crossover(const Chromosome& a, const Chromosome& b, Rng& rng);

/// Random-member repair: pick a surviving member; with probability 1/2 drop
/// it, otherwise drop every member not orthogonal to it. Repeats until the
/// survivors are pairwise orthogonal (duplicates included).
Clique repair(int t, std::vector<Code> members, Rng& rng);

/// Each member independently replaced, with probability p_m, by a uniform
/// vertex of G_t. The result may not be a clique.
std::vector<Code> mutate(const Clique& c, double p_m, Rng& rng);

/// Steady-state evolution with exact extension; one essay whose record
/// carries per-generation statistics and the first generation holding the
/// final best.
SearchReport run_ga(const GaConfig& cfg);

} // namespace hadclique
