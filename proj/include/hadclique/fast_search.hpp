#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hadclique/clique.hpp"
#include "hadclique/vertex.hpp"

namespace hadclique {

struct FastConfig {
    int t = 0;
    std::uint64_t rng_seed = 0;
    int attempts_per_vector = 10;
    // Zero selects the t-dependent default noted alongside.
    int inner_population = 0;   // 4t
    int inner_generations = 0;  // 4t
    int quarter_backtracks = 0; // t
    int stall_limit = 0;        // t

    /// Copy with the t-dependent defaults filled in. Throws Error(Range) on
    /// negative fields or an invalid t.
    FastConfig resolved() const;
};

/// Coincidence bookkeeping of one clique member while a candidate vector is
/// being built: the solutions of the coincidence system that are still
/// reachable, each reduced to the values left for the unbuilt quarters.
struct QuarterConstraint {
    Code member = 0;
    int k = 0;
    std::vector<std::vector<int>> open_solutions; // sorted multisets

    /// value -> number of appearances across open solutions
    std::map<int, int> appearances() const;

    /// Smallest and largest value still usable in the next quarter.
    std::optional<std::pair<int, int>> interval() const;

    /// Keeps the solutions containing `alpha` and removes one occurrence.
    void commit(int alpha);
};

/// Observer for every committed quarter (tests use it to check that no
/// member's interval collapses).
using QuarterObserver = std::function<void(int quarter, QuarterMask mask, std::span<const QuarterConstraint>)>;

/// Small generational search for a t-bit mask with `ones` one-bits whose
/// coincidence count with each member quarter equals its target.
std::optional<QuarterMask> search_quarter(int t, int ones, std::span<const QuarterMask> member_quarters,
                                          std::span<const int> targets, int population, int generations, Rng& rng);

/// Tries to build a k-vertex orthogonal to every member of `c`, one quarter at
/// a time in a random order. Per quarter each member draws a coincidence
/// target weighted by its appearances in that member's open solutions, then
/// search_quarter looks for a mask hitting all targets. An inner failure
/// discards the last built quarter (up to quarter_backtracks times per
/// attempt); the whole construction is attempted attempts_per_vector times.
std::optional<Vertex> build_by_quarters(const Clique& c, int k, const FastConfig& cfg, Rng& rng,
                                        const QuarterObserver& observer = {});

/// Extends `seed` with floor(t/2)-vertices, then floor(t/2)-1 vertices,
/// ending each phase after stall_limit consecutive failures.
/// Throws Error(InvalidSeed).
Clique run_fast(const Clique& seed, const FastConfig& cfg);
Clique run_fast(const Clique& seed, const FastConfig& cfg, Rng& rng, const QuarterObserver& observer = {});

} // namespace hadclique
