#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "hadclique/clique.hpp"
#include "hadclique/report.hpp"
#include "hadclique/vertex.hpp"

namespace hadclique {

inline constexpr std::uint64_t kDefaultCandidateCap = 200'000'000;

struct ExactSearchConfig {
    int t = 0;
    int essays = 10;
    std::uint64_t rng_seed = 0;
    std::optional<Code> start_vertex;
    std::uint64_t candidate_cap = kDefaultCandidateCap;
    /// Starting clique for every essay; empty means start from a fresh vertex.
    Clique seed;
    unsigned jobs = 1;
    /// Essays not started before this many seconds are skipped; 0 disables.
    double time_limit_seconds = 0.0;
};

struct ExtendResult {
    Clique clique;
    bool overflow = false; // the candidate set would exceed the cap; clique is partial
};

/// Called after every growth step with the clique so far and the surviving candidates.
using ExactObserver = std::function<void(const Clique&, std::span<const Code>)>;

/// A start vertex: k uniform over the classes in [0, floor(t/2)] that have
/// neighbors, then a uniform k-vertex.
Vertex random_start_vertex(int t, Rng& rng);

/// Grows `c` to a maximal clique. The candidate set is the neighborhood of
/// the first member, built once from generator sets and then only filtered by
/// orthogonality to each new member. An empty input starts from
/// random_start_vertex. Throws Error(InvalidClique).
ExtendResult extend_exact(const Clique& c, Rng& rng, std::uint64_t candidate_cap = kDefaultCandidateCap,
                          const ExactObserver& observer = {});

/// Independent essays seeded rng_seed + index, merged in essay order.
SearchReport run_exact(const ExactSearchConfig& cfg);

} // namespace hadclique
