#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hadclique/clique.hpp"

namespace hadclique {

struct GenerationStats {
    int generation = 0;
    std::size_t best = 0;
    std::size_t worst = 0;
    double mean = 0.0;
    bool child_accepted = false;
};

/// One independent randomized run.
struct EssayRecord {
    int index = 0;
    Clique clique;
    double seconds = 0.0;
    bool overflow = false;    // candidate set exceeded its cap; clique is partial
    bool extended = true;     // for extension runs: whether anything was added
    int best_generation = -1; // GA only: first generation holding the final best
    std::vector<GenerationStats> generations;
};

struct SearchReport {
    std::string algorithm;
    int t = 0;
    std::vector<std::pair<std::string, std::string>> config; // echo, insertion order
    std::vector<EssayRecord> essays;

    /// Largest clique over essays; ties go to the lowest essay index.
    /// Empty clique when there are no essays.
    const Clique& best() const;
    std::size_t best_size() const { return best().size(); }
    int best_index() const;

    /// PH depth of the best clique (|C| + 3) against floor(4t/3) and 2t.
    int depth() const { return static_cast<int>(best_size()) + 3; }
    int third_threshold() const { return 4 * t / 3; }
    int half_threshold() const { return 2 * t; }

    /// Sorted sizes of non-overflowing essays.
    std::vector<std::size_t> sizes() const;
    double median_size() const;
};

} // namespace hadclique
