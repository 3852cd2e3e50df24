#pragma once

#include <array>
#include <cstdint>
#include <string_view>

// Published figures shown next to bench measurements. Census values are
// checked; times came from much older hardware and are only displayed.
namespace hadclique::cli::reference {

struct CensusTotals {
    int t;
    std::uint64_t vertices;
    std::uint64_t edges;
};

inline constexpr std::array<CensusTotals, 7> kCensus{{
    {1, 2, 0},
    {2, 18, 80},
    {3, 164, 5184},
    {4, 1810, 587088},
    {5, 21252, 73440000},
    {6, 263844, 10521080000ULL},
    {7, 3395016, 1629606720000ULL},
}};

struct TimedRun {
    int t;
    std::string_view time; // as printed
    std::string_view size; // average or reported size, as printed
};

// Exact greedy search: average time per essay and average size.
inline constexpr std::array<TimedRun, 8> kExact{{
    {2, "0.0232s", "5"},
    {3, "0.039s", "9"},
    {4, "0.368s", "13"},
    {5, "0.369s", "11"},
    {6, "4.128s", "13.8"},
    {7, "12.19s", "12.8"},
    {8, "1m39s", "13.75"},
    {9, "13m46s", "14.25"},
}};

// Genetic algorithm: time per run and best size.
inline constexpr std::array<TimedRun, 8> kGenetic{{
    {2, "0.171s", "5"},
    {3, "0.359s", "9"},
    {4, "1.872s", "13"},
    {5, "3.931s", "17"},
    {6, "19.36s", "21"},
    {7, "4m10s", "17"},
    {8, "24m37s", "21"},
    {9, "4h 36s", "18"},
}};

// Fast heuristic from the empty clique: average time per essay and average size.
inline constexpr std::array<TimedRun, 8> kFast{{
    {2, "1.4s", "5"},
    {3, "0.565s", "9"},
    {4, "19.603s", "11"},
    {5, "27.369s", "9"},
    {6, "51.38s", "7.6"},
    {7, "1m23s", "8"},
    {8, "2m11s", "7.6"},
    {9, "3m02s", "7.8"},
}};

} // namespace hadclique::cli::reference
