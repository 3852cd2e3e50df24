#pragma once

#include <cstdint>
#include <vector>

namespace hadclique::testdata {

// Census of G_t for t = 1..7: vertices per k, degree per k, totals.
struct CensusRow {
    int t;
    std::vector<std::uint64_t> vertices;
    std::vector<std::uint64_t> degrees;
    std::uint64_t total_vertices;
    std::uint64_t total_edges;
};

inline const std::vector<CensusRow> kCensus = {
    {1, {1, 1}, {0, 0}, 2, 0},
    {2, {1, 16, 1}, {16, 8, 16}, 18, 80},
    {3, {1, 81, 81, 1}, {0, 64, 64, 0}, 164, 5184},
    {4, {1, 256, 1296, 256, 1}, {1296, 648, 648, 648, 1296}, 1810, 587088},
    {5, {1, 625, 10000, 10000, 625, 1}, {0, 6912, 6912, 6912, 6912, 0}, 21252, 73440000},
    {6, {1, 1296, 50625, 160000, 50625, 1296, 1}, {160000, 80000, 79808, 79712, 79808, 80000, 160000}, 263844, 10521080000ULL},
    {7,
     {1, 2401, 194481, 1500625, 1500625, 194481, 2401, 1},
     {0, 960000, 960000, 960000, 960000, 960000, 960000, 0},
     3395016,
     1629606720000ULL},
};

// Number of s-vectors orthogonal to a fixed k-vertex;
// by_k_then_s[k][s] for k, s in [0, floor(t/2)], t = 3..10.
struct OrthogonalTable {
    int t;
    std::vector<std::vector<std::uint64_t>> by_k_then_s;
};

inline const std::vector<OrthogonalTable> kOrthogonalCounts = {
    {3, {{0, 0}, {0, 32}}},
    {4, {{0, 0, 1296}, {0, 81, 486}, {1, 96, 454}}},
    {5, {{0, 0, 0}, {0, 0, 3456}, {0, 216, 3240}}},
    {6, {{0, 0, 0, 160000}, {0, 0, 10000, 60000}, {0, 256, 14688, 49920}, {1, 486, 15795, 47148}}},
    {7, {{0, 0, 0, 0}, {0, 0, 0, 480000}, {0, 0, 40000, 440000}, {0, 768, 57024, 422208}}},
    {8,
     {{0, 0, 0, 0, 24010000},
      {0, 0, 0, 1500625, 9003750},
      {0, 0, 50625, 2352000, 7183750},
      {0, 625, 147000, 2601000, 6483750},
      {1, 1536, 183904, 2655744, 6297030}}},
    {9,
     {{0, 0, 0, 0, 0},
      {0, 0, 0, 0, 76832000},
      {0, 0, 0, 7203000, 69629000},
      {0, 0, 243000, 11210000, 65367000},
      {0, 2000, 464000, 12912000, 63430000}}},
    {10,
     {{0, 0, 0, 0, 0, 4032758016ULL},
      {0, 0, 0, 0, 252047376, 1512284256ULL},
      {0, 0, 0, 9834496, 407209600, 1180754176ULL},
      {0, 0, 194481, 32773650, 453248775, 1041640236ULL},
      {0, 1296, 858600, 48326400, 468312600, 978746976},
      {1, 3750, 1200625, 53560000, 472003750, 960098756}}},
};

} // namespace hadclique::testdata
