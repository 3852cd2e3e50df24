#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hadclique/clique.hpp"
#include "hadclique/sign_matrix.hpp"

// Brute-force ground truth for small t. Membership and orthogonality are
// recomputed here from +/-1 inner products, independently of the bit-pattern
// shortcuts used by the rest of the library.
namespace hadclique::oracle {

inline constexpr int kEnumerateLimit = 6;
inline constexpr int kAdjacencyLimit = 5;

/// +/-1 inner product of two 4t-bit rows in additive notation.
long long inner_product(Code a, Code b, int t);

/// Orthogonal to the three canonical normalized rows (and within 4t bits).
bool in_graph(Code code, int t);

/// Every code in [0, 2^{4t}) lying in G_t, ascending.
/// Throws Error(TooLarge) for t > kEnumerateLimit unless `force`.
std::vector<Code> enumerate_vertices(int t, bool force = false);

/// Every vertex of G_t orthogonal to v, ascending.
/// Throws Error(TooLarge) for t > kAdjacencyLimit unless `force`.
std::vector<Code> brute_adjacency(Code v, int t, bool force = false);

/// Same as brute_adjacency but scanning a precomputed vertex list.
std::vector<Code> brute_adjacency(Code v, int t, const std::vector<Code>& vertices);

struct CliqueReport {
    bool ok = true;
    std::string message;
    std::optional<std::size_t> bad_member;                     // index failing membership
    std::optional<std::pair<std::size_t, std::size_t>> bad_pair; // first non-orthogonal pair
};

CliqueReport verify_clique(const Clique& c);

/// True when no vertex of G_t is orthogonal to every member (t <= kAdjacencyLimit).
bool is_maximal(const Clique& c, bool force = false);

/// The three canonical rows: all +, (+^{2t} -^{2t}), (+^t -^t +^t -^t).
SignMatrix normalized_prefix(int t);

/// Canonical rows followed by the members (bit 1 -> -1).
/// Throws Error(InvalidClique) when verify_clique fails.
SignMatrix clique_to_matrix(const Clique& c);

struct PhReport {
    bool ok = true;
    std::string message;
    std::optional<std::pair<std::size_t, std::size_t>> bad_pair;
};

/// Partial Hadamard check: pairwise orthogonal rows, m <= n, n in {1,2} or 4Z.
PhReport verify_ph(const SignMatrix& m);

} // namespace hadclique::oracle
