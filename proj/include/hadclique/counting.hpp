#pragma once

#include <map>
#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace hadclique {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int r);

/// |G_t| = sum_k C(t,k)^4.
BigInt vertex_count(int t);

/// Number of k-vertices, C(t,k)^4.
BigInt vertices_with_k(int t, int k);

/// Closed interval of s values for which s-vectors orthogonal to a k-vertex
/// exist, k <= floor(t/2). Returns nullopt for an empty interval.
/// Throws Error(KOutOfRange).
std::optional<std::pair<int, int>> s_range(int t, int k);

/// Number of s-vectors orthogonal to a fixed k-vertex: the sum over ordered
/// per-quarter coincidence counts (i1..i4), sum = 2s + 2k - t, of
/// prod_q C(k, i_q) C(t-k, s-i_q). Valid for any 0 <= k, s <= t.
BigInt count_orthogonal(int t, int k, int s);

/// Degree of a k-vertex in G_t, folded through negation symmetry onto
/// k' = min(k, t-k) and s <= floor(t/2).
BigInt degree(int t, int k);

/// Half the degree sum over all vertices.
BigInt edge_count(int t);

struct AdjacencyProfile {
    int t = 0;
    int k = 0;
    std::map<int, BigInt> counts; // s -> count, s in [0, floor(t/2)]
};

AdjacencyProfile adjacency_profile(int t, int k);

} // namespace hadclique
