#pragma once

#include <array>
#include <compare>
#include <vector>

namespace hadclique {

/// Per-quarter total coincidence counts between a reference vertex and a
/// candidate. Canonical (unordered) tuples are kept sorted ascending; an
/// ordered tuple assigns alphas[q] to quarter q.
struct CoincidenceTuple {
    std::array<int, 4> alphas{};

    int sum() const noexcept { return alphas[0] + alphas[1] + alphas[2] + alphas[3]; }
    CoincidenceTuple sorted() const;

    friend auto operator<=>(const CoincidenceTuple&, const CoincidenceTuple&) = default;
};

/// Feasible per-quarter coincidence values between a k-vertex and an
/// s-vector: |t-k-s|, |t-k-s| + 2, ..., t - |k-s|.
std::vector<int> coincidence_ladder(int t, int k, int s);

/// 4 * bottom <= 2t <= 4 * top of the ladder.
bool distributions_exist(int t, int k, int s);

/// All unordered 4-multisets from the ladder summing to 2t, each sorted
/// ascending, in lexicographic order.
///
/// The outer loop starts at the bottom rung of the ladder. Starting one rung
/// higher (as a published form of this loop reads) would drop (2,2,2,4) for
/// t=5, k=2, s=1.
std::vector<CoincidenceTuple> solve_distributions(int t, int k, int s);

/// Distinct quarter assignments of an unordered tuple, lexicographic.
std::vector<CoincidenceTuple> distinct_orderings(const CoincidenceTuple& tuple);

} // namespace hadclique
