#include "hadclique/counting.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>
#include <vector>

#include "hadclique/error.hpp"
#include "hadclique/vertex.hpp"

namespace hadclique {

BigInt binomial(int n, int r)
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    BigInt result = 1;
    for (int i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

BigInt vertices_with_k(int t, int k)
{
    const BigInt c = binomial(t, k);
    return c * c * c * c;
}

BigInt vertex_count(int t)
{
    require_valid_t(t);
    BigInt total = 0;
    for (int k = 0; k <= t; ++k)
        total += vertices_with_k(t, k);
    return total;
}

namespace {

void require_k(int t, int k, int upper)
{
    if (k < 0 || k > upper)
        throw Error(ErrorKind::KOutOfRange,
                    "k=" + std::to_string(k) + " outside [0, " + std::to_string(upper) + "] for t=" + std::to_string(t));
}

} // namespace

std::optional<std::pair<int, int>> s_range(int t, int k)
{
    require_valid_t(t);
    require_k(t, k, t / 2);
    const int lower = std::max(0, (t + 1) / 2 - k);
    const int upper = t / 2;
    if (upper < lower)
        return std::nullopt;
    return std::pair{lower, upper};
}

BigInt count_orthogonal(int t, int k, int s)
{
    require_valid_t(t);
    require_k(t, k, t);
    require_k(t, s, t);

    const int target = 2 * s + 2 * k - t;
    if (target < 0)
        return 0;
    const int lo = std::max(0, s + k - t);
    const int hi = std::min(k, s);

    // per-quarter factor for i coincidences
    std::array<BigInt, kMaxT + 1> factor{};
    for (int i = lo; i <= hi; ++i)
        factor[static_cast<std::size_t>(i)] = binomial(k, i) * binomial(t - k, s - i);

    // ways[j] = weighted number of ordered prefixes with total j
    std::vector<BigInt> ways(static_cast<std::size_t>(target) + 1, 0);
    ways[0] = 1;
    for (int q = 0; q < 4; ++q) {
        std::vector<BigInt> next(ways.size(), 0);
        for (int j = 0; j <= target; ++j) {
            if (ways[static_cast<std::size_t>(j)] == 0)
                continue;
            for (int i = lo; i <= hi && j + i <= target; ++i)
                next[static_cast<std::size_t>(j + i)] += ways[static_cast<std::size_t>(j)] * factor[static_cast<std::size_t>(i)];
        }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(target)];
}

BigInt degree(int t, int k)
{
    require_valid_t(t);
    require_k(t, k, t);
    const int folded = std::min(k, t - k);
    BigInt total = 0;
    if (t % 2 == 1) {
        for (int s = 0; s <= (t - 1) / 2; ++s)
            total += count_orthogonal(t, folded, s);
        return 2 * total;
    }
    for (int s = 0; s < t / 2; ++s)
        total += count_orthogonal(t, folded, s);
    return 2 * total + count_orthogonal(t, folded, t / 2);
}

BigInt edge_count(int t)
{
    require_valid_t(t);
    BigInt sum = 0;
    for (int k = 0; k <= t; ++k)
        sum += vertices_with_k(t, k) * degree(t, k);
    return sum / 2;
}

AdjacencyProfile adjacency_profile(int t, int k)
{
    require_valid_t(t);
    require_k(t, k, t / 2);
    AdjacencyProfile profile{t, k, {}};
    for (int s = 0; s <= t / 2; ++s)
        profile.counts[s] = count_orthogonal(t, k, s);
    return profile;
}

} // namespace hadclique
