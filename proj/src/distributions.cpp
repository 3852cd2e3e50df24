#include "hadclique/distributions.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "hadclique/error.hpp"
#include "hadclique/vertex.hpp"

namespace hadclique {

CoincidenceTuple CoincidenceTuple::sorted() const
{
    CoincidenceTuple out = *this;
    std::sort(out.alphas.begin(), out.alphas.end());
    return out;
}

namespace {

void require_ks(int t, int k, int s)
{
    require_valid_t(t);
    if (k < 0 || k > t || s < 0 || s > t)
        throw Error(ErrorKind::KOutOfRange,
                    "k=" + std::to_string(k) + ", s=" + std::to_string(s) + " for t=" + std::to_string(t));
}

} // namespace

std::vector<int> coincidence_ladder(int t, int k, int s)
{
    require_ks(t, k, s);
    std::vector<int> ladder;
    for (int a = std::abs(t - k - s); a <= t - std::abs(k - s); a += 2)
        ladder.push_back(a);
    return ladder;
}

bool distributions_exist(int t, int k, int s)
{
    require_ks(t, k, s);
    const int bottom = std::abs(t - k - s);
    const int top = t - std::abs(k - s);
    return 4 * bottom <= 2 * t && 2 * t <= 4 * top;
}

std::vector<CoincidenceTuple> solve_distributions(int t, int k, int s)
{
    require_ks(t, k, s);
    const int bottom = std::abs(t - k - s);
    const int top = t - std::abs(k - s);
    const int total = 2 * t;

    std::vector<CoincidenceTuple> sol;
    if (!distributions_exist(t, k, s))
        return sol;

    // The lower bounds 2t - 3*top, 2t - a1 - 2*top, ... share the ladder's
    // parity, so stepping by 2 from them stays on the ladder.
    for (int a1 = std::max(bottom, total - 3 * top); a1 <= std::min(top, total / 4); a1 += 2) {
        for (int a2 = std::max(a1, total - a1 - 2 * top); a2 <= std::min(top, (total - a1) / 3); a2 += 2) {
            for (int a3 = std::max(a2, total - a1 - a2 - top); a3 <= std::min(top, (total - a1 - a2) / 2); a3 += 2)
                sol.push_back({{a1, a2, a3, total - a1 - a2 - a3}});
        }
    }
    return sol;
}

std::vector<CoincidenceTuple> distinct_orderings(const CoincidenceTuple& tuple)
{
    CoincidenceTuple current = tuple.sorted();
    std::vector<CoincidenceTuple> out;
    do {
        out.push_back(current);
    } while (std::next_permutation(current.alphas.begin(), current.alphas.end()));
    return out;
}

} // namespace hadclique
