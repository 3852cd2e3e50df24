#include "hadclique/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "hadclique/error.hpp"

namespace hadclique {

std::uint64_t GeneratorSet::size() const noexcept
{
    std::uint64_t n = 1;
    for (const auto& pool : quarters)
        n *= pool.size();
    return n;
}

Code GeneratorSet::juxtapose(const std::array<std::size_t, 4>& rows) const noexcept
{
    return join_quarters({quarters[0][rows[0]], quarters[1][rows[1]], quarters[2][rows[2]], quarters[3][rows[3]]}, t);
}

std::vector<QuarterMask> quarter_pool(QuarterMask reference, int t, int ones, int alpha)
{
    std::vector<QuarterMask> pool;
    if (ones < 0 || ones > t)
        return pool;
    if (ones == 0) {
        if (t - std::popcount(reference) == alpha)
            pool.push_back(0);
        return pool;
    }
    // Gosper's hack over all t-bit masks of the given weight.
    const QuarterMask limit = quarter_mask(t);
    QuarterMask m = quarter_mask(ones);
    while (true) {
        if (t - std::popcount(static_cast<QuarterMask>(m ^ reference)) == alpha)
            pool.push_back(m);
        const QuarterMask low = m & (~m + 1);
        const std::uint64_t ripple = std::uint64_t{m} + low;
        if (ripple > limit)
            break;
        const auto r = static_cast<QuarterMask>(ripple);
        m = (((r ^ m) >> 2) / low) | r;
    }
    return pool;
}

GeneratorSet generator_set(const Vertex& v, int s, const CoincidenceTuple& ordered)
{
    const int t = v.t();
    const int k = v.k();
    if (s < 0 || s > t)
        throw Error(ErrorKind::KOutOfRange, "s=" + std::to_string(s) + " for t=" + std::to_string(t));
    const int bottom = std::abs(t - k - s);
    const int top = t - std::abs(k - s);

    GeneratorSet set;
    set.t = t;
    set.s = s;
    set.tuple = ordered;
    const std::array<int, 4> weights{s, t - s, t - s, s};
    for (int q = 0; q < 4; ++q) {
        const int alpha = ordered.alphas[static_cast<std::size_t>(q)];
        if (alpha < bottom || alpha > top || (alpha - bottom) % 2 != 0)
            throw Error(ErrorKind::InfeasibleQuarter,
                        "quarter " + std::to_string(q + 1) + " demands " + std::to_string(alpha) + " coincidences; feasible are " +
                            std::to_string(bottom) + ".." + std::to_string(top) + " in steps of 2 (k=" + std::to_string(k) +
                            ", s=" + std::to_string(s) + ")");
        set.quarters[static_cast<std::size_t>(q)] = quarter_pool(v.quarter(q), t, weights[static_cast<std::size_t>(q)], alpha);
    }
    return set;
}

namespace {

Vertex folded(const Vertex& v)
{
    return v.k() <= v.t() / 2 ? v : complement(v);
}

// t/2-vectors are their own complement class; every other s <= t/2 is mirrored.
bool mirrored(int t, int s) { return !(t % 2 == 0 && s == t / 2); }

} // namespace

std::vector<GeneratorSet> generator_sets(const Vertex& v)
{
    const Vertex ref = folded(v);
    const int t = ref.t();
    std::vector<GeneratorSet> sets;
    for (int s = 0; s <= t / 2; ++s) {
        for (const auto& distribution : solve_distributions(t, ref.k(), s)) {
            for (const auto& ordered : distinct_orderings(distribution))
                sets.push_back(generator_set(ref, s, ordered));
        }
    }
    return sets;
}

std::vector<Code> enumerate_adjacency(const Vertex& v)
{
    const int t = v.t();
    const Code full = word_mask(t);
    std::vector<Code> adj;
    for (const auto& set : generator_sets(v)) {
        const bool both = mirrored(t, set.s);
        set.for_each([&](Code w) {
            adj.push_back(w);
            if (both)
                adj.push_back(~w & full);
        });
    }
    std::sort(adj.begin(), adj.end());
    return adj;
}

NeighborSampler::NeighborSampler(const Vertex& v) : t_(v.t())
{
    for (auto& set : generator_sets(v)) {
        const bool both = mirrored(t_, set.s);
        const std::uint64_t weight = set.size() * (both ? 2 : 1);
        if (weight == 0)
            continue;
        total_ += weight;
        entries_.push_back({std::move(set), both, total_});
    }
    if (total_ == 0)
        throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v.code()) + " (k=" + std::to_string(v.k()) +
                                                   ") has no neighbors in G_" + std::to_string(t_));
}

Vertex NeighborSampler::operator()(Rng& rng) const
{
    std::uniform_int_distribution<std::uint64_t> pick(0, total_ - 1);
    const std::uint64_t r = pick(rng);
    const auto it = std::upper_bound(entries_.begin(), entries_.end(), r,
                                     [](std::uint64_t value, const Entry& e) { return value < e.cumulative; });
    const Entry& entry = *it;

    std::array<std::size_t, 4> rows{};
    for (std::size_t q = 0; q < 4; ++q) {
        std::uniform_int_distribution<std::size_t> row(0, entry.set.quarters[q].size() - 1);
        rows[q] = row(rng);
    }
    Code w = entry.set.juxtapose(rows);
    if (entry.with_complement && std::bernoulli_distribution(0.5)(rng))
        w = ~w & word_mask(t_);
    return decode(w, t_);
}

Vertex sample_neighbor(const Vertex& v, Rng& rng)
{
    return NeighborSampler(v)(rng);
}

} // namespace hadclique
