#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hadclique/distributions.hpp"
#include "hadclique/vertex.hpp"

namespace hadclique {

/// Four quarter pools whose juxtapositions are exactly the s-vectors meeting
/// an ordered coincidence tuple against a reference vertex.
struct GeneratorSet {
    int t = 0;
    int s = 0;
    CoincidenceTuple tuple; // ordered: tuple.alphas[q] belongs to quarter q
    std::array<std::vector<QuarterMask>, 4> quarters;

    std::uint64_t size() const noexcept;
    Code juxtapose(const std::array<std::size_t, 4>& rows) const noexcept;

    template <class Fn>
    void for_each(Fn&& fn) const
    {
        for (QuarterMask a : quarters[0])
            for (QuarterMask b : quarters[1])
                for (QuarterMask c : quarters[2])
                    for (QuarterMask d : quarters[3])
                        fn(join_quarters({a, b, c, d}, t));
    }
};

/// t-bit masks with `ones` one-bits agreeing with `reference` in exactly
/// `alpha` positions, ascending.
std::vector<QuarterMask> quarter_pool(QuarterMask reference, int t, int ones, int alpha);

/// Pools for the s-vectors w with t - |v_q xor w_q| = ordered.alphas[q].
/// Throws Error(InfeasibleQuarter) when a demanded count is off the ladder.
GeneratorSet generator_set(const Vertex& v, int s, const CoincidenceTuple& ordered);

/// Every generator set of v: all s <= floor(t/2), all distributions, all
/// distinct orderings. v is folded onto its complement when k > floor(t/2).
std::vector<GeneratorSet> generator_sets(const Vertex& v);

/// The full neighborhood of v in G_t, ascending: generator-set vectors plus
/// their complements (t/2-vectors are closed under complement and are not
/// doubled).
std::vector<Code> enumerate_adjacency(const Vertex& v);

/// Uniform draws from the neighborhood of v without materializing it.
class NeighborSampler {
public:
    /// Throws Error(IsolatedVertex) when v has no neighbors.
    explicit NeighborSampler(const Vertex& v);

    Vertex operator()(Rng& rng) const;

    std::uint64_t degree() const noexcept { return total_; }

private:
    struct Entry {
        GeneratorSet set;
        bool with_complement;
        std::uint64_t cumulative; // exclusive upper bound of this entry's weight range
    };

    int t_;
    std::vector<Entry> entries_;
    std::uint64_t total_ = 0;
};

Vertex sample_neighbor(const Vertex& v, Rng& rng);

} // namespace hadclique
