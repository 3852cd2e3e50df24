#include "hadclique/fast_search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hadclique/distributions.hpp"
#include "hadclique/error.hpp"
#include "hadclique/oracle.hpp"

namespace hadclique {

FastConfig FastConfig::resolved() const
{
    require_valid_t(t);
    if (attempts_per_vector < 1 || inner_population < 0 || inner_generations < 0 || quarter_backtracks < 0 || stall_limit < 0)
        throw Error(ErrorKind::Range, "fast search limits must be positive");
    FastConfig out = *this;
    if (out.inner_population == 0)
        out.inner_population = 4 * t;
    if (out.inner_generations == 0)
        out.inner_generations = 4 * t;
    if (out.quarter_backtracks == 0)
        out.quarter_backtracks = t;
    if (out.stall_limit == 0)
        out.stall_limit = t;
    out.inner_population = std::max(out.inner_population, 2);
    return out;
}

std::map<int, int> QuarterConstraint::appearances() const
{
    std::map<int, int> counts;
    for (const auto& sol : open_solutions)
        for (int a : sol)
            ++counts[a];
    return counts;
}

std::optional<std::pair<int, int>> QuarterConstraint::interval() const
{
    const auto counts = appearances();
    if (counts.empty())
        return std::nullopt;
    return std::pair{counts.begin()->first, counts.rbegin()->first};
}

void QuarterConstraint::commit(int alpha)
{
    std::vector<std::vector<int>> kept;
    for (auto& sol : open_solutions) {
        const auto it = std::find(sol.begin(), sol.end(), alpha);
        if (it == sol.end())
            continue;
        sol.erase(it);
        kept.push_back(std::move(sol));
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    open_solutions = std::move(kept);
}

namespace {

int quarter_distance(QuarterMask mask, int t, std::span<const QuarterMask> member_quarters, std::span<const int> targets)
{
    int distance = 0;
    for (std::size_t u = 0; u < member_quarters.size(); ++u) {
        const int coincidences = t - std::popcount(static_cast<QuarterMask>(mask ^ member_quarters[u]));
        distance += std::abs(coincidences - targets[u]);
    }
    return distance;
}

// Moves one random one-bit of `mask` onto a random zero-bit.
QuarterMask balanced_swap(QuarterMask mask, int t, Rng& rng)
{
    const int ones = std::popcount(mask);
    if (ones == 0 || ones == t)
        return mask;
    std::uniform_int_distribution<int> pick_one(0, ones - 1);
    std::uniform_int_distribution<int> pick_zero(0, t - ones - 1);
    int one_rank = pick_one(rng);
    int zero_rank = pick_zero(rng);
    QuarterMask out = mask;
    for (int b = 0; b < t; ++b) {
        const QuarterMask bit = QuarterMask{1} << b;
        if (mask & bit) {
            if (one_rank-- == 0)
                out &= ~bit;
        } else if (zero_rank-- == 0) {
            out |= bit;
        }
    }
    return out;
}

// Clears or sets random bits until the mask carries exactly `ones` one-bits.
QuarterMask rebalance(QuarterMask mask, int t, int ones, Rng& rng)
{
    std::uniform_int_distribution<int> pos(0, t - 1);
    while (std::popcount(mask) > ones)
        mask &= ~(QuarterMask{1} << pos(rng));
    while (std::popcount(mask) < ones)
        mask |= QuarterMask{1} << pos(rng);
    return mask;
}

} // namespace

std::optional<QuarterMask> search_quarter(int t, int ones, std::span<const QuarterMask> member_quarters,
                                          std::span<const int> targets, int population, int generations, Rng& rng)
{
    if (ones == 0 || ones == t) {
        const QuarterMask only = ones == 0 ? 0 : quarter_mask(t);
        if (quarter_distance(only, t, member_quarters, targets) == 0)
            return only;
        return std::nullopt;
    }

    struct Individual {
        QuarterMask mask;
        int distance;
    };
    auto make = [&](QuarterMask m) { return Individual{m, quarter_distance(m, t, member_quarters, targets)}; };

    std::vector<Individual> pop;
    pop.reserve(static_cast<std::size_t>(population));
    for (int i = 0; i < population; ++i)
        pop.push_back(make(random_quarter(t, ones, rng)));

    std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
    std::uniform_int_distribution<int> cut_point(1, t - 1);
    std::bernoulli_distribution mutate(0.5);
    auto tournament = [&]() -> const Individual& {
        const Individual& a = pop[pick(rng)];
        const Individual& b = pop[pick(rng)];
        return a.distance <= b.distance ? a : b;
    };

    for (int g = 0;; ++g) {
        const auto best = std::min_element(pop.begin(), pop.end(),
                                           [](const Individual& x, const Individual& y) { return x.distance < y.distance; });
        if (best->distance == 0)
            return best->mask;
        if (g >= generations)
            return std::nullopt;

        std::vector<Individual> next;
        next.reserve(pop.size());
        next.push_back(*best);
        while (next.size() < pop.size()) {
            const QuarterMask a = tournament().mask;
            const QuarterMask b = tournament().mask;
            const QuarterMask high = quarter_mask(t) & ~quarter_mask(cut_point(rng));
            QuarterMask child = rebalance((a & high) | (b & ~high & quarter_mask(t)), t, ones, rng);
            if (mutate(rng))
                child = balanced_swap(child, t, rng);
            next.push_back(make(child));
        }
        pop = std::move(next);
    }
}

namespace {

int weighted_pick(const std::map<int, int>& counts, Rng& rng)
{
    int total = 0;
    for (const auto& [value, n] : counts)
        total += n;
    std::uniform_int_distribution<int> pick(0, total - 1);
    int r = pick(rng);
    for (const auto& [value, n] : counts) {
        if (r < n)
            return value;
        r -= n;
    }
    return counts.rbegin()->first;
}

} // namespace

std::optional<Vertex> build_by_quarters(const Clique& c, int k, const FastConfig& config, Rng& rng, const QuarterObserver& observer)
{
    const FastConfig cfg = config.resolved();
    const int t = c.t;
    const int s = k;
    if (s < 0 || s > t)
        throw Error(ErrorKind::KOutOfRange, "k=" + std::to_string(k) + " for t=" + std::to_string(t));
    const std::array<int, 4> ones{s, t - s, t - s, s};

    std::vector<QuarterConstraint> base;
    base.reserve(c.members.size());
    for (Code m : c.members) {
        const Vertex u = decode(m, t);
        QuarterConstraint qc{m, u.k(), {}};
        for (const auto& sol : solve_distributions(t, u.k(), s))
            qc.open_solutions.emplace_back(sol.alphas.begin(), sol.alphas.end());
        if (qc.open_solutions.empty())
            return std::nullopt; // no s-vector is orthogonal to this member
        base.push_back(std::move(qc));
    }

    std::vector<QuarterMask> member_quarters(base.size());
    std::vector<int> targets(base.size());

    for (int attempt = 0; attempt < cfg.attempts_per_vector; ++attempt) {
        std::array<int, 4> order{0, 1, 2, 3};
        std::shuffle(order.begin(), order.end(), rng);

        std::vector<std::vector<QuarterConstraint>> history;
        std::vector<QuarterConstraint> state = base;
        std::array<QuarterMask, 4> masks{};
        int step = 0;
        int failures = 0;

        while (step < 4) {
            const int q = order[static_cast<std::size_t>(step)];
            for (std::size_t u = 0; u < state.size(); ++u) {
                member_quarters[u] = quarter_of(state[u].member, t, q);
                targets[u] = weighted_pick(state[u].appearances(), rng);
            }
            const auto mask = search_quarter(t, ones[static_cast<std::size_t>(q)], member_quarters, targets,
                                             cfg.inner_population, cfg.inner_generations, rng);
            if (mask) {
                history.push_back(state);
                for (std::size_t u = 0; u < state.size(); ++u)
                    state[u].commit(targets[u]);
                masks[static_cast<std::size_t>(q)] = *mask;
                if (observer)
                    observer(q, *mask, state);
                ++step;
                continue;
            }
            if (++failures > cfg.quarter_backtracks)
                break;
            if (step > 0) {
                state = std::move(history.back());
                history.pop_back();
                --step;
            }
        }
        if (step < 4)
            continue;

        const Code w = join_quarters(masks, t);
        for (Code m : c.members) {
            if (!codes_orthogonal(w, m, t))
                throw std::logic_error("quarter construction produced " + std::to_string(w) + ", not orthogonal to member " +
                                       std::to_string(m));
        }
        return decode(w, t);
    }
    return std::nullopt;
}

Clique run_fast(const Clique& seed, const FastConfig& cfg, Rng& rng, const QuarterObserver& observer)
{
    const FastConfig resolved = cfg.resolved();
    if (seed.t != resolved.t)
        throw Error(ErrorKind::InvalidSeed, "seed clique is for t=" + std::to_string(seed.t) + ", search for t=" + std::to_string(resolved.t));
    if (const auto report = oracle::verify_clique(seed); !report.ok)
        throw Error(ErrorKind::InvalidSeed, report.message);

    Clique out = seed;
    const int t = resolved.t;
    for (int k = t / 2; k >= std::max(t / 2 - 1, 0); --k) {
        int stalls = 0;
        while (stalls < resolved.stall_limit) {
            if (auto v = build_by_quarters(out, k, resolved, rng, observer)) {
                out.members.push_back(v->code());
                stalls = 0;
            } else {
                ++stalls;
            }
        }
    }
    return out;
}

Clique run_fast(const Clique& seed, const FastConfig& cfg)
{
    Rng rng(cfg.rng_seed);
    return run_fast(seed, cfg, rng);
}

} // namespace hadclique
