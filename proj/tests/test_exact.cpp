#include "doctest.h"

#include <algorithm>

#include "hadclique/counting.hpp"
#include "hadclique/error.hpp"
#include "hadclique/exact_search.hpp"
#include "hadclique/oracle.hpp"
#include "published_cliques.hpp"
#include "test_support.hpp"

using namespace hadclique;
using hadclique::testing::thrown_kind;

TEST_SUITE("exact")
{
    TEST_CASE("small t reaches the Hadamard bound in every essay")
    {
        for (const auto& [t, size] : {std::pair{2, 5u}, std::pair{3, 9u}, std::pair{4, 13u}}) {
            const SearchReport r = run_exact({.t = t, .essays = 10, .rng_seed = 100});
            REQUIRE(r.essays.size() == 10);
            for (const auto& e : r.essays) {
                CHECK(e.clique.size() == size);
                CHECK(oracle::verify_clique(e.clique).ok);
                CHECK(oracle::is_maximal(e.clique));
                CHECK_FALSE(e.overflow);
            }
            CHECK(r.best_size() == size);
            CHECK(r.depth() == static_cast<int>(size) + 3);
        }
    }

    TEST_CASE("essays are reported in index order")
    {
        const SearchReport r = run_exact({.t = 3, .essays = 4, .rng_seed = 1, .jobs = 3});
        REQUIRE(r.essays.size() == 4);
        for (int i = 0; i < 4; ++i)
            CHECK(r.essays[static_cast<std::size_t>(i)].index == i);
    }

    TEST_CASE("determinism")
    {
        const ExactSearchConfig cfg{.t = 5, .essays = 3, .rng_seed = 42};
        const SearchReport a = run_exact(cfg);
        const SearchReport b = run_exact(cfg);
        REQUIRE(a.essays.size() == b.essays.size());
        for (std::size_t i = 0; i < a.essays.size(); ++i)
            CHECK(a.essays[i].clique == b.essays[i].clique);

        ExactSearchConfig threaded = cfg;
        threaded.jobs = 2;
        const SearchReport c = run_exact(threaded);
        for (std::size_t i = 0; i < a.essays.size(); ++i)
            CHECK(a.essays[i].clique == c.essays[i].clique);
    }

    TEST_CASE("candidates stay orthogonal to the clique")
    {
        Rng rng(8);
        int calls = 0;
        const auto r = extend_exact({5, {}}, rng, kDefaultCandidateCap, [&](const Clique& c, std::span<const Code> adj) {
            ++calls;
            for (std::size_t i = 0; i < adj.size(); i += 97)
                for (Code m : c.members)
                    CHECK(oracle::inner_product(adj[i], m, 5) == 0);
        });
        CHECK(calls == static_cast<int>(r.clique.size()));
        CHECK(oracle::verify_clique(r.clique).ok);
    }

    TEST_CASE("extend_exact")
    {
        Rng rng(3);
        const Clique maximal = testdata::kExactSmall[1].clique;
        CHECK(extend_exact(maximal, rng).clique == maximal);

        const Clique partial{3, {maximal.members[0], maximal.members[1], maximal.members[2]}};
        for (int i = 0; i < 20; ++i) {
            const Clique out = extend_exact(partial, rng).clique;
            CHECK(contains_all(out, partial));
            CHECK(out.size() == 9);
            CHECK(oracle::is_maximal(out));
        }

        CHECK(thrown_kind([&] { extend_exact({2, {166, 166}}, rng); }) == ErrorKind::InvalidClique);
    }

    TEST_CASE("extend_exact never shrinks")
    {
        Rng rng(12);
        for (int t = 2; t <= 5; ++t) {
            for (int i = 0; i < 5; ++i) {
                const Clique start = extend_exact({t, {}}, rng).clique;
                const Clique prefix{t, {start.members.begin(), start.members.begin() + static_cast<long>(start.size() / 2)}};
                const Clique out = extend_exact(prefix, rng).clique;
                CHECK(out.size() >= prefix.size());
                CHECK(contains_all(out, prefix));
            }
        }
    }

    TEST_CASE("seeded start vertex matches a single essay")
    {
        const Code v = 684646;
        const SearchReport r = run_exact({.t = 5, .essays = 1, .rng_seed = 9, .start_vertex = v});
        Rng rng(9);
        const Clique direct = extend_exact({5, {v}}, rng).clique;
        CHECK(r.essays.at(0).clique == direct);
        CHECK(r.essays.at(0).clique.members.front() == v);
    }

    TEST_CASE("candidate cap flags overflow")
    {
        const SearchReport r = run_exact({.t = 4, .essays = 2, .rng_seed = 5, .candidate_cap = 10});
        for (const auto& e : r.essays) {
            CHECK(e.overflow);
            CHECK(e.clique.size() == 1);
        }
        CHECK(r.sizes().empty());
    }

    TEST_CASE("start vertices avoid isolated classes")
    {
        Rng rng(1);
        for (int t : {3, 5, 7}) {
            for (int i = 0; i < 200; ++i) {
                const Vertex v = random_start_vertex(t, rng);
                CHECK(degree(t, v.k()) > 0);
                CHECK(v.k() <= t / 2);
            }
        }
    }

    TEST_CASE("configuration errors")
    {
        CHECK(thrown_kind([] { run_exact({.t = 1}); }) == ErrorKind::Range);
        CHECK(thrown_kind([] { run_exact({.t = 3, .essays = 0}); }) == ErrorKind::Range);
        CHECK(thrown_kind([] { run_exact({.t = 3, .start_vertex = 166}); }).has_value());
    }

    TEST_CASE("published added vertices extend to the published clique sizes")
    {
        // The seeds these lists were added to are not published; extending the
        // lists alone shows a compatible clique of at least that size exists.
        const std::vector<std::pair<int, std::size_t>> published_sizes = {{4, 12}, {5, 7}, {6, 15}, {8, 17}};
        for (const auto& [t, target] : published_sizes) {
            const auto it = std::find_if(testdata::kFastAdded.begin(), testdata::kFastAdded.end(),
                                         [t = t](const auto& p) { return p.clique.t == t; });
            REQUIRE(it != testdata::kFastAdded.end());
            CAPTURE(it->source);
            Rng rng(1);
            std::size_t best = 0;
            for (int attempt = 0; attempt < 20 && best < target; ++attempt) {
                const ExtendResult r = extend_exact(it->clique, rng);
                CHECK(contains_all(r.clique, it->clique));
                CHECK(oracle::verify_clique(r.clique).ok);
                best = std::max(best, r.clique.size());
            }
            CHECK(best >= target);
        }
    }
}
