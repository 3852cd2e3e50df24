#include "doctest.h"

#include "hadclique/error.hpp"
#include "hadclique/oracle.hpp"
#include "hadclique/seeds.hpp"
#include "published_cliques.hpp"
#include "test_support.hpp"

using namespace hadclique;
using hadclique::testing::thrown_kind;

namespace {

SignMatrix from_text(const char* text) { return ingest_sign_matrix(text); }

} // namespace

TEST_SUITE("oracle")
{
    TEST_CASE("vertex enumeration")
    {
        CHECK(oracle::enumerate_vertices(1) == std::vector<Code>{0b0110, 0b1001});
        CHECK(oracle::enumerate_vertices(2).size() == 18);
        CHECK(oracle::enumerate_vertices(3).size() == 164);
        CHECK(oracle::enumerate_vertices(4).size() == 1810);
        CHECK(thrown_kind([] { oracle::enumerate_vertices(7); }) == ErrorKind::TooLarge);
    }

    TEST_CASE("inner product")
    {
        CHECK(oracle::inner_product(0, 0, 2) == 8);
        CHECK(oracle::inner_product(0, 0xFF, 2) == -8);
        CHECK(oracle::inner_product(166, 101, 2) == 0);
        CHECK(oracle::in_graph(684646, 5));
        CHECK_FALSE(oracle::in_graph(0, 5));
        CHECK_FALSE(oracle::in_graph(Code{1} << 20, 5));
    }

    TEST_CASE("brute adjacency")
    {
        CHECK(oracle::brute_adjacency(canonical_vertex(3, 0).code(), 3).empty());
        CHECK(oracle::brute_adjacency(166, 2).size() == 8);
        CHECK(oracle::brute_adjacency(684646, 5).size() == 6912);
        CHECK(thrown_kind([] { oracle::brute_adjacency(canonical_vertex(6, 3).code(), 6); }) == ErrorKind::TooLarge);
    }

    TEST_CASE("verify_clique")
    {
        CHECK(oracle::verify_clique({2, {166, 101, 106, 169, 60}}).ok);
        CHECK(oracle::verify_clique({3, {}}).ok);

        const auto dup = oracle::verify_clique({2, {166, 166}});
        CHECK_FALSE(dup.ok);
        CHECK(dup.bad_pair == std::pair<std::size_t, std::size_t>{0, 1});

        const auto stranger = oracle::verify_clique({2, {166, 0b11110000}});
        CHECK_FALSE(stranger.ok);
        CHECK(stranger.bad_member == std::size_t{1});

        CHECK_FALSE(oracle::verify_clique({0, {}}).ok);
    }

    TEST_CASE("every published clique verifies")
    {
        for (const auto& p : testdata::all_valid()) {
            CAPTURE(p.source);
            const auto r = oracle::verify_clique(p.clique);
            CHECK_MESSAGE(r.ok, r.message);
            const auto ph = oracle::verify_ph(oracle::clique_to_matrix(p.clique));
            CHECK_MESSAGE(ph.ok, ph.message);
            CHECK(oracle::clique_to_matrix(p.clique).rows() == p.clique.size() + 3);
        }
    }

    TEST_CASE("the misprinted fast t=6 list is rejected")
    {
        const auto r = oracle::verify_clique(testdata::kFastT6Misprint.clique);
        CHECK_FALSE(r.ok);
        CHECK(r.bad_pair.has_value());
    }

    TEST_CASE("maximality")
    {
        CHECK(oracle::is_maximal(testdata::kExactSmall[0].clique));
        CHECK(oracle::is_maximal(testdata::kExactSmall[1].clique));
        CHECK_FALSE(oracle::is_maximal({3, {2396, 730}}));
        CHECK(oracle::is_maximal({3, {canonical_vertex(3, 0).code()}}));
        CHECK(thrown_kind([] { oracle::is_maximal({6, {}}); }) == ErrorKind::TooLarge);
    }

    TEST_CASE("clique_to_matrix")
    {
        const SignMatrix m = oracle::clique_to_matrix({2, {166, 101, 106, 169, 60}});
        CHECK(m.rows() == 8);
        CHECK(m.cols() == 8);
        CHECK(oracle::verify_ph(m).ok);
        CHECK(m.to_text().substr(0, 27) == "++++++++\n++++----\n++--++--\n");

        const SignMatrix empty = oracle::clique_to_matrix({3, {}});
        CHECK(empty.rows() == 3);
        CHECK(empty.cols() == 12);
        CHECK(oracle::verify_ph(empty).ok);

        CHECK(oracle::clique_to_matrix(testdata::kExactSmall[3].clique).rows() == 20);
        CHECK(thrown_kind([] { oracle::clique_to_matrix({2, {166, 166}}); }) == ErrorKind::InvalidClique);
    }

    TEST_CASE("verify_ph")
    {
        CHECK(oracle::verify_ph(from_text("++++\n++--")).ok);

        const auto repeated = oracle::verify_ph(from_text("++++\n++--\n++--"));
        CHECK_FALSE(repeated.ok);
        CHECK(repeated.bad_pair == std::pair<std::size_t, std::size_t>{1, 2});

        const auto deep = oracle::verify_ph(from_text("++\n+-\n++"));
        CHECK_FALSE(deep.ok);
        CHECK(deep.message.find("exceeds") != std::string::npos);

        const auto six = oracle::verify_ph(from_text("++++++\n+++---"));
        CHECK_FALSE(six.ok);
        CHECK(six.message.find("multiple of 4") != std::string::npos);

        CHECK(oracle::verify_ph(from_text("+")).ok);
        CHECK(oracle::verify_ph(from_text("++\n+-")).ok);
    }
}
