#include <bit>
#include <map>
#include <set>

#include "doctest.h"

#include "hadclique/error.hpp"
#include "hadclique/oracle.hpp"
#include "hadclique/vertex.hpp"
#include "test_support.hpp"

using namespace hadclique;
using hadclique::testing::thrown_kind;

TEST_SUITE("core")
{
    TEST_CASE("decode reads the quarter pattern")
    {
        const Vertex v = decode(684646, 5);
        CHECK(v.k() == 2);
        CHECK(format_quarters(v.code(), 5) == "10100|11100|10011|00110");
        CHECK(v.quarter(0) == 0b10100);
        CHECK(v.quarter(3) == 0b00110);

        CHECK(decode(166, 2).k() == 1);
        CHECK(format_quarters(166, 2) == "10|10|01|10");
        CHECK(decode(32736, 5).k() == 0);
        CHECK(format_quarters(32736, 5) == "00000|11111|11111|00000");
    }

    TEST_CASE("decode rejects bad codes")
    {
        CHECK(thrown_kind([] { decode((Code{1} << 20) - 1, 5); }) == ErrorKind::Weight);
        CHECK(thrown_kind([] { decode(Code{1} << 20, 5); }) == ErrorKind::Range);
        CHECK(thrown_kind([] { decode(0b11110000, 2); }) == ErrorKind::Pattern);
        CHECK(thrown_kind([] { decode(166, 0); }) == ErrorKind::Range);
        CHECK(thrown_kind([] { decode(166, kMaxT + 1); }) == ErrorKind::Range);
    }

    TEST_CASE("encode inverts decode")
    {
        CHECK(from_quarters({0b10100, 0b11100, 0b10011, 0b00110}, 5).code() == 684646);
        CHECK(from_quarters({0b00, 0b11, 0b11, 0b00}, 2).code() == 60);
        CHECK(encode(decode(684646, 5)) == 684646);
        for (Code c : oracle::enumerate_vertices(3))
            CHECK(encode(decode(c, 3)) == c);
        CHECK(thrown_kind([] { from_quarters({0b100, 0, 0, 0}, 2); }) == ErrorKind::Range);
    }

    TEST_CASE("decode accepts exactly the graph members")
    {
        for (int t = 1; t <= 4; ++t) {
            const auto members = oracle::enumerate_vertices(t);
            const std::set<Code> in(members.begin(), members.end());
            std::size_t accepted = 0;
            for (Code c = 0; c <= word_mask(t); ++c) {
                const bool ok = !thrown_kind([&] { decode(c, t); });
                CHECK(ok == (in.count(c) == 1));
                accepted += ok ? 1 : 0;
            }
            CHECK(accepted == members.size());
        }
    }

    TEST_CASE("orthogonality")
    {
        CHECK(orthogonal(decode(166, 2), decode(101, 2)));
        CHECK_FALSE(orthogonal(decode(166, 2), decode(166, 2)));
        CHECK_FALSE(orthogonal(decode(684646, 5), decode(32736, 5)));
        CHECK(thrown_kind([] { orthogonal(decode(166, 2), decode(684646, 5)); }) == ErrorKind::MismatchedT);
    }

    TEST_CASE("orthogonality agrees with the inner product and is symmetric")
    {
        for (int t = 1; t <= 3; ++t) {
            const auto vs = oracle::enumerate_vertices(t);
            for (Code a : vs) {
                for (Code b : vs) {
                    const bool o = orthogonal(decode(a, t), decode(b, t));
                    CHECK(o == (oracle::inner_product(a, b, t) == 0));
                    CHECK(o == orthogonal(decode(b, t), decode(a, t)));
                }
            }
        }
    }

    TEST_CASE("complement")
    {
        const Vertex c = complement(decode(32736, 5));
        CHECK(c.code() == 1015839);
        CHECK(format_quarters(c.code(), 5) == "11111|00000|00000|11111");
        CHECK(c.k() == 5);
        CHECK(complement(decode(166, 2)).code() == 89);

        for (int t = 1; t <= 3; ++t) {
            const auto vs = oracle::enumerate_vertices(t);
            for (Code a : vs) {
                const Vertex v = decode(a, t);
                CHECK(complement(complement(v)) == v);
                CHECK(complement(v).k() == t - v.k());
                for (Code b : vs) {
                    const Vertex w = decode(b, t);
                    CHECK(orthogonal(v, w) == orthogonal(complement(v), w));
                }
            }
        }
    }

    TEST_CASE("canonical and random vertices")
    {
        CHECK(format_quarters(canonical_vertex(5, 2).code(), 5) == "11000|11100|11100|11000");
        Rng rng(7);
        for (int t = 1; t <= kMaxT; ++t) {
            for (int k = 0; k <= t; ++k) {
                const Vertex v = random_k_vertex(t, k, rng);
                CHECK(v.k() == k);
                CHECK(oracle::in_graph(v.code(), t));
            }
            const Vertex w = random_vertex(t, rng);
            CHECK(oracle::in_graph(w.code(), t));
            CHECK(std::popcount(random_quarter(t, t / 2, rng)) == t / 2);
        }
    }

    TEST_CASE("random_vertex is uniform over G_2")
    {
        Rng rng(11);
        const auto vs = oracle::enumerate_vertices(2);
        std::map<Code, int> hits;
        const int draws = 18 * 2000;
        for (int i = 0; i < draws; ++i)
            ++hits[random_vertex(2, rng).code()];
        CHECK(hits.size() == vs.size());
        double chi2 = 0;
        for (Code c : vs) {
            const double d = hits[c] - 2000.0;
            chi2 += d * d / 2000.0;
        }
        // 17 degrees of freedom; 0.999 quantile is about 40.8
        CHECK(chi2 < 40.8);
    }
}
