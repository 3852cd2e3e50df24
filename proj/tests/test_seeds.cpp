#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"

#include "hadclique/error.hpp"
#include "hadclique/oracle.hpp"
#include "hadclique/seeds.hpp"
#include "published_cliques.hpp"
#include "test_support.hpp"

using namespace hadclique;
using hadclique::testing::thrown_kind;

namespace {

// Paley type I Hadamard matrix of order p + 1, p = 3 mod 4, written out as
// text: H = I + S with S the skew conference matrix.
std::string paley_one_text(int p)
{
    std::set<int> residues;
    for (int x = 1; x < p; ++x)
        residues.insert(x * x % p);
    const int n = p + 1;
    std::string out = "# Paley I, order " + std::to_string(n) + "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int s = 0;
            if (i == 0 && j > 0)
                s = 1;
            else if (j == 0 && i > 0)
                s = -1;
            else if (i > 0 && j > 0 && i != j)
                s = residues.count(((j - i) % p + p) % p) ? 1 : -1;
            const int e = s + (i == j ? 1 : 0);
            out += e > 0 ? '+' : '-';
        }
        out += '\n';
    }
    return out;
}

} // namespace

TEST_SUITE("seeds")
{
    TEST_CASE("ingest")
    {
        const SignMatrix m = ingest_sign_matrix("++\n+-\n");
        CHECK(m.rows() == 2);
        CHECK(m.cols() == 2);
        CHECK(m.at(1, 1) == -1);

        const SignMatrix aliases = ingest_sign_matrix("# comment\n\n1 1 0 0\r\n  + - + -\n");
        CHECK(aliases.rows() == 2);
        CHECK(aliases.to_text() == "++--\n+-+-\n");

        CHECK(thrown_kind([] { ingest_sign_matrix("++\n+"); }) == ErrorKind::RaggedRows);
        try {
            ingest_sign_matrix("++\n+x");
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::BadCharacter);
            CHECK(std::string(e.what()).find("line 2, column 2") != std::string::npos);
        }
    }

    TEST_CASE("a Paley order-12 file normalizes to a 9-clique")
    {
        const SignMatrix h = ingest_sign_matrix(paley_one_text(11));
        CHECK(h.rows() == 12);
        CHECK(h.cols() == 12);
        CHECK(oracle::verify_ph(h).ok);
        const NormalizedMatrix n = normalize(h);
        CHECK(oracle::verify_ph(n.matrix()).ok);
        const Clique c = matrix_to_clique(n);
        CHECK(c.t == 3);
        CHECK(c.size() == 9);
        CHECK(oracle::verify_clique(c).ok);
    }

    TEST_CASE("normalize")
    {
        const SignMatrix canonical = oracle::clique_to_matrix(testdata::kExactSmall[2].clique);
        CHECK(normalize(canonical).matrix() == canonical);

        // scramble columns and signs; normalization must restore the prefix
        SignMatrix scrambled = canonical;
        Rng rng(1);
        for (std::size_t c = 0; c < scrambled.cols(); ++c) {
            scrambled.swap_columns(c, rng() % scrambled.cols());
            if (rng() % 2)
                scrambled.negate_column(c);
        }
        const NormalizedMatrix n = normalize(scrambled);
        CHECK(is_normalized(n.matrix()));
        const Clique c = matrix_to_clique(n);
        CHECK(c.size() == 13);
        CHECK(oracle::verify_clique(c).ok);

        CHECK(thrown_kind([] { normalize(ingest_sign_matrix("++++\n++--\n++--")); }) == ErrorKind::NotOrthogonal);
        CHECK(thrown_kind([] { normalize(ingest_sign_matrix("++++\n++--")); }) == ErrorKind::BadShape);
        CHECK(thrown_kind([] { normalize(ingest_sign_matrix("++\n+-\n")); }) == ErrorKind::BadShape);
        CHECK(thrown_kind([] { NormalizedMatrix m(ingest_sign_matrix("----\n++--\n+-+-")); }) == ErrorKind::NotNormalized);
    }

    TEST_CASE("matrix_to_clique")
    {
        CHECK(matrix_to_clique(NormalizedMatrix(oracle::normalized_prefix(3))).empty());

        SignMatrix bad = oracle::normalized_prefix(2);
        bad.append_row(std::vector<SignMatrix::Entry>(8, 1));
        try {
            matrix_to_clique(NormalizedMatrix(bad));
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DecodeFailure);
            CHECK(std::string(e.what()).find("row 4") != std::string::npos);
        }
    }

    TEST_CASE("round trips")
    {
        for (const auto& p : testdata::all_valid()) {
            CAPTURE(p.source);
            const SignMatrix m = oracle::clique_to_matrix(p.clique);
            CHECK(matrix_to_clique(NormalizedMatrix(m)) == p.clique);
            CHECK(oracle::clique_to_matrix(matrix_to_clique(normalize(m))) == m);
        }
    }

    TEST_CASE("primes and decompositions")
    {
        CHECK(is_prime(2));
        CHECK(is_prime(13));
        CHECK_FALSE(is_prime(1));
        CHECK_FALSE(is_prime(9));
        CHECK(paley_decomposition(3).empty());
        CHECK(paley_decomposition(4) == std::vector<int>{3, 3});
        CHECK(paley_decomposition(5) == std::vector<int>{5, 3});
        CHECK(paley_decomposition(6) == std::vector<int>{5, 5});
        CHECK(paley_decomposition(7) == std::vector<int>{7, 5});
        CHECK(paley_decomposition(8) == std::vector<int>{7, 7});
        for (int t = 4; t <= kMaxT; ++t) {
            const auto primes = paley_decomposition(t);
            REQUIRE_FALSE(primes.empty());
            int sum = 0;
            for (int p : primes) {
                CHECK(is_prime(p));
                CHECK(p > 2);
                sum += p;
            }
            CHECK(sum == 2 * t - static_cast<int>(primes.size()));
            CHECK(std::is_sorted(primes.rbegin(), primes.rend()));
        }
    }

    TEST_CASE("conference matrices and Paley blocks")
    {
        for (int p : {3, 5, 7, 11, 13, 17, 19}) {
            const auto c = conference_matrix(p);
            const std::size_t n = c.size();
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(c[i][i] == 0);
                for (std::size_t j = 0; j < n; ++j) {
                    long dot = 0;
                    for (std::size_t x = 0; x < n; ++x)
                        dot += c[i][x] * c[j][x];
                    CHECK(dot == (i == j ? static_cast<long>(n) - 1 : 0));
                    CHECK(c[j][i] == (p % 4 == 1 ? c[i][j] : -c[i][j]));
                }
            }
            const SignMatrix h = paley_block(p);
            CHECK(h.rows() == 2 * n);
            CHECK(h.cols() == 2 * n);
            CHECK(oracle::verify_ph(h).ok);
        }
        CHECK(thrown_kind([] { conference_matrix(9); }) == ErrorKind::NoDecomposition);
    }

    TEST_CASE("Paley seeds")
    {
        const std::vector<std::pair<int, std::size_t>> expected{{4, 5}, {5, 5}, {6, 9}, {7, 9}, {8, 13}};
        for (const auto& [t, size] : expected) {
            const SignMatrix ph = paley_partial_hadamard(t);
            CHECK(ph.cols() == static_cast<std::size_t>(4 * t));
            CHECK(oracle::verify_ph(ph).ok);
            const Clique c = paley_seed(t);
            CHECK(c.t == t);
            CHECK(c.size() == size);
            CHECK(oracle::verify_clique(c).ok);
        }
        for (int t = 9; t <= kMaxT; ++t)
            CHECK(oracle::verify_clique(paley_seed(t)).ok);
        CHECK(thrown_kind([] { paley_seed(3); }) == ErrorKind::NoDecomposition);
        CHECK(thrown_kind([] { paley_seed(1); }) == ErrorKind::NoDecomposition);
    }
}
