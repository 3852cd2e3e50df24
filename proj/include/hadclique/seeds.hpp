#pragma once

#include <string_view>
#include <vector>

#include "hadclique/clique.hpp"
#include "hadclique/sign_matrix.hpp"

namespace hadclique {

/// A sign matrix whose first three rows are the canonical normalized rows.
class NormalizedMatrix {
public:
    /// Throws Error(NotNormalized) or Error(BadShape).
    explicit NormalizedMatrix(SignMatrix m);

    const SignMatrix& matrix() const noexcept { return m_; }
    int t() const noexcept { return static_cast<int>(m_.cols() / 4); }

private:
    SignMatrix m_;
};

/// Sign-matrix text: one row per line over {'+', '-', '1', '0'} ('1' is +1,
/// '0' is -1); spaces are ignored, blank lines and '#' lines are skipped.
/// Throws Error(BadCharacter) with line/column or Error(RaggedRows).
SignMatrix ingest_sign_matrix(std::string_view text);

bool is_normalized(const SignMatrix& m);

/// Column negations and swaps bringing the first three rows to canonical
/// form. Throws Error(BadShape) (fewer than 3 rows, width not a positive
/// multiple of 4) or Error(NotOrthogonal).
NormalizedMatrix normalize(const SignMatrix& m);

/// Rows 4.. as vertices of G_t. Throws Error(DecodeFailure) naming the row.
Clique matrix_to_clique(const NormalizedMatrix& m);

bool is_prime(int n);

/// Odd primes p_1 >= ... >= p_i with sum 2t - i, i in {2, 3}: the smallest i
/// first, then the largest minimum prime. Empty when none exists.
std::vector<int> paley_decomposition(int t);

/// Paley conference matrix of order p + 1 for an odd prime p (zero diagonal,
/// symmetric for p = 1 mod 4, antisymmetric for p = 3 mod 4). Entries in {-1, 0, 1}.
std::vector<std::vector<int>> conference_matrix(int p);

/// Hadamard matrix of order 2(p + 1) built from the conference matrix of p.
SignMatrix paley_block(int p);

/// First 2 min(p) + 2 rows of the blocks for paley_decomposition(t),
/// juxtaposed into a partial Hadamard matrix of width 4t.
/// Throws Error(NoDecomposition).
SignMatrix paley_partial_hadamard(int t);

/// paley_partial_hadamard(t), normalized, as a clique of size 2 min(p) - 1.
Clique paley_seed(int t);

} // namespace hadclique
