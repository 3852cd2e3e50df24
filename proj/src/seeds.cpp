#include "hadclique/seeds.hpp"

#include <algorithm>
#include <string>

#include "hadclique/error.hpp"
#include "hadclique/oracle.hpp"

namespace hadclique {

namespace {

void require_shape(const SignMatrix& m)
{
    if (m.rows() < 3)
        throw Error(ErrorKind::BadShape, "need at least 3 rows, got " + std::to_string(m.rows()));
    if (m.cols() == 0 || m.cols() % 4 != 0)
        throw Error(ErrorKind::BadShape, "width " + std::to_string(m.cols()) + " is not a positive multiple of 4");
    if (m.cols() / 4 > static_cast<std::size_t>(kMaxT))
        throw Error(ErrorKind::BadShape, "width " + std::to_string(m.cols()) + " exceeds 4*" + std::to_string(kMaxT));
}

} // namespace

NormalizedMatrix::NormalizedMatrix(SignMatrix m) : m_(std::move(m))
{
    require_shape(m_);
    if (!is_normalized(m_))
        throw Error(ErrorKind::NotNormalized, "first three rows are not in canonical form");
}

SignMatrix ingest_sign_matrix(std::string_view text)
{
    SignMatrix m;
    std::vector<SignMatrix::Entry> row;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        const std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#')
            continue;
        row.clear();
        for (std::size_t col = 0; col < line.size(); ++col) {
            switch (line[col]) {
            case '+':
            case '1': row.push_back(1); break;
            case '-':
            case '0': row.push_back(-1); break;
            case ' ':
            case '\t':
            case '\r': break;
            default:
                throw Error(ErrorKind::BadCharacter, "line " + std::to_string(line_no) + ", column " + std::to_string(col + 1) +
                                                         ": unexpected '" + std::string(1, line[col]) + "'");
            }
        }
        if (m.rows() > 0 && row.size() != m.cols())
            throw Error(ErrorKind::RaggedRows, "line " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                                                   " entries, expected " + std::to_string(m.cols()));
        m.append_row(row);
    }
    return m;
}

bool is_normalized(const SignMatrix& m)
{
    if (m.rows() < 3 || m.cols() == 0 || m.cols() % 4 != 0)
        return false;
    const SignMatrix prefix = oracle::normalized_prefix(static_cast<int>(m.cols() / 4));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != prefix.at(r, c))
                return false;
    return true;
}

namespace {

// Swaps columns in [lo, mid) showing `row` = -1 with columns in [mid, hi)
// showing `row` = +1.
void pair_swap(SignMatrix& m, std::size_t row, std::size_t lo, std::size_t mid, std::size_t hi)
{
    std::vector<std::size_t> left, right;
    for (std::size_t c = lo; c < mid; ++c)
        if (m.at(row, c) < 0)
            left.push_back(c);
    for (std::size_t c = mid; c < hi; ++c)
        if (m.at(row, c) > 0)
            right.push_back(c);
    if (left.size() != right.size())
        throw Error(ErrorKind::NotOrthogonal, "row " + std::to_string(row + 1) + " is unbalanced on columns " +
                                                  std::to_string(lo + 1) + ".." + std::to_string(hi));
    for (std::size_t i = 0; i < left.size(); ++i)
        m.swap_columns(left[i], right[i]);
}

} // namespace

NormalizedMatrix normalize(const SignMatrix& input)
{
    require_shape(input);
    if (const auto ph = oracle::verify_ph(input); !ph.ok)
        throw Error(ErrorKind::NotOrthogonal, ph.message);

    SignMatrix m = input;
    const std::size_t n = m.cols();
    const std::size_t t = n / 4;
    for (std::size_t c = 0; c < n; ++c)
        if (m.at(0, c) < 0)
            m.negate_column(c);
    pair_swap(m, 1, 0, 2 * t, n);
    pair_swap(m, 2, 0, t, 2 * t);
    pair_swap(m, 2, 2 * t, 3 * t, n);
    return NormalizedMatrix(std::move(m));
}

Clique matrix_to_clique(const NormalizedMatrix& nm)
{
    const SignMatrix& m = nm.matrix();
    const int t = nm.t();
    Clique c{t, {}};
    for (std::size_t r = 3; r < m.rows(); ++r) {
        Code code = 0;
        for (std::size_t col = 0; col < m.cols(); ++col)
            code = (code << 1) | (m.at(r, col) < 0 ? 1U : 0U);
        try {
            decode(code, t);
        } catch (const Error& e) {
            throw Error(ErrorKind::DecodeFailure, "row " + std::to_string(r + 1) + ": " + e.what());
        }
        c.members.push_back(code);
    }
    return c;
}

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<int> paley_decomposition(int t)
{
    const auto odd_prime = [](int p) { return p > 2 && is_prime(p); };
    {
        const int total = 2 * t - 2;
        for (int p2 = total / 2; p2 >= 3; --p2) {
            if (odd_prime(p2) && odd_prime(total - p2))
                return {total - p2, p2};
        }
    }
    {
        const int total = 2 * t - 3;
        for (int p3 = total / 3; p3 >= 3; --p3) {
            if (!odd_prime(p3))
                continue;
            const int rest = total - p3;
            for (int p2 = rest / 2; p2 >= p3; --p2) {
                if (odd_prime(p2) && odd_prime(rest - p2))
                    return {rest - p2, p2, p3};
            }
        }
    }
    return {};
}

std::vector<std::vector<int>> conference_matrix(int p)
{
    if (p < 3 || !is_prime(p))
        throw Error(ErrorKind::NoDecomposition, std::to_string(p) + " is not an odd prime");
    std::vector<int> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (int x = 1; x < p; ++x)
        chi[static_cast<std::size_t>((x * x) % p)] = 1;

    const int chi_minus_one = p % 4 == 1 ? 1 : -1;
    const auto n = static_cast<std::size_t>(p + 1);
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (std::size_t j = 1; j < n; ++j) {
        c[0][j] = 1;
        c[j][0] = chi_minus_one;
    }
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            c[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b + 1)] = chi[static_cast<std::size_t>(((b - a) % p + p) % p)];
    return c;
}

SignMatrix paley_block(int p)
{
    const auto c = conference_matrix(p);
    const std::size_t n = c.size();
    SignMatrix h(2 * n, 2 * n);
    auto put = [&](std::size_t r, std::size_t col, int v) { h.set(r, col, static_cast<SignMatrix::Entry>(v)); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int id = i == j ? 1 : 0;
            if (p % 4 == 3) {
                // I + C is Hadamard; double it.
                const int e = c[i][j] + id;
                put(i, j, e);
                put(i, j + n, e);
                put(i + n, j, e);
                put(i + n, j + n, -e);
            } else {
                put(i, j, c[i][j] + id);
                put(i, j + n, c[i][j] - id);
                put(i + n, j, c[i][j] - id);
                put(i + n, j + n, -c[i][j] - id);
            }
        }
    }
    return h;
}

SignMatrix paley_partial_hadamard(int t)
{
    require_valid_t(t);
    const auto primes = paley_decomposition(t);
    if (primes.empty())
        throw Error(ErrorKind::NoDecomposition, "2t - i has no split into i odd primes (i = 2, 3) for t=" + std::to_string(t));
    const int smallest = *std::min_element(primes.begin(), primes.end());
    const auto depth = static_cast<std::size_t>(2 * smallest + 2);

    std::vector<SignMatrix> blocks;
    for (int p : primes)
        blocks.push_back(paley_block(p));

    SignMatrix out;
    std::vector<SignMatrix::Entry> row;
    for (std::size_t r = 0; r < depth; ++r) {
        row.clear();
        for (const auto& b : blocks) {
            const auto part = b.row(r);
            row.insert(row.end(), part.begin(), part.end());
        }
        out.append_row(row);
    }
    return out;
}

Clique paley_seed(int t)
{
    return matrix_to_clique(normalize(paley_partial_hadamard(t)));
}

} // namespace hadclique
