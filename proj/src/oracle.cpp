#include "hadclique/oracle.hpp"

#include <string>

#include "hadclique/error.hpp"

namespace hadclique::oracle {

namespace {

int entry(Code code, int t, int position) // position 0 is the leftmost column
{
    return ((code >> (4 * t - 1 - position)) & 1U) ? -1 : 1;
}

void guard(int t, int limit, bool force, const char* what)
{
    require_valid_t(t);
    if (t > limit && !force)
        throw Error(ErrorKind::TooLarge, std::string(what) + " for t=" + std::to_string(t) + " exceeds the t <= " +
                                             std::to_string(limit) + " resource guard");
}

} // namespace

long long inner_product(Code a, Code b, int t)
{
    long long dot = 0;
    for (int p = 0; p < 4 * t; ++p)
        dot += entry(a, t, p) * entry(b, t, p);
    return dot;
}

bool in_graph(Code code, int t)
{
    if (t < 1 || t > kMaxT || code > word_mask(t))
        return false;
    long long r1 = 0, r2 = 0, r3 = 0;
    for (int p = 0; p < 4 * t; ++p) {
        const int e = entry(code, t, p);
        r1 += e;
        r2 += p < 2 * t ? e : -e;
        r3 += (p / t) % 2 == 0 ? e : -e;
    }
    return r1 == 0 && r2 == 0 && r3 == 0;
}

std::vector<Code> enumerate_vertices(int t, bool force)
{
    guard(t, kEnumerateLimit, force, "vertex enumeration");
    std::vector<Code> out;
    const Code end = Code{1} << (4 * t);
    for (Code c = 0; c < end; ++c) {
        if (in_graph(c, t))
            out.push_back(c);
    }
    return out;
}

std::vector<Code> brute_adjacency(Code v, int t, const std::vector<Code>& vertices)
{
    std::vector<Code> out;
    for (Code w : vertices) {
        if (w != v && inner_product(v, w, t) == 0)
            out.push_back(w);
    }
    return out;
}

std::vector<Code> brute_adjacency(Code v, int t, bool force)
{
    guard(t, kAdjacencyLimit, force, "adjacency enumeration");
    return brute_adjacency(v, t, enumerate_vertices(t, true));
}

CliqueReport verify_clique(const Clique& c)
{
    CliqueReport report;
    if (c.t < 1 || c.t > kMaxT) {
        report.ok = false;
        report.message = "t=" + std::to_string(c.t) + " unsupported";
        return report;
    }
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        if (!in_graph(c.members[i], c.t)) {
            report.ok = false;
            report.bad_member = i;
            report.message = "member " + std::to_string(i + 1) + " (" + std::to_string(c.members[i]) + ") is not a vertex of G_" +
                             std::to_string(c.t);
            return report;
        }
    }
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        for (std::size_t j = i + 1; j < c.members.size(); ++j) {
            if (inner_product(c.members[i], c.members[j], c.t) != 0) {
                report.ok = false;
                report.bad_pair = std::pair{i, j};
                report.message = "members " + std::to_string(i + 1) + " (" + std::to_string(c.members[i]) + ") and " +
                                 std::to_string(j + 1) + " (" + std::to_string(c.members[j]) + ") are not orthogonal";
                return report;
            }
        }
    }
    report.message = "clique of size " + std::to_string(c.members.size()) + " in G_" + std::to_string(c.t);
    return report;
}

bool is_maximal(const Clique& c, bool force)
{
    guard(c.t, kAdjacencyLimit, force, "maximality check");
    for (Code w : enumerate_vertices(c.t, true)) {
        bool extends = true;
        for (Code m : c.members) {
            if (inner_product(m, w, c.t) != 0) {
                extends = false;
                break;
            }
        }
        if (extends)
            return false;
    }
    return true;
}

SignMatrix normalized_prefix(int t)
{
    require_valid_t(t);
    const auto n = static_cast<std::size_t>(4 * t);
    const auto ut = static_cast<std::size_t>(t);
    SignMatrix m(3, n);
    for (std::size_t c = 0; c < n; ++c) {
        if (c >= 2 * ut)
            m.set(1, c, -1);
        if ((c / ut) % 2 == 1)
            m.set(2, c, -1);
    }
    return m;
}

SignMatrix clique_to_matrix(const Clique& c)
{
    if (const auto report = verify_clique(c); !report.ok)
        throw Error(ErrorKind::InvalidClique, report.message);
    SignMatrix m = normalized_prefix(c.t);
    std::vector<SignMatrix::Entry> row(static_cast<std::size_t>(4 * c.t));
    for (Code code : c.members) {
        for (int p = 0; p < 4 * c.t; ++p)
            row[static_cast<std::size_t>(p)] = static_cast<SignMatrix::Entry>(entry(code, c.t, p));
        m.append_row(row);
    }
    return m;
}

PhReport verify_ph(const SignMatrix& m)
{
    PhReport report;
    const std::size_t n = m.cols();
    if (m.rows() > n) {
        report.ok = false;
        report.message = "depth " + std::to_string(m.rows()) + " exceeds width " + std::to_string(n);
        return report;
    }
    if (!(n == 1 || n == 2 || n % 4 == 0)) {
        report.ok = false;
        report.message = "width " + std::to_string(n) + " is not 1, 2 or a multiple of 4";
        return report;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.rows(); ++j) {
            if (m.row_dot(i, j) != 0) {
                report.ok = false;
                report.bad_pair = std::pair{i, j};
                report.message = "rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are not orthogonal";
                return report;
            }
        }
    }
    report.message = std::to_string(m.rows()) + "x" + std::to_string(n) + " partial Hadamard matrix";
    return report;
}

} // namespace hadclique::oracle
