#include "hadclique/vertex.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "hadclique/counting.hpp"
#include "hadclique/error.hpp"

namespace hadclique {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::Weight: return "WeightError";
    case ErrorKind::Pattern: return "PatternError";
    case ErrorKind::MismatchedT: return "MismatchedT";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::InfeasibleQuarter: return "InfeasibleQuarter";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidClique: return "InvalidClique";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::DecodeFailure: return "DecodeFailure";
    case ErrorKind::RaggedRows: return "RaggedRows";
    case ErrorKind::BadCharacter: return "BadCharacter";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::InvalidSeed: return "InvalidSeed";
    case ErrorKind::BothEmpty: return "BothEmpty";
    case ErrorKind::Parse: return "ParseError";
    }
    return "Error";
}

void require_valid_t(int t)
{
    if (t < 1 || t > kMaxT)
        throw Error(ErrorKind::Range, "t=" + std::to_string(t) + " outside [1, " + std::to_string(kMaxT) + "]");
}

Vertex decode(Code code, int t)
{
    require_valid_t(t);
    if (code > word_mask(t))
        throw Error(ErrorKind::Range, "code " + std::to_string(code) + " needs more than " + std::to_string(4 * t) + " bits");
    if (std::popcount(code) != 2 * t)
        throw Error(ErrorKind::Weight, "code " + std::to_string(code) + " has " + std::to_string(std::popcount(code)) +
                                           " one-bits, expected " + std::to_string(2 * t));
    const int k = std::popcount(quarter_of(code, t, 0));
    const std::array<int, 4> want{k, t - k, t - k, k};
    for (int q = 1; q < 4; ++q) {
        if (std::popcount(quarter_of(code, t, q)) != want[q])
            throw Error(ErrorKind::Pattern, "code " + std::to_string(code) + " = " + format_quarters(code, t) +
                                                " does not follow the k, t-k, t-k, k pattern");
    }
    return Vertex(t, code, k);
}

Vertex from_quarters(const std::array<QuarterMask, 4>& quarters, int t)
{
    require_valid_t(t);
    for (QuarterMask m : quarters) {
        if (m > quarter_mask(t))
            throw Error(ErrorKind::Range, "quarter mask wider than t bits");
    }
    return decode(join_quarters(quarters, t), t);
}

bool orthogonal(const Vertex& v, const Vertex& w)
{
    if (v.t() != w.t())
        throw Error(ErrorKind::MismatchedT, "t=" + std::to_string(v.t()) + " vs t=" + std::to_string(w.t()));
    return codes_orthogonal(v.code(), w.code(), v.t());
}

Vertex complement(const Vertex& v)
{
    return decode(~v.code() & word_mask(v.t()), v.t());
}

namespace {

QuarterMask left_packed(int t, int ones)
{
    return ones == 0 ? 0 : quarter_mask(ones) << (t - ones);
}

} // namespace

Vertex canonical_vertex(int t, int k)
{
    require_valid_t(t);
    if (k < 0 || k > t)
        throw Error(ErrorKind::KOutOfRange, "k=" + std::to_string(k) + " for t=" + std::to_string(t));
    return decode(join_quarters({left_packed(t, k), left_packed(t, t - k), left_packed(t, t - k), left_packed(t, k)}, t), t);
}

QuarterMask random_quarter(int t, int ones, Rng& rng)
{
    std::vector<int> positions(static_cast<std::size_t>(t));
    std::iota(positions.begin(), positions.end(), 0);
    std::shuffle(positions.begin(), positions.end(), rng);
    QuarterMask mask = 0;
    for (int i = 0; i < ones; ++i)
        mask |= QuarterMask{1} << positions[static_cast<std::size_t>(i)];
    return mask;
}

Vertex random_k_vertex(int t, int k, Rng& rng)
{
    require_valid_t(t);
    if (k < 0 || k > t)
        throw Error(ErrorKind::KOutOfRange, "k=" + std::to_string(k) + " for t=" + std::to_string(t));
    return decode(join_quarters({random_quarter(t, k, rng), random_quarter(t, t - k, rng), random_quarter(t, t - k, rng),
                                 random_quarter(t, k, rng)},
                                t),
                  t);
}

Vertex random_vertex(int t, Rng& rng)
{
    require_valid_t(t);
    // |G_16| < 2^59, so the class weights fit comfortably in 64 bits.
    std::vector<std::uint64_t> weights;
    std::uint64_t total = 0;
    for (int k = 0; k <= t; ++k) {
        weights.push_back(static_cast<std::uint64_t>(vertices_with_k(t, k)));
        total += weights.back();
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    std::uint64_t r = pick(rng);
    int k = 0;
    while (r >= weights[static_cast<std::size_t>(k)]) {
        r -= weights[static_cast<std::size_t>(k)];
        ++k;
    }
    return random_k_vertex(t, k, rng);
}

std::string format_quarters(Code code, int t)
{
    std::string out;
    for (int pos = 4 * t - 1; pos >= 0; --pos) {
        out.push_back(((code >> pos) & 1U) ? '1' : '0');
        if (pos % t == 0 && pos != 0)
            out.push_back('|');
    }
    return out;
}

} // namespace hadclique
