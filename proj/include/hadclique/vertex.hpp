#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <string>

namespace hadclique {

// Codes are 4t-bit words held in 64 bits.
inline constexpr int kMaxT = 16;

using Code = std::uint64_t;
using QuarterMask = std::uint32_t;
using Rng = std::mt19937_64;

/// Throws Error(Range) unless 1 <= t <= kMaxT.
void require_valid_t(int t);

constexpr QuarterMask quarter_mask(int t) noexcept
{
    return t >= 32 ? ~QuarterMask{0} : (QuarterMask{1} << t) - 1;
}

constexpr Code word_mask(int t) noexcept
{
    return 4 * t >= 64 ? ~Code{0} : (Code{1} << (4 * t)) - 1;
}

/// Quarter `q` (0..3) of a code. Quarter 0 holds the most significant t bits.
constexpr QuarterMask quarter_of(Code code, int t, int q) noexcept
{
    return static_cast<QuarterMask>((code >> ((3 - q) * t)) & quarter_mask(t));
}

constexpr Code join_quarters(const std::array<QuarterMask, 4>& quarters, int t) noexcept
{
    Code code = 0;
    for (int q = 0; q < 4; ++q)
        code = (code << t) | (quarters[q] & quarter_mask(t));
    return code;
}

/// Orthogonality on raw codes: the two rows agree in exactly 2t positions.
constexpr bool codes_orthogonal(Code a, Code b, int t) noexcept
{
    return std::popcount(a ^ b) == 2 * t;
}

/// A vertex of G_t: a 4t-bit row in additive notation (bit 1 is a -1 entry)
/// whose quarters carry k, t-k, t-k, k one-bits.
class Vertex {
public:
    int t() const noexcept { return t_; }
    Code code() const noexcept { return code_; }
    int k() const noexcept { return k_; }
    QuarterMask quarter(int q) const noexcept { return quarter_of(code_, t_, q); }

    friend bool operator==(const Vertex&, const Vertex&) = default;

private:
    Vertex(int t, Code code, int k) : t_(t), code_(code), k_(k) {}

    friend Vertex decode(Code code, int t);

    int t_;
    Code code_;
    int k_;
};

/// Validates `code` as a vertex of G_t.
/// Throws Error(Range), Error(Weight) or Error(Pattern).
Vertex decode(Code code, int t);

Vertex from_quarters(const std::array<QuarterMask, 4>& quarters, int t);

inline Code encode(const Vertex& v) noexcept { return v.code(); }

/// Throws Error(MismatchedT) when the vertices come from different graphs.
bool orthogonal(const Vertex& v, const Vertex& w);

Vertex complement(const Vertex& v);

/// The pattern with each quarter's one-bits packed to the left.
Vertex canonical_vertex(int t, int k);

/// Uniform k-vertex: an independent random arrangement inside each quarter.
Vertex random_k_vertex(int t, int k, Rng& rng);

/// Uniform over all of G_t.
Vertex random_vertex(int t, Rng& rng);

/// Uniform t-bit mask with exactly `ones` bits set.
QuarterMask random_quarter(int t, int ones, Rng& rng);

/// "10100|11100|10011|00110" style rendering.
std::string format_quarters(Code code, int t);

} // namespace hadclique
