#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hadclique/vertex.hpp"

namespace hadclique {

/// Member codes of G_t; cliqueness is checked by oracle::verify_clique.
struct Clique {
    int t = 0;
    std::vector<Code> members;

    std::size_t size() const noexcept { return members.size(); }
    bool empty() const noexcept { return members.empty(); }

    friend bool operator==(const Clique&, const Clique&) = default;
};

/// Same t and the same members regardless of order.
bool same_member_set(const Clique& a, const Clique& b);

/// Members sorted ascending.
Clique canonical(Clique c);

bool contains_all(const Clique& super, const Clique& sub);

/// Clique text: t on the first line, then decimal codes separated by
/// whitespace or commas. '#' starts a comment running to end of line.
/// Throws Error(Parse) with the offending line number.
Clique parse_clique(std::string_view text);

/// "t\ncode code ...\n"
std::string format_clique(const Clique& c);

} // namespace hadclique
