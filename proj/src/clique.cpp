#include "hadclique/clique.hpp"

#include <algorithm>
#include <charconv>

#include "hadclique/error.hpp"

namespace hadclique {

bool same_member_set(const Clique& a, const Clique& b)
{
    return a.t == b.t && canonical(a).members == canonical(b).members;
}

Clique canonical(Clique c)
{
    std::sort(c.members.begin(), c.members.end());
    return c;
}

bool contains_all(const Clique& super, const Clique& sub)
{
    if (super.t != sub.t)
        return false;
    const Clique sorted = canonical(super);
    return std::all_of(sub.members.begin(), sub.members.end(),
                       [&](Code c) { return std::binary_search(sorted.members.begin(), sorted.members.end(), c); });
}

namespace {

bool is_separator(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == ','; }

} // namespace

Clique parse_clique(std::string_view text)
{
    Clique c;
    bool have_t = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::size_t pos = 0;
        while (pos < line.size()) {
            if (is_separator(line[pos])) {
                ++pos;
                continue;
            }
            std::size_t end = pos;
            while (end < line.size() && !is_separator(line[end]))
                ++end;
            const std::string_view token = line.substr(pos, end - pos);
            Code value = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": '" + std::string(token) + "' is not a decimal code");
            if (!have_t) {
                if (value < 1 || value > static_cast<Code>(kMaxT))
                    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": t=" + std::string(token) + " out of range");
                c.t = static_cast<int>(value);
                have_t = true;
            } else {
                c.members.push_back(value);
            }
            pos = end;
        }
    }
    if (!have_t)
        throw Error(ErrorKind::Parse, "clique text has no t line");
    return c;
}

std::string format_clique(const Clique& c)
{
    std::string out = std::to_string(c.t) + "\n";
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        if (i != 0)
            out.push_back(' ');
        out += std::to_string(c.members[i]);
    }
    out.push_back('\n');
    return out;
}

} // namespace hadclique
