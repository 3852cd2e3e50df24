#include "hadclique/report.hpp"

#include <algorithm>

namespace hadclique {

int SearchReport::best_index() const
{
    int best = -1;
    for (std::size_t i = 0; i < essays.size(); ++i) {
        if (best < 0 || essays[i].clique.size() > essays[static_cast<std::size_t>(best)].clique.size())
            best = static_cast<int>(i);
    }
    return best;
}

const Clique& SearchReport::best() const
{
    static const Clique empty{};
    const int i = best_index();
    return i < 0 ? empty : essays[static_cast<std::size_t>(i)].clique;
}

std::vector<std::size_t> SearchReport::sizes() const
{
    std::vector<std::size_t> out;
    for (const auto& e : essays) {
        if (!e.overflow)
            out.push_back(e.clique.size());
    }
    std::sort(out.begin(), out.end());
    return out;
}

double SearchReport::median_size() const
{
    const auto s = sizes();
    if (s.empty())
        return 0.0;
    const std::size_t mid = s.size() / 2;
    return s.size() % 2 == 1 ? static_cast<double>(s[mid]) : (static_cast<double>(s[mid - 1]) + static_cast<double>(s[mid])) / 2.0;
}

} // namespace hadclique
