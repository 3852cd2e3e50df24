#include "inputs.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hadclique/seeds.hpp"
#include "report_json.hpp"

namespace hadclique::cli {

InputKind sniff(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return InputKind::Report;

    bool signs = false;
    std::map<std::size_t, int> lengths; // data-line length -> count
    std::size_t data_lines = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::size_t width = 0;
        for (char ch : line) {
            switch (ch) {
            case '+':
            case '-': signs = true; [[fallthrough]];
            case '0':
            case '1': ++width; break;
            case ' ':
            case '\t':
            case '\r': break;
            default: return InputKind::Clique;
            }
        }
        if (width > 0) {
            ++data_lines;
            ++lengths[width];
        }
    }
    if (signs)
        return InputKind::Matrix;
    return data_lines >= 2 && lengths.size() == 1 ? InputKind::Matrix : InputKind::Clique;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out)
        throw std::runtime_error("write to " + path.string() + " failed");
}

Clique load_clique(const std::filesystem::path& path)
{
    const std::string text = read_file(path);
    switch (sniff(text)) {
    case InputKind::Report: return best_clique_from_report(nlohmann::ordered_json::parse(text));
    case InputKind::Matrix: return matrix_to_clique(normalize(ingest_sign_matrix(text)));
    case InputKind::Clique: break;
    }
    return parse_clique(text);
}

} // namespace hadclique::cli
