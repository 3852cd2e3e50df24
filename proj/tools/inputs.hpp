#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hadclique/clique.hpp"
#include "hadclique/sign_matrix.hpp"

namespace hadclique::cli {

enum class InputKind { Clique, Matrix, Report };

/// Decides how a file should be read:
///   a leading '{' is a JSON report;
///   any character outside [+-01], whitespace and '#' comments means a clique file;
///   '+' or '-' means a sign matrix;
///   bare 0/1 rows are a matrix when there are at least two data lines of equal length.
InputKind sniff(std::string_view text);

/// Throws std::runtime_error when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

/// A clique from a clique file, a sign-matrix file (normalized, rows 4..) or
/// a report (its best clique). Library errors propagate.
Clique load_clique(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace hadclique::cli
