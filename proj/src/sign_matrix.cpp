#include "hadclique/sign_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "hadclique/error.hpp"

namespace hadclique {

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols, Entry fill) : rows_(rows), cols_(cols), data_(rows * cols, fill)
{
    if (fill != 1 && fill != -1)
        throw std::invalid_argument("sign matrix entries are +1 or -1");
}

void SignMatrix::set(std::size_t r, std::size_t c, Entry value)
{
    if (value != 1 && value != -1)
        throw std::invalid_argument("sign matrix entries are +1 or -1");
    data_[r * cols_ + c] = value;
}

void SignMatrix::append_row(std::span<const Entry> row)
{
    if (rows_ == 0 && cols_ == 0)
        cols_ = row.size();
    if (row.size() != cols_)
        throw Error(ErrorKind::RaggedRows,
                    "row " + std::to_string(rows_ + 1) + " has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols_));
    for (Entry e : row) {
        if (e != 1 && e != -1)
            throw std::invalid_argument("sign matrix entries are +1 or -1");
    }
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

void SignMatrix::negate_column(std::size_t c)
{
    for (std::size_t r = 0; r < rows_; ++r)
        data_[r * cols_ + c] = static_cast<Entry>(-data_[r * cols_ + c]);
}

void SignMatrix::swap_columns(std::size_t a, std::size_t b)
{
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap(data_[r * cols_ + a], data_[r * cols_ + b]);
}

long long SignMatrix::row_dot(std::size_t a, std::size_t b) const
{
    long long dot = 0;
    for (std::size_t c = 0; c < cols_; ++c)
        dot += data_[a * cols_ + c] * data_[b * cols_ + c];
    return dot;
}

std::string SignMatrix::to_text() const
{
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            out.push_back(at(r, c) > 0 ? '+' : '-');
        out.push_back('\n');
    }
    return out;
}

} // namespace hadclique
