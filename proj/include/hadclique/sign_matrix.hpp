#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hadclique {

/// Dense m x n matrix over {+1, -1}.
class SignMatrix {
public:
    using Entry = std::int8_t;

    SignMatrix() = default;
    SignMatrix(std::size_t rows, std::size_t cols, Entry fill = 1);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Entry at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// `value` must be +1 or -1.
    void set(std::size_t r, std::size_t c, Entry value);

    std::span<const Entry> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    /// Appends a row; the first row fixes the column count.
    void append_row(std::span<const Entry> row);

    void negate_column(std::size_t c);
    void swap_columns(std::size_t a, std::size_t b);

    long long row_dot(std::size_t a, std::size_t b) const;

    /// '+'/'-' rows, each terminated by a newline.
    std::string to_text() const;

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Entry> data_;
};

} // namespace hadclique
