#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

namespace ycalc {

// Matrix over GF(2), rows bit-packed into 64-bit words.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          bits_(rows * words_per_row_) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value) {
        std::uint64_t& w = bits_[r * words_per_row_ + c / 64];
        if (value)
            w |= std::uint64_t(1) << (c % 64);
        else
            w &= ~(std::uint64_t(1) << (c % 64));
    }
    void xor_row(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words_per_row_; ++w)
            bits_[dst * words_per_row_ + w] ^= bits_[src * words_per_row_ + w];
    }

    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

std::size_t gf2_rank(const GF2Matrix& m);

// Solve M x = b over GF(2); x as 0/1 bytes, nullopt when inconsistent.
std::optional<std::vector<std::uint8_t>> gf2_solve(const GF2Matrix& m,
                                                   const std::vector<std::uint8_t>& b);

// Row space in reduced echelon form, for canonical coset representatives:
// reduce() maps a vector to the unique minimal representative of its coset.
class GF2RowSpace {
public:
    explicit GF2RowSpace(std::size_t width) : width_(width) {}

    void add_row(const std::vector<std::uint8_t>& row);
    std::vector<std::uint8_t> reduce(std::vector<std::uint8_t> v) const;
    bool contains(const std::vector<std::uint8_t>& v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

private:
    std::size_t width_;
    std::vector<std::vector<std::uint8_t>> rows_;  // echelon rows
    std::vector<std::size_t> pivots_;              // pivot column per row
};

}  // namespace ycalc
