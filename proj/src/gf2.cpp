#include "ycalc/gf2.hpp"

#include <stdexcept>

namespace ycalc {

std::size_t gf2_rank(const GF2Matrix& m) {
    GF2Matrix a = m;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && !a.get(pivot, col)) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < a.cols(); ++c) {
                bool t = a.get(rank, c);
                a.set(rank, c, a.get(pivot, c));
                a.set(pivot, c, t);
            }
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != rank && a.get(r, col)) a.xor_row(r, rank);
        ++rank;
    }
    return rank;
}

std::optional<std::vector<std::uint8_t>> gf2_solve(const GF2Matrix& m,
                                                   const std::vector<std::uint8_t>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("gf2_solve: length mismatch");
    // Eliminate on the augmented matrix [M | b].
    GF2Matrix a(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a.set(r, c, m.get(r, c));
        a.set(r, m.cols(), b[r] & 1);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && !a.get(pivot, col)) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < a.cols(); ++c) {
                bool t = a.get(rank, c);
                a.set(rank, c, a.get(pivot, c));
                a.set(pivot, c, t);
            }
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != rank && a.get(r, col)) a.xor_row(r, rank);
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < a.rows(); ++r)
        if (a.get(r, m.cols())) return std::nullopt;
    std::vector<std::uint8_t> x(m.cols(), 0);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = a.get(r, m.cols());
    return x;
}

void GF2RowSpace::add_row(const std::vector<std::uint8_t>& row) {
    if (row.size() != width_) throw std::invalid_argument("GF2RowSpace: width mismatch");
    std::vector<std::uint8_t> v = row;
    for (auto& bit : v) bit &= 1;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v[pivots_[i]])
            for (std::size_t c = 0; c < width_; ++c) v[c] ^= rows_[i][c];
    std::size_t p = 0;
    while (p < width_ && !v[p]) ++p;
    if (p == width_) return;  // dependent
    // Back-substitute into existing rows to keep reduced echelon form.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i][p])
            for (std::size_t c = 0; c < width_; ++c) rows_[i][c] ^= v[c];
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
}

std::vector<std::uint8_t> GF2RowSpace::reduce(std::vector<std::uint8_t> v) const {
    if (v.size() != width_) throw std::invalid_argument("GF2RowSpace: width mismatch");
    for (auto& bit : v) bit &= 1;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v[pivots_[i]])
            for (std::size_t c = 0; c < width_; ++c) v[c] ^= rows_[i][c];
    return v;
}

bool GF2RowSpace::contains(const std::vector<std::uint8_t>& v) const {
    std::vector<std::uint8_t> r = reduce(v);
    for (auto bit : r)
        if (bit) return false;
    return true;
}

}  // namespace ycalc
