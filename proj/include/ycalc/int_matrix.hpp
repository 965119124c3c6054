#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace ycalc {

// Dense matrix over Z with arbitrary-precision entries. Row-major.
// Empty shapes (0 rows and/or 0 columns) are valid everywhere.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<mpz_class> column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<mpz_class>& v);

    IntMatrix transposed() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<mpz_class> operator*(const IntMatrix& a, const std::vector<mpz_class>& v);

// Concatenate by columns: [a | b]. Row counts must agree.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

// Block diagonal [[a, 0], [0, b]].
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

struct SmithNormalForm {
    IntMatrix u;      // rows x rows, unimodular
    IntMatrix d;      // rows x cols, diagonal, d1 | d2 | ..., all >= 0
    IntMatrix v;      // cols x cols, unimodular (empty when not requested)
    IntMatrix u_inv;  // inverse of u

    std::vector<mpz_class> diagonal() const;
};

// U * M * V = D. Pivots are chosen with smallest nonzero magnitude,
// ties broken by row-major scan order, so transforms are reproducible.
SmithNormalForm smith_normal_form(const IntMatrix& m);

// Same elimination without accumulating V (the right transform can be
// enormous when there are many more columns than rows).
SmithNormalForm smith_normal_form_no_v(const IntMatrix& m);

struct CokernelInvariants {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;  // entries > 1, divisibility chain

    friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

// Structure of Z^rows / column-span(M). Torsion coefficients equal to 1
// are dropped.
CokernelInvariants cokernel_invariants(const IntMatrix& m);

// Rank of M over Q (= number of nonzero diagonal entries in the SNF).
std::size_t integer_rank(const IntMatrix& m);

// Solve M x = b over Z. Returns nullopt when no integer solution exists.
// Throws std::invalid_argument on a length mismatch.
std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& m,
                                                    const std::vector<mpz_class>& b);

// Basis of { x : M x = 0 } as columns of a cols x k matrix.
IntMatrix kernel_basis(const IntMatrix& m);

}  // namespace ycalc
