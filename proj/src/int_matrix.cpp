#include "ycalc/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ycalc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<mpz_class> IntMatrix::column(std::size_t c) const {
    std::vector<mpz_class> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void IntMatrix::set_column(std::size_t c, const std::vector<mpz_class>& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const mpz_class& bkj = b.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

std::vector<mpz_class> operator*(const IntMatrix& a, const std::vector<mpz_class>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<mpz_class> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && v[j] != 0) out[i] += a.at(i, j) * v[j];
    return out;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row count mismatch");
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    return out;
}

std::vector<mpz_class> SmithNormalForm::diagonal() const {
    std::size_t k = std::min(d.rows(), d.cols());
    std::vector<mpz_class> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = d.at(i, i);
    return out;
}

namespace {

// Elementary operations applied simultaneously to the work matrix and the
// transform accumulators. Row op E on A means U <- E U and Uinv <- Uinv E^-1.
struct SnfWork {
    IntMatrix a;
    IntMatrix u, u_inv, v;
    bool track_u = false;
    bool track_v = false;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        if (track_u) {
            for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
            for (std::size_t r = 0; r < u_inv.rows(); ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
        }
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        if (track_v)
            for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row_i -= q * row_j
    void add_row(std::size_t i, std::size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.at(j, c) != 0) a.at(i, c) -= q * a.at(j, c);
        if (track_u) {
            for (std::size_t c = 0; c < u.cols(); ++c)
                if (u.at(j, c) != 0) u.at(i, c) -= q * u.at(j, c);
            // Uinv <- Uinv * (I + q e_ij): col_j += q * col_i
            for (std::size_t r = 0; r < u_inv.rows(); ++r)
                if (u_inv.at(r, i) != 0) u_inv.at(r, j) += q * u_inv.at(r, i);
        }
    }
    // col_i -= q * col_j
    void add_col(std::size_t i, std::size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a.at(r, j) != 0) a.at(r, i) -= q * a.at(r, j);
        if (track_v)
            for (std::size_t r = 0; r < v.rows(); ++r)
                if (v.at(r, j) != 0) v.at(r, i) -= q * v.at(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        if (track_u) {
            for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
            for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv.at(r, i) = -u_inv.at(r, i);
        }
    }
};

// Smallest nonzero magnitude in A[t.., t..], row-major scan, first hit wins.
// A magnitude-1 entry is optimal, so the scan stops there.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
            const mpz_class& e = a.at(i, j);
            if (e == 0) continue;
            mpz_class mag = abs(e);
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
                if (best == 1) return true;
            }
        }
    }
    return found;
}

SmithNormalForm snf_impl(const IntMatrix& m, bool track_u, bool track_v) {
    SnfWork w;
    w.a = m;
    w.track_u = track_u;
    w.track_v = track_v;
    if (track_u) {
        w.u = IntMatrix::identity(m.rows());
        w.u_inv = IntMatrix::identity(m.rows());
    }
    if (track_v) w.v = IntMatrix::identity(m.cols());

    const std::size_t n = m.rows(), mm = m.cols();
    for (std::size_t t = 0; t < std::min(n, mm); ++t) {
        for (;;) {
            std::size_t pi = 0, pj = 0;
            if (!find_pivot(w.a, t, pi, pj)) goto done;
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t r = t + 1; r < n; ++r) {
                if (w.a.at(r, t) == 0) continue;
                mpz_class q = w.a.at(r, t) / w.a.at(t, t);  // truncated division
                w.add_row(r, t, q);
                if (w.a.at(r, t) != 0) clean = false;  // remainder: smaller pivot exists
            }
            for (std::size_t c = t + 1; c < mm; ++c) {
                if (w.a.at(t, c) == 0) continue;
                mpz_class q = w.a.at(t, c) / w.a.at(t, t);
                w.add_col(c, t, q);
                if (w.a.at(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the remaining submatrix for the chain
            // d1 | d2 | ... to hold; fold a bad row in and retry.
            bool divides = true;
            for (std::size_t r = t + 1; r < n && divides; ++r)
                for (std::size_t c = t + 1; c < mm; ++c)
                    if (w.a.at(r, c) % w.a.at(t, t) != 0) {
                        w.add_row(t, r, mpz_class(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.a.at(t, t) < 0) w.negate_row(t);
    }
done:
    SmithNormalForm out;
    out.d = std::move(w.a);
    out.u = std::move(w.u);
    out.u_inv = std::move(w.u_inv);
    out.v = std::move(w.v);
    return out;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) { return snf_impl(m, true, true); }

SmithNormalForm smith_normal_form_no_v(const IntMatrix& m) { return snf_impl(m, true, false); }

CokernelInvariants cokernel_invariants(const IntMatrix& m) {
    SmithNormalForm snf = snf_impl(m, false, false);
    CokernelInvariants out;
    std::size_t nonzero = 0;
    for (const mpz_class& d : snf.diagonal()) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) out.torsion.push_back(d);
    }
    out.free_rank = m.rows() - nonzero;
    return out;
}

std::size_t integer_rank(const IntMatrix& m) {
    SmithNormalForm snf = snf_impl(m, false, false);
    std::size_t r = 0;
    for (const mpz_class& d : snf.diagonal())
        if (d != 0) ++r;
    return r;
}

std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& m,
                                                    const std::vector<mpz_class>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_integer: length mismatch");
    SmithNormalForm snf = snf_impl(m, true, true);
    std::vector<mpz_class> ub = snf.u * b;
    std::vector<mpz_class> y(m.cols());
    std::size_t k = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const mpz_class d = i < k ? snf.d.at(i, i) : mpz_class(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    return snf.v * y;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithNormalForm snf = snf_impl(m, false, true);
    std::size_t k = std::min(m.rows(), m.cols());
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j >= k || snf.d.at(j, j) == 0) free_cols.push_back(j);
    IntMatrix out(m.cols(), free_cols.size());
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx)
        for (std::size_t r = 0; r < m.cols(); ++r) out.at(r, idx) = snf.v.at(r, free_cols[idx]);
    return out;
}

}  // namespace ycalc
