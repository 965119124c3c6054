#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "ycalc/gf2.hpp"
#include "ycalc/int_matrix.hpp"

using namespace ycalc;

namespace {

IntMatrix from_rows(std::vector<std::vector<long>> rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

void check_snf_contract(const IntMatrix& m) {
    SmithNormalForm snf = smith_normal_form(m);
    CHECK(snf.u * m * snf.v == snf.d);
    CHECK(snf.u * snf.u_inv == IntMatrix::identity(m.rows()));
    if (m.rows() <= 8) {
        mpz_class det = testutil::determinant(snf.u);
        CHECK((det == 1 || det == -1));
    }
    if (m.cols() <= 8) {
        mpz_class det = testutil::determinant(snf.v);
        CHECK((det == 1 || det == -1));
    }
    auto diag = snf.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        if (diag[i] == 0) CHECK(diag[i + 1] == 0);
    }
    for (std::size_t r = 0; r < snf.d.rows(); ++r)
        for (std::size_t c = 0; c < snf.d.cols(); ++c)
            if (r != c) CHECK(snf.d.at(r, c) == 0);
}

}  // namespace

TEST_CASE("snf of diag(2,3) is diag(1,6)") {
    IntMatrix m = from_rows({{2, 0}, {0, 3}});
    SmithNormalForm snf = smith_normal_form(m);
    CHECK(snf.d.at(0, 0) == 1);
    CHECK(snf.d.at(1, 1) == 6);
    check_snf_contract(m);
}

TEST_CASE("snf of zero and identity matrices") {
    IntMatrix zero(2, 2);
    SmithNormalForm s0 = smith_normal_form(zero);
    CHECK(s0.d == zero);
    check_snf_contract(zero);

    IntMatrix id = IntMatrix::identity(3);
    SmithNormalForm s1 = smith_normal_form(id);
    CHECK(s1.d == id);
}

TEST_CASE("snf handles empty shapes") {
    check_snf_contract(IntMatrix(0, 0));
    check_snf_contract(IntMatrix(0, 3));
    check_snf_contract(IntMatrix(3, 0));
}

TEST_CASE("snf contract on random matrices") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        check_snf_contract(testutil::random_matrix(rng, r, c, 9));
    }
}

TEST_CASE("snf survives coefficient swell past 64 bits") {
    std::mt19937_64 rng(2027);
    for (int it = 0; it < 8; ++it) {
        IntMatrix m = testutil::random_matrix(rng, 7, 7, 1000000);
        SmithNormalForm snf = smith_normal_form(m);
        CHECK(snf.u * m * snf.v == snf.d);
        auto diag = snf.diagonal();
        for (std::size_t i = 0; i + 1 < diag.size(); ++i)
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        // the product of the invariant factors is |det|, which does not
        // fit in 64 bits at this entry size
        mpz_class det = testutil::determinant(m);
        mpz_class prod = 1;
        for (const auto& d : diag) prod *= d;
        mpz_class mag = det < 0 ? mpz_class(-det) : det;
        CHECK(prod == mag);
    }
}

TEST_CASE("snf without the right transform matches the full diagonal") {
    std::mt19937_64 rng(2029);
    for (int it = 0; it < 20; ++it) {
        IntMatrix m = testutil::random_matrix(rng, 5, 7, 8);
        SmithNormalForm full = smith_normal_form(m);
        SmithNormalForm nov = smith_normal_form_no_v(m);
        CHECK(full.d == nov.d);
        CHECK(nov.u * nov.u_inv == IntMatrix::identity(5));
    }
}

TEST_CASE("cokernel invariants: cyclic, free, torsion drop") {
    CHECK(cokernel_invariants(from_rows({{2}})) == CokernelInvariants{0, {2}});
    CHECK(cokernel_invariants(IntMatrix(3, 0)) == CokernelInvariants{3, {}});
    // unit diagonal entries are dropped from the list
    CHECK(cokernel_invariants(from_rows({{1, 0}, {0, 4}})) == CokernelInvariants{0, {4}});
}

TEST_CASE("cokernel invariants stable under row and column operations") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 30; ++it) {
        IntMatrix m = testutil::random_matrix(rng, 4, 5, 6);
        CokernelInvariants base = cokernel_invariants(m);

        IntMatrix col_op = m;
        for (std::size_t r = 0; r < 4; ++r) col_op.at(r, 0) += 3 * col_op.at(r, 2);
        CHECK(cokernel_invariants(col_op) == base);

        // a row operation is a change of basis of the generator set
        IntMatrix row_op = m;
        for (std::size_t c = 0; c < 5; ++c) row_op.at(1, c) -= 2 * row_op.at(3, c);
        CHECK(cokernel_invariants(row_op) == base);
    }
}

TEST_CASE("solve_integer basics") {
    CHECK(solve_integer(from_rows({{2}}), {mpz_class(4)}) ==
          std::vector<mpz_class>{mpz_class(2)});
    CHECK(!solve_integer(from_rows({{2}}), {mpz_class(3)}));
    CHECK_THROWS_AS((void)solve_integer(from_rows({{2}}), {mpz_class(1), mpz_class(2)}),
                    std::invalid_argument);
}

TEST_CASE("solve_integer on random solvable systems") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        IntMatrix m = testutil::random_matrix(rng, 4, 3, 5);
        std::vector<mpz_class> x(3);
        for (auto& v : x) v = static_cast<long>(rng() % 7) - 3;
        auto sol = solve_integer(m, m * x);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == m * x);
    }
}

TEST_CASE("kernel basis spans a saturated lattice of the right rank") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 30; ++it) {
        IntMatrix m = testutil::random_matrix(rng, 3, 5, 4);
        IntMatrix k = kernel_basis(m);
        IntMatrix prod = m * k;
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t c = 0; c < prod.cols(); ++c) CHECK(prod.at(r, c) == 0);
        CHECK(k.cols() == 5 - integer_rank(m));
        // the kernel is a direct summand, so the basis must be primitive
        CHECK(cokernel_invariants(k).torsion.empty());
    }
}

TEST_CASE("gf2 rank examples") {
    GF2Matrix id(4, 4);
    for (int i = 0; i < 4; ++i) id.set(i, i, true);
    CHECK(gf2_rank(id) == 4);

    GF2Matrix ones(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ones.set(i, j, true);
    CHECK(gf2_rank(ones) == 1);
}

TEST_CASE("gf2 rank matches mod-2 reduction of an integer lift") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 30; ++it) {
        GF2Matrix m(5, 6);
        IntMatrix lift(5, 6);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 6; ++c) {
                bool bit = rng() & 1;
                m.set(r, c, bit);
                // any integer lift with the right parity
                lift.at(r, c) = (bit ? 1 : 0) + 2 * static_cast<long>(rng() % 5);
            }
        // rank over GF(2) of the lift: diagonal odd entries of its SNF
        SmithNormalForm snf = smith_normal_form(lift);
        std::size_t odd = 0;
        for (const auto& d : snf.diagonal())
            if (d % 2 != 0) ++odd;
        CHECK(gf2_rank(m) == odd);
    }
}

TEST_CASE("gf2 solve") {
    GF2Matrix m(3, 2);
    m.set(0, 0, true);
    m.set(1, 1, true);
    m.set(2, 0, true);
    m.set(2, 1, true);
    auto sol = gf2_solve(m, {1, 1, 0});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 1);
    CHECK((*sol)[1] == 1);
    CHECK(!gf2_solve(m, {1, 1, 1}));
}

TEST_CASE("gf2 solve returns actual solutions on random solvable systems") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 40; ++it) {
        GF2Matrix m(6, 4);
        std::vector<std::uint8_t> x0(4);
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = 0; c < 4; ++c) m.set(r, c, rng() & 1);
        for (auto& b : x0) b = rng() & 1;
        std::vector<std::uint8_t> rhs(6, 0);
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = 0; c < 4; ++c) rhs[r] ^= (m.get(r, c) & x0[c]);
        auto sol = gf2_solve(m, rhs);
        REQUIRE(sol.has_value());
        for (std::size_t r = 0; r < 6; ++r) {
            std::uint8_t acc = 0;
            for (std::size_t c = 0; c < 4; ++c) acc ^= (m.get(r, c) & (*sol)[c]);
            CHECK(acc == rhs[r]);
        }
    }
}

TEST_CASE("gf2 row space reduction is canonical on cosets") {
    GF2RowSpace space(4);
    space.add_row({1, 1, 0, 0});
    space.add_row({0, 0, 1, 1});
    CHECK(space.rank() == 2);
    CHECK(space.reduce({1, 1, 1, 1}) == std::vector<std::uint8_t>{0, 0, 0, 0});
    CHECK(space.contains({1, 1, 0, 0}));
    CHECK(!space.contains({1, 0, 0, 0}));
    CHECK(space.reduce({1, 0, 0, 0}) == space.reduce({0, 1, 0, 0}));
}
