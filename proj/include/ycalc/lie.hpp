#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ycalc/homology.hpp"
#include "ycalc/int_matrix.hpp"
#include "ycalc/ygraph.hpp"

namespace ycalc {

// Degree-2 part of the free Lie ring on H, basis { [e_i, e_j] : i < j }
// indexed like Lambda^2.
struct LieElem2 {
    int genus = 0;
    std::vector<long long> coords;

    static LieElem2 zero(int genus);
    friend bool operator==(const LieElem2&, const LieElem2&) = default;
};

LieElem2 operator+(const LieElem2& a, const LieElem2& b);
LieElem2 operator*(long long k, const LieElem2& a);

// Degree-3 part, over the Lyndon basis with letter order e_1 < ... < e_2g.
struct LieElem3 {
    int genus = 0;
    std::vector<long long> coords;

    static LieElem3 zero(int genus);
    bool is_zero() const;
    friend bool operator==(const LieElem3&, const LieElem3&) = default;
};

// Lyndon words of length 3 on 2g letters, lexicographically sorted; this
// is the basis order of LieElem3. Count is ((2g)^3 - 2g) / 3.
const std::vector<std::array<std::size_t, 3>>& lyndon3_words(int genus);
std::size_t lie3_dim(int genus);

LieElem2 bracket(const HClass& a, const HClass& b);

// [a, m] rewritten into the Lyndon basis via antisymmetry and Jacobi.
LieElem3 bracket3(const HClass& a, const LieElem2& m);

// omega = sum [x_i, y_i] in L_2.
LieElem2 omega_l2(int genus);

// Coordinates in H (x) L_2, row-major over (basis of H) x (basis of L_2).
std::size_t hl2_dim(int genus);
std::size_t hl2_index(int genus, std::size_t h_index, std::size_t l2_index);

// nu(x^y^z) = x(x)[y,z] + y(x)[z,x] + z(x)[x,y], extended linearly.
std::vector<long long> nu(const Wedge3& w);

// The bracketing map H (x) L_2 -> L_3 on a coordinate vector.
LieElem3 bracket_tensor(int genus, const std::vector<long long>& hl2);

// A_{g,1} is spanned by sum_i (x_i(x)[h,y_i] - y_i(x)[h,x_i]) for h in
// the basis; A_g adds e_j(x)omega.
std::vector<std::vector<long long>> a_g1_generators(int genus);
std::vector<std::vector<long long>> a_g_generators(int genus);

// Homomorphism H -> L_2(H): one L_2 column per basis vector of H.
struct HomHL2 {
    int genus = 0;
    std::vector<LieElem2> columns;  // 2g columns

    static HomHL2 zero(int genus);
    friend bool operator==(const HomHL2&, const HomHL2&) = default;
};

// h |-> -sum_{i in Z_3} (h . p(z_i)) [p(z_{i+1}), p(z_{i+2})], summed over
// the terms of the expression.
HomHL2 eta1_hom(const YExpr& x);

// The .-duality identification of Hom(H, L_2) with H (x) L_2 that sends
// the hom of a Y generator to nu of its wedge.
std::vector<long long> tensor_of_hom(const HomHL2& f);

struct ExactnessCheck {
    std::string name;
    bool pass = false;
};

struct ExactnessReport {
    int genus = 0;
    std::vector<ExactnessCheck> checks;
    bool all_pass() const;
};

// (a) nu injective; (b) bracket . nu = 0; (c) kernel rank of the bracket
// map equals C(2g,3); (d) h |-> [h,omega] injective; (e) nu injective
// into the A_{g,1} quotient, and after factoring omega^H into the A_g
// quotient; plus nu(omega^H) contained in A_g.
ExactnessReport check_exactness(int genus);

IntMatrix int_matrix_from_columns(std::size_t rows,
                                  const std::vector<std::vector<long long>>& cols);
std::vector<mpz_class> to_mpz(const std::vector<long long>& v);

}  // namespace ycalc
