#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ycalc/homology.hpp"
#include "ycalc/quad_form.hpp"

namespace ycalc {

// Multilinear polynomial over GF(2) in 2g idempotent variables, i.e. a
// Z_2-valued polynomial function on the quadratic forms. Monomials are
// stored as bit masks over {1..2g}, so t_i^2 = t_i is structural: a
// product of monomials is the union of their masks. The support is kept
// sorted with no repeats; two polynomials are equal as functions iff
// their supports are equal.
struct BoolPoly {
    int genus = 0;
    std::vector<std::uint32_t> support;  // sorted masks; empty mask = constant 1

    static BoolPoly zero(int genus) { return BoolPoly{genus, {}}; }
    static BoolPoly one(int genus) { return BoolPoly{genus, {0}}; }
    static BoolPoly variable(int genus, std::size_t index);  // t for e_index

    bool is_zero() const { return support.empty(); }
    // Degree of the zero polynomial is 0, so filtration checks are total.
    int degree() const;

    friend bool operator==(const BoolPoly&, const BoolPoly&) = default;
    friend auto operator<=>(const BoolPoly&, const BoolPoly&) = default;
};

BoolPoly operator+(const BoolPoly& f, const BoolPoly& g);
BoolPoly multiply(const BoolPoly& f, const BoolPoly& g);
BoolPoly operator*(const BoolPoly& f, const BoolPoly& g);

// The affine function h-bar: q |-> q(h). Expanding over the basis picks
// up the intersection cross terms, so for h = sum c_j e_j this is
// sum (c_j mod 2) t_j + (sum_i c_i c_{g+i} mod 2) 1.
BoolPoly affine_of_h(const HClass& h);

int evaluate(const BoolPoly& f, const QForm& q);

// Arf element alpha = sum x_i-bar y_i-bar.
BoolPoly arf(int genus);

// B^(1)/B^(0) ~ H_(2): drop the constant, t_j |-> e_j. Degree must be <= 1.
H2Class kappa(const BoolPoly& f);

// B^(3)/B^(2) ~ Lambda^3 H_(2): keep only the size-3 monomials. Degree <= 3.
Wedge3Mod2 deg3_shadow(const BoolPoly& f);

// Generators of alpha . B^(1): alpha itself plus alpha . t_j, canonical forms.
std::vector<BoolPoly> arf_ideal_generators(int genus);

// Monomial basis of B^(3): masks of size <= 3 ordered by size then value.
const std::vector<std::uint32_t>& b3_monomials(int genus);
std::size_t b3_dim(int genus);
std::size_t b3_monomial_index(int genus, std::uint32_t mask);

// Coordinates of a degree <= 3 polynomial over that basis, and back.
std::vector<std::uint8_t> b3_coords(const BoolPoly& f);
BoolPoly poly_from_b3_coords(int genus, const std::vector<std::uint8_t>& coords);

std::string to_string(const BoolPoly& f);
// Syntax: sums of monomials, e.g. "x1*y1 + x2 + 1"; "0" for the zero poly.
BoolPoly parse_bool_poly(int genus, const std::string& text);

}  // namespace ycalc
