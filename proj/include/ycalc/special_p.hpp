#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ycalc/bool_poly.hpp"
#include "ycalc/fg_group.hpp"
#include "ycalc/homology.hpp"

namespace ycalc {

// An Abelian group with a distinguished element of order at most 2, the
// input shape of the A_1 functor when the group is finitely presented.
struct SpecialGroup {
    FGGroup group;
    GroupElem special;

    SpecialGroup(FGGroup g, GroupElem s);  // validates 2s = 0
};

// Element of P = H x_{H_(2)} B^(1), in crossed-product form: the pair
// (h, eps) stands for (h, h-bar + eps * 1-bar). Addition carries the
// intersection cocycle, which is symmetric mod 2, so P is Abelian.
struct PElem {
    HClass h;
    int eps = 0;

    PElem() = default;
    PElem(HClass h_, int eps_) : h(std::move(h_)), eps(eps_ & 1) {}

    int genus() const { return h.genus; }

    friend bool operator==(const PElem&, const PElem&) = default;
    friend auto operator<=>(const PElem&, const PElem&) = default;
};

PElem p_zero(int genus);

// (h1,e1) + (h2,e2) = (h1+h2, e1+e2+h1.h2)
PElem p_add(const PElem& a, const PElem& b);
PElem p_negate(const PElem& a);

HClass p_proj(const PElem& z);

// e(z) = h-bar + eps * 1-bar, an affine function on the quadratic forms.
BoolPoly e_map(const PElem& z);

// Section s(h) = (h, 0) of p. Not additive: the defect is the mod-2
// intersection cocycle.
PElem section_s(const HClass& h);

// The special element (0, 1), of order 2.
PElem special_of_p(int genus);

struct PDecomposition {
    std::vector<long long> coeffs;  // over (e_1,0) .. (e_2g,0), in that order
    int delta = 0;                  // coefficient of (0,1)
};

// z = sum_j coeffs[j] * (e_j, 0), accumulated left to right with p_add,
// plus delta * (0,1). Exact: re-summing reconstructs z.
PDecomposition decompose(const PElem& z);

std::string to_string(const PElem& z);  // "(c1,...,c2g;eps)"

}  // namespace ycalc
