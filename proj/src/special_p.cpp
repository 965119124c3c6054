#include "ycalc/special_p.hpp"

#include <stdexcept>

namespace ycalc {

SpecialGroup::SpecialGroup(FGGroup g, GroupElem s)
    : group(std::move(g)), special(std::move(s)) {
    GroupElem twice = group.add(special, special);
    if (!group.is_zero(twice))
        throw std::invalid_argument("SpecialGroup: special element must have order at most 2");
}

PElem p_zero(int genus) { return PElem(HClass::zero(genus), 0); }

PElem p_add(const PElem& a, const PElem& b) {
    if (a.genus() != b.genus()) throw std::invalid_argument("p_add: genus mismatch");
    int cocycle = static_cast<int>(intersection(a.h, b.h) & 1);
    return PElem(a.h + b.h, a.eps ^ b.eps ^ cocycle);
}

PElem p_negate(const PElem& a) {
    // (h,e) + (-h, e') = (0, e + e' + h.(-h)) and h.(-h) = 0, so the
    // inverse keeps the same eps.
    return PElem(-1LL * a.h, a.eps);
}

HClass p_proj(const PElem& z) { return z.h; }

BoolPoly e_map(const PElem& z) {
    BoolPoly f = affine_of_h(z.h);
    if (z.eps) f = f + BoolPoly::one(z.genus());
    return f;
}

PElem section_s(const HClass& h) { return PElem(h, 0); }

PElem special_of_p(int genus) { return PElem(HClass::zero(genus), 1); }

PDecomposition decompose(const PElem& z) {
    PDecomposition out;
    out.coeffs = z.h.coords;
    PElem acc = p_zero(z.genus());
    for (std::size_t j = 0; j < out.coeffs.size(); ++j) {
        // c * (e_j, 0) = (c e_j, 0) since e_j . e_j = 0
        PElem piece(out.coeffs[j] * HClass::basis(z.genus(), j), 0);
        acc = p_add(acc, piece);
    }
    out.delta = z.eps ^ acc.eps;
    return out;
}

std::string to_string(const PElem& z) {
    return "(" + to_string(z.h) + ";" + std::to_string(z.eps) + ")";
}

}  // namespace ycalc
