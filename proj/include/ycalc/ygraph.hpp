#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "ycalc/bool_poly.hpp"
#include "ycalc/fg_group.hpp"
#include "ycalc/gf2.hpp"
#include "ycalc/homology.hpp"
#include "ycalc/int_matrix.hpp"
#include "ycalc/special_p.hpp"

namespace ycalc {

// Label arithmetic for the special Abelian groups the functor acts on.
inline PElem label_add(const PElem& a, const PElem& b) { return p_add(a, b); }
inline HClass label_add(const HClass& a, const HClass& b) { return a + b; }
inline BoolPoly label_add(const BoolPoly& a, const BoolPoly& b) { return a + b; }

template <class Label>
Label label_special(int genus);
template <>
inline PElem label_special<PElem>(int genus) { return special_of_p(genus); }
template <>
inline HClass label_special<HClass>(int genus) { return HClass::zero(genus); }
template <>
inline BoolPoly label_special<BoolPoly>(int genus) { return BoolPoly::one(genus); }

inline int label_genus(const PElem& z) { return z.genus(); }
inline int label_genus(const HClass& z) { return z.genus; }
inline int label_genus(const BoolPoly& z) { return z.genus; }

// Formal integer combination of Y-shaped generators with labels in a
// special Abelian group. A generator is invariant under cyclic rotation
// of its three labels, so triples are stored rotated to put the smallest
// label first; no other relation is imposed at storage time.
template <class Label>
class BasicYExpr {
public:
    using Triple = std::array<Label, 3>;

    explicit BasicYExpr(int genus) : genus_(genus) {}

    static Triple rotate_canonical(Triple t) {
        Triple best = t;
        for (int r = 0; r < 2; ++r) {
            t = Triple{t[1], t[2], t[0]};
            if (t < best) best = t;
        }
        return best;
    }

    int genus() const { return genus_; }
    const std::map<Triple, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long long coeff, const Label& z1, const Label& z2, const Label& z3) {
        if (label_genus(z1) != genus_ || label_genus(z2) != genus_ || label_genus(z3) != genus_)
            throw std::invalid_argument("YExpr: label genus mismatch");
        if (coeff == 0) return;
        Triple key = rotate_canonical(Triple{z1, z2, z3});
        auto [it, inserted] = terms_.emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BasicYExpr& operator+=(const BasicYExpr& other) {
        if (other.genus_ != genus_) throw std::invalid_argument("YExpr +: genus mismatch");
        for (const auto& [t, c] : other.terms_) add_term(c, t[0], t[1], t[2]);
        return *this;
    }
    BasicYExpr& operator-=(const BasicYExpr& other) {
        if (other.genus_ != genus_) throw std::invalid_argument("YExpr -: genus mismatch");
        for (const auto& [t, c] : other.terms_) add_term(-c, t[0], t[1], t[2]);
        return *this;
    }

    friend BasicYExpr operator+(BasicYExpr a, const BasicYExpr& b) { return a += b; }
    friend BasicYExpr operator-(BasicYExpr a, const BasicYExpr& b) { return a -= b; }
    friend bool operator==(const BasicYExpr&, const BasicYExpr&) = default;

private:
    int genus_;
    std::map<Triple, long long> terms_;
};

using YExpr = BasicYExpr<PElem>;

inline YExpr y_generator(long long coeff, const PElem& z1, const PElem& z2, const PElem& z3) {
    YExpr x(z1.genus());
    x.add_term(coeff, z1, z2, z3);
    return x;
}

// Canonical coordinates of an A_1(P) class: a pair of an integral wedge
// and a degree <= 3 Boolean polynomial whose cubic part is the mod-2
// shadow of the wedge.
struct PullbackElem {
    Wedge3 u;
    BoolPoly f;

    int genus() const { return u.genus; }
    bool is_zero() const { return u.is_zero() && f.is_zero(); }

    friend bool operator==(const PullbackElem&, const PullbackElem&) = default;
};

bool pullback_compatible(const PullbackElem& v);
PullbackElem make_pullback_elem(Wedge3 u, BoolPoly f);  // throws on shadow mismatch
PullbackElem pullback_zero(int genus);
PullbackElem operator+(const PullbackElem& a, const PullbackElem& b);
PullbackElem operator-(const PullbackElem& a, const PullbackElem& b);

// rho(Y[z1,z2,z3]) = (p(z1)^p(z2)^p(z3), e(z1)e(z2)e(z3)), extended
// additively. A complete invariant of the class.
PullbackElem rho(const YExpr& x);

// The canonical form of an A_1(P) class is its rho coordinates; the
// presentation built below is kept solely as an independent oracle.
PullbackElem normalize(const YExpr& x);

// Section of rho, defined on the monomial basis of the pullback.
// rho(epsilon(v)) = v exactly; throws when v violates the shadow
// compatibility.
YExpr epsilon(const PullbackElem& v);

// Multiplying the labels identifies A_1(B^(1), 1) with B^(3).
BoolPoly gamma(const BasicYExpr<BoolPoly>& x);

// Section of gamma on the monomial basis of B^(3).
BasicYExpr<BoolPoly> epsilon_b3(const BoolPoly& f);

// Wedging the labels identifies A_1(H, 0) with Lambda^3 H.
Wedge3 wedge_class(const BasicYExpr<HClass>& x);

// Relabel generators along a morphism of special Abelian groups. The map
// is spot-checked on the standard generating set of P: it must preserve
// the special element and be additive.
template <class F>
auto a1_map(F&& fp, const YExpr& x)
    -> BasicYExpr<decltype(fp(std::declval<const PElem&>()))> {
    using Target = decltype(fp(std::declval<const PElem&>()));
    const int g = x.genus();
    std::vector<PElem> gens;
    for (std::size_t j = 0; j < h_dim(g); ++j) gens.emplace_back(HClass::basis(g, j), 0);
    gens.push_back(special_of_p(g));
    if (!(fp(special_of_p(g)) == label_special<Target>(g)))
        throw std::invalid_argument("a1_map: map does not preserve the special element");
    for (const auto& a : gens)
        for (const auto& b : gens)
            if (!(fp(p_add(a, b)) == label_add(fp(a), fp(b))))
                throw std::invalid_argument("a1_map: map fails additivity spot check");
    BasicYExpr<Target> out(g);
    for (const auto& [t, c] : x.terms()) out.add_term(c, fp(t[0]), fp(t[1]), fp(t[2]));
    return out;
}

// Standard generating set of P: (e_1,0), ..., (e_2g,0), (0,1).
std::vector<PElem> standard_p_generators(int genus);

// One expression sum_i Y[(x_i,0),(y_i,0),z] per standard generator z.
// Their rho images generate the closed-case subgroup S.
std::vector<YExpr> symplectic_relations(int genus);

// --- presentation oracle ---------------------------------------------

// Finite presentation of A_1(P) on the Y generators over standard
// labels, canonically rotated. Cached per genus; immutable once built.
struct A1Presentation {
    int genus = 0;
    std::vector<std::array<int, 3>> generators;  // label indices, 2g = special
    std::map<std::array<int, 3>, std::size_t> generator_index;
    IntMatrix relators;
    FGGroup group;

    std::size_t index_of(std::array<int, 3> triple) const;
};

const A1Presentation& a1_presentation(int genus);

// Relator matrix: all AS instances, slide instances, multilinearity
// instances among standard generators and their pairwise P-sums, and the
// 2-torsion relators forced by 2*(0,1) = 0.
IntMatrix presentation_matrix(int genus);

// Coordinates of an expression over the presentation generators, by
// multilinear expansion of every label through its canonical
// decomposition.
std::vector<mpz_class> standard_coordinates(const YExpr& x);

// --- pullback coordinates and the closed case -------------------------

std::size_t pullback_free_dim(int genus);  // C(2g,3)
std::size_t pullback_tor_dim(int genus);   // 1 + 2g + C(2g,2)

std::vector<mpz_class> pullback_coords(const PullbackElem& v);
PullbackElem pullback_from_coords(int genus, const std::vector<mpz_class>& coords);

// Cached per-genus data for reducing modulo S.
struct ClosedStructure {
    int genus = 0;
    FGGroup coord_group;        // pullback coordinates modulo S
    FGGroup wedge_quotient;     // Lambda^3 H / omega^H, for eta displays
    GF2RowSpace arf_ideal;      // alpha . B^(1), for beta displays
};

const ClosedStructure& closed_structure(int genus);

// Canonical coset representative modulo S.
struct ClosedClass {
    PullbackElem rep;

    friend bool operator==(const ClosedClass&, const ClosedClass&) = default;
};

ClosedClass close(const YExpr& x);
ClosedClass close(const PullbackElem& v);

// The pullback of Lambda^3 H and B^(3) over Lambda^3 H_(2) built with the
// generic fg_group machinery; the independent route to Theorem-1 scale
// structure numbers.
struct FgPullbackModel {
    FGGroup lambda3;
    FGGroup b3;
    FGGroup lambda3_mod2;
    Hom f1;  // mod-2 reduction on Lambda^3
    Hom f2;  // cubic shadow on B^(3)
    PullbackResult pullback;
};

FgPullbackModel fg_pullback_model(int genus);

}  // namespace ycalc
