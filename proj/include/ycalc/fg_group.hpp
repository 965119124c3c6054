#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ycalc/int_matrix.hpp"

namespace ycalc {

class FGGroup;

// Element of a presented Abelian group: owner identity plus coordinates
// over the owner's generators. Arithmetic across different groups is an
// error, not a coercion.
struct GroupElem {
    std::uint64_t group_id = 0;
    std::vector<mpz_class> coords;

    friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

// Finitely generated Abelian group Z^n / column-span(relations).
// Immutable after construction; the SNF of the relation matrix is cached
// so normal forms and membership tests are cheap.
class FGGroup {
public:
    FGGroup(std::size_t gen_count, IntMatrix relations);

    std::size_t gen_count() const { return gen_count_; }
    const IntMatrix& relations() const { return relations_; }
    std::uint64_t id() const { return id_; }

    std::size_t free_rank() const { return invariants_.free_rank; }
    const std::vector<mpz_class>& torsion() const { return invariants_.torsion; }
    const CokernelInvariants& invariants() const { return invariants_; }

    GroupElem element(std::vector<mpz_class> coords) const;
    GroupElem zero() const;
    GroupElem generator(std::size_t i) const;

    // Canonical representative of the coset of v. normalize is idempotent
    // and normalize(a) == normalize(b) iff a - b lies in the relation span.
    GroupElem normalize(const GroupElem& v) const;
    GroupElem add(const GroupElem& a, const GroupElem& b) const;
    GroupElem negate(const GroupElem& a) const;
    bool is_zero(const GroupElem& v) const;
    bool equal(const GroupElem& a, const GroupElem& b) const;

private:
    void check_owner(const GroupElem& v) const;

    std::uint64_t id_;
    std::size_t gen_count_;
    IntMatrix relations_;
    SmithNormalForm snf_;  // of relations_, without V
    CokernelInvariants invariants_;
};

FGGroup group_from_presentation(std::size_t gen_count,
                                const std::vector<std::vector<mpz_class>>& relators);

// Homomorphism between presented groups, as a generator-image matrix.
// Construction validates that every relator of the domain maps into the
// relation span of the codomain, so ill-defined maps fail fast.
struct Hom {
    Hom(const FGGroup& domain, const FGGroup& codomain, IntMatrix map);

    GroupElem apply(const FGGroup& domain, const FGGroup& codomain, const GroupElem& v) const;

    std::uint64_t domain_id;
    std::uint64_t codomain_id;
    IntMatrix matrix;  // codomain.gen_count x domain.gen_count
};

struct QuotientResult {
    FGGroup group;
    IntMatrix projection;  // identity on generators
};

// Quotient by the subgroup generated by the given elements.
QuotientResult quotient(const FGGroup& g, const std::vector<GroupElem>& subgen);

struct PullbackResult {
    FGGroup group;
    IntMatrix pr1;  // generators of G1 coordinates
    IntMatrix pr2;
};

// Pullback of f1: G1 -> G0 and f2: G2 -> G0, as the subgroup of G1 x G2
// on which the images agree, presented on a computed generating set.
PullbackResult pullback(const FGGroup& g1, const FGGroup& g2, const FGGroup& g0,
                        const Hom& f1, const Hom& f2);

}  // namespace ycalc
