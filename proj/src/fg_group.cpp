#include "ycalc/fg_group.hpp"

#include <atomic>
#include <stdexcept>

namespace ycalc {

namespace {
std::uint64_t next_group_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}
}  // namespace

FGGroup::FGGroup(std::size_t gen_count, IntMatrix relations)
    : id_(next_group_id()), gen_count_(gen_count), relations_(std::move(relations)) {
    if (relations_.rows() != gen_count_)
        throw std::invalid_argument("FGGroup: relator length does not match generator count");
    snf_ = smith_normal_form_no_v(relations_);
    invariants_ = CokernelInvariants{};
    std::size_t nonzero = 0;
    for (const mpz_class& d : snf_.diagonal()) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) invariants_.torsion.push_back(d);
    }
    invariants_.free_rank = gen_count_ - nonzero;
}

GroupElem FGGroup::element(std::vector<mpz_class> coords) const {
    if (coords.size() != gen_count_)
        throw std::invalid_argument("FGGroup::element: coordinate length mismatch");
    return GroupElem{id_, std::move(coords)};
}

GroupElem FGGroup::zero() const { return GroupElem{id_, std::vector<mpz_class>(gen_count_)}; }

GroupElem FGGroup::generator(std::size_t i) const {
    if (i >= gen_count_) throw std::invalid_argument("FGGroup::generator: index out of range");
    GroupElem e = zero();
    e.coords[i] = 1;
    return e;
}

void FGGroup::check_owner(const GroupElem& v) const {
    if (v.group_id != id_) throw std::invalid_argument("GroupElem belongs to a different group");
    if (v.coords.size() != gen_count_)
        throw std::invalid_argument("GroupElem has wrong coordinate length");
}

GroupElem FGGroup::normalize(const GroupElem& v) const {
    check_owner(v);
    // v is in the relation span iff U v lies in the lattice spanned by the
    // diagonal of D, so reducing U v coordinatewise gives a canonical coset
    // representative once mapped back through U^-1.
    std::vector<mpz_class> w = snf_.u * v.coords;
    std::size_t k = std::min(relations_.rows(), relations_.cols());
    for (std::size_t i = 0; i < k; ++i) {
        const mpz_class& d = snf_.d.at(i, i);
        if (d != 0) {
            mpz_class r = w[i] % d;
            if (r < 0) r += d;
            w[i] = r;
        }
    }
    return GroupElem{id_, snf_.u_inv * w};
}

GroupElem FGGroup::add(const GroupElem& a, const GroupElem& b) const {
    check_owner(a);
    check_owner(b);
    GroupElem out = a;
    for (std::size_t i = 0; i < gen_count_; ++i) out.coords[i] += b.coords[i];
    return normalize(out);
}

GroupElem FGGroup::negate(const GroupElem& a) const {
    check_owner(a);
    GroupElem out = a;
    for (auto& c : out.coords) c = -c;
    return normalize(out);
}

bool FGGroup::is_zero(const GroupElem& v) const {
    GroupElem n = normalize(v);
    for (const auto& c : n.coords)
        if (c != 0) return false;
    return true;
}

bool FGGroup::equal(const GroupElem& a, const GroupElem& b) const {
    return normalize(a).coords == normalize(b).coords;
}

FGGroup group_from_presentation(std::size_t gen_count,
                                const std::vector<std::vector<mpz_class>>& relators) {
    IntMatrix rel(gen_count, relators.size());
    for (std::size_t j = 0; j < relators.size(); ++j) {
        if (relators[j].size() != gen_count)
            throw std::invalid_argument("group_from_presentation: relator length mismatch");
        for (std::size_t i = 0; i < gen_count; ++i) rel.at(i, j) = relators[j][i];
    }
    return FGGroup(gen_count, std::move(rel));
}

Hom::Hom(const FGGroup& domain, const FGGroup& codomain, IntMatrix map)
    : domain_id(domain.id()), codomain_id(codomain.id()), matrix(std::move(map)) {
    if (matrix.rows() != codomain.gen_count() || matrix.cols() != domain.gen_count())
        throw std::invalid_argument("Hom: matrix shape mismatch");
    for (std::size_t j = 0; j < domain.relations().cols(); ++j) {
        GroupElem image = codomain.element(matrix * domain.relations().column(j));
        if (!codomain.is_zero(image))
            throw std::invalid_argument("Hom: relator does not map to zero (ill-defined map)");
    }
}

GroupElem Hom::apply(const FGGroup& domain, const FGGroup& codomain, const GroupElem& v) const {
    if (domain.id() != domain_id || codomain.id() != codomain_id)
        throw std::invalid_argument("Hom::apply: group mismatch");
    if (v.group_id != domain_id) throw std::invalid_argument("Hom::apply: element owner mismatch");
    return codomain.element(matrix * v.coords);
}

QuotientResult quotient(const FGGroup& g, const std::vector<GroupElem>& subgen) {
    IntMatrix rel(g.gen_count(), g.relations().cols() + subgen.size());
    for (std::size_t j = 0; j < g.relations().cols(); ++j)
        for (std::size_t i = 0; i < g.gen_count(); ++i) rel.at(i, j) = g.relations().at(i, j);
    for (std::size_t s = 0; s < subgen.size(); ++s) {
        if (subgen[s].group_id != g.id())
            throw std::invalid_argument("quotient: subgroup element owner mismatch");
        for (std::size_t i = 0; i < g.gen_count(); ++i)
            rel.at(i, g.relations().cols() + s) = subgen[s].coords[i];
    }
    return QuotientResult{FGGroup(g.gen_count(), std::move(rel)),
                          IntMatrix::identity(g.gen_count())};
}

PullbackResult pullback(const FGGroup& g1, const FGGroup& g2, const FGGroup& g0,
                        const Hom& f1, const Hom& f2) {
    if (f1.domain_id != g1.id() || f2.domain_id != g2.id() || f1.codomain_id != g0.id() ||
        f2.codomain_id != g0.id())
        throw std::invalid_argument("pullback: homomorphism endpoints do not match");

    const std::size_t n1 = g1.gen_count(), n2 = g2.gen_count();

    // (a, b) satisfies f1 a = f2 b in G0 iff f1 a - f2 b + R0 t = 0 for
    // some t, so the admissible pairs are the projection of a kernel.
    IntMatrix neg_f2 = f2.matrix;
    for (std::size_t r = 0; r < neg_f2.rows(); ++r)
        for (std::size_t c = 0; c < neg_f2.cols(); ++c) neg_f2.at(r, c) = -neg_f2.at(r, c);
    IntMatrix phi = hconcat(hconcat(f1.matrix, neg_f2), g0.relations());
    IntMatrix ker = kernel_basis(phi);

    IntMatrix gens(n1 + n2, ker.cols());  // generating set of the pair lattice
    for (std::size_t r = 0; r < n1 + n2; ++r)
        for (std::size_t c = 0; c < ker.cols(); ++c) gens.at(r, c) = ker.at(r, c);

    // Relations: coordinates, over those generators, of R1 + R2.
    IntMatrix r12 = block_diag(g1.relations(), g2.relations());
    IntMatrix ker2 = kernel_basis(hconcat(gens, r12));
    IntMatrix rel(gens.cols(), ker2.cols());
    for (std::size_t r = 0; r < gens.cols(); ++r)
        for (std::size_t c = 0; c < ker2.cols(); ++c) rel.at(r, c) = ker2.at(r, c);

    IntMatrix pr1(n1, gens.cols()), pr2(n2, gens.cols());
    for (std::size_t c = 0; c < gens.cols(); ++c) {
        for (std::size_t r = 0; r < n1; ++r) pr1.at(r, c) = gens.at(r, c);
        for (std::size_t r = 0; r < n2; ++r) pr2.at(r, c) = gens.at(n1 + r, c);
    }
    return PullbackResult{FGGroup(gens.cols(), std::move(rel)), std::move(pr1), std::move(pr2)};
}

}  // namespace ycalc
