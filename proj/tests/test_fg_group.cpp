#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "ycalc/fg_group.hpp"
#include "ycalc/gf2.hpp"
#include "ycalc/ygraph.hpp"

using namespace ycalc;

namespace {

std::vector<mpz_class> vec(std::vector<long> v) {
    std::vector<mpz_class> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

}  // namespace

TEST_CASE("group presentations: cyclic and free") {
    FGGroup z2 = group_from_presentation(1, {vec({2})});
    CHECK(z2.free_rank() == 0);
    CHECK(z2.torsion() == std::vector<mpz_class>{2});

    FGGroup free2 = group_from_presentation(2, {});
    CHECK(free2.free_rank() == 2);
    CHECK(free2.torsion().empty());

    CHECK_THROWS_AS(group_from_presentation(2, {vec({1})}), std::invalid_argument);
}

TEST_CASE("graph group presentation at genus 2 has Habiro invariants") {
    FGGroup g = FGGroup(a1_presentation(2).generators.size(), presentation_matrix(2));
    CHECK(g.free_rank() == 4);
    CHECK(g.torsion() == std::vector<mpz_class>(11, mpz_class(2)));
}

TEST_CASE("normalize gives canonical representatives") {
    FGGroup z2 = group_from_presentation(1, {vec({2})});
    CHECK(z2.normalize(z2.element(vec({3}))).coords == vec({1}));
    CHECK(z2.normalize(z2.element(vec({0}))).coords == vec({0}));

    std::mt19937_64 rng(3);
    for (int it = 0; it < 40; ++it) {
        IntMatrix rel = testutil::random_matrix(rng, 4, 3, 5);
        FGGroup g(4, rel);
        GroupElem v = g.element(vec({long(rng() % 9) - 4, long(rng() % 9) - 4,
                                     long(rng() % 9) - 4, long(rng() % 9) - 4}));
        GroupElem n = g.normalize(v);
        CHECK(g.normalize(n).coords == n.coords);  // idempotent
        // v - n lies in the relation span
        GroupElem diff = v;
        for (std::size_t i = 0; i < 4; ++i) diff.coords[i] -= n.coords[i];
        CHECK(g.is_zero(diff));
        // shifting by a relator does not change the normal form
        GroupElem shifted = v;
        for (std::size_t i = 0; i < 4; ++i) shifted.coords[i] += rel.at(i, 0);
        CHECK(g.normalize(shifted).coords == n.coords);
        // adding canonical forms renormalizes consistently
        GroupElem w = g.element(vec({long(rng() % 9) - 4, long(rng() % 9) - 4,
                                     long(rng() % 9) - 4, long(rng() % 9) - 4}));
        GroupElem direct = v;
        for (std::size_t i = 0; i < 4; ++i) direct.coords[i] += w.coords[i];
        CHECK(g.add(g.normalize(v), g.normalize(w)).coords == g.normalize(direct).coords);
    }
}

TEST_CASE("a slide relation instance normalizes to zero in the genus-1 graph group") {
    const A1Presentation& pres = a1_presentation(1);
    YExpr diff(1);
    PElem x1 = section_s(HClass::x(1, 1));
    PElem s = special_of_p(1);
    diff.add_term(1, x1, x1, s);
    diff.add_term(-1, s, x1, s);
    GroupElem e = pres.group.element(standard_coordinates(diff));
    CHECK(pres.group.is_zero(e));
}

TEST_CASE("cross-group arithmetic is rejected") {
    FGGroup a = group_from_presentation(1, {vec({2})});
    FGGroup b = group_from_presentation(1, {vec({2})});
    CHECK_THROWS_AS(a.normalize(b.element(vec({1}))), std::invalid_argument);
    CHECK_THROWS_AS(a.add(a.element(vec({1})), b.element(vec({1}))), std::invalid_argument);
}

TEST_CASE("hom construction validates relators") {
    FGGroup z4 = group_from_presentation(1, {vec({4})});
    FGGroup z2 = group_from_presentation(1, {vec({2})});
    IntMatrix one(1, 1);
    one.at(0, 0) = 1;
    CHECK_NOTHROW(Hom(z4, z2, one));          // Z/4 -> Z/2 is fine
    CHECK_THROWS_AS(Hom(z2, z4, one), std::invalid_argument);  // Z/2 -> Z/4 is not
}

TEST_CASE("quotient examples") {
    FGGroup z = group_from_presentation(1, {});
    QuotientResult q = quotient(z, {z.element(vec({2}))});
    CHECK(q.group.free_rank() == 0);
    CHECK(q.group.torsion() == std::vector<mpz_class>{2});

    // Lambda^3 H at g=2 by omega^H: the images span the whole lattice.
    FGGroup lambda3 = group_from_presentation(lambda3_dim(2), {});
    std::vector<GroupElem> omega_gens;
    for (const auto& col : omega_wedge_columns(2)) {
        std::vector<mpz_class> c(col.size());
        for (std::size_t i = 0; i < col.size(); ++i) c[i] = static_cast<long>(col[i]);
        omega_gens.push_back(lambda3.element(c));
    }
    QuotientResult wq = quotient(lambda3, omega_gens);
    CHECK(wq.group.free_rank() == 0);
    CHECK(wq.group.torsion().empty());

    // B^(3) at g=2 by alpha.B^(1): GF(2) dimension 15 - 5 = 10.
    const std::size_t d = b3_dim(2);
    IntMatrix two(d, d);
    for (std::size_t i = 0; i < d; ++i) two.at(i, i) = 2;
    FGGroup b3(d, two);
    std::vector<GroupElem> ideal;
    GF2Matrix ideal_rows(5, d);
    std::size_t row = 0;
    for (const BoolPoly& f : arf_ideal_generators(2)) {
        auto coords = b3_coords(f);
        std::vector<mpz_class> c(d);
        for (std::size_t i = 0; i < d; ++i) {
            c[i] = coords[i];
            ideal_rows.set(row, i, coords[i]);
        }
        ideal.push_back(b3.element(c));
        ++row;
    }
    CHECK(gf2_rank(ideal_rows) == 5);
    QuotientResult bq = quotient(b3, ideal);
    CHECK(bq.group.free_rank() == 0);
    CHECK(bq.group.torsion() == std::vector<mpz_class>(10, mpz_class(2)));
}

TEST_CASE("iterated quotients agree with the combined quotient") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        IntMatrix rel = testutil::random_matrix(rng, 4, 2, 4);
        FGGroup g(4, rel);
        GroupElem s1 = g.element(vec({long(rng() % 7) - 3, long(rng() % 7) - 3,
                                      long(rng() % 7) - 3, long(rng() % 7) - 3}));
        GroupElem s2 = g.element(vec({long(rng() % 7) - 3, long(rng() % 7) - 3,
                                      long(rng() % 7) - 3, long(rng() % 7) - 3}));
        QuotientResult q1 = quotient(g, {s1});
        GroupElem s2_in_q1 = q1.group.element(s2.coords);
        QuotientResult q12 = quotient(q1.group, {s2_in_q1});
        QuotientResult q_both = quotient(g, {s1, s2});
        CHECK(q12.group.invariants() == q_both.group.invariants());
    }
}

TEST_CASE("pullback of identity maps is the diagonal") {
    FGGroup z1 = group_from_presentation(1, {});
    FGGroup z2 = group_from_presentation(1, {});
    FGGroup z0 = group_from_presentation(1, {});
    IntMatrix one(1, 1);
    one.at(0, 0) = 1;
    PullbackResult pb = pullback(z1, z2, z0, Hom(z1, z0, one), Hom(z2, z0, one));
    CHECK(pb.group.free_rank() == 1);
    CHECK(pb.group.torsion().empty());
    CHECK(pb.pr1 == pb.pr2);
}

TEST_CASE("pullback of Lambda^3 H and B^(3) over Lambda^3 H_(2)") {
    FgPullbackModel g1 = fg_pullback_model(1);
    CHECK(g1.pullback.group.free_rank() == 0);
    CHECK(g1.pullback.group.torsion() == std::vector<mpz_class>(4, mpz_class(2)));

    FgPullbackModel g2 = fg_pullback_model(2);
    CHECK(g2.pullback.group.free_rank() == 4);
    CHECK(g2.pullback.group.torsion() == std::vector<mpz_class>(11, mpz_class(2)));
}

TEST_CASE("pullback projections satisfy the equalizer property") {
    FgPullbackModel model = fg_pullback_model(2);
    std::mt19937_64 rng(9);
    const std::size_t k = model.pullback.group.gen_count();
    for (int it = 0; it < 200; ++it) {
        std::vector<mpz_class> x(k);
        for (auto& c : x) c = long(rng() % 7) - 3;
        std::vector<mpz_class> in_g1 = model.pullback.pr1 * x;
        std::vector<mpz_class> in_g2 = model.pullback.pr2 * x;
        GroupElem lhs = model.lambda3_mod2.element(model.f1.matrix * in_g1);
        GroupElem rhs = model.lambda3_mod2.element(model.f2.matrix * in_g2);
        CHECK(model.lambda3_mod2.equal(lhs, rhs));
    }
}
