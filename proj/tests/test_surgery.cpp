#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ycalc/surgery.hpp"

using namespace ycalc;

TEST_CASE("parser accepts minimal and term files") {
    SurgeryPresentation empty = parse_presentation("genus 1\ncase boundary\n");
    CHECK(empty.genus == 1);
    CHECK(empty.kind == SurgeryCase::boundary);
    CHECK(empty.expr.is_zero());

    SurgeryPresentation one = parse_presentation(
        "# a comment\n"
        "genus 1\n"
        "\n"
        "case closed\n"
        "+1 Y (1,0;0) (0,1;0) (0,0;1)  # trailing comment\n");
    CHECK(one.kind == SurgeryCase::closed);
    CHECK(one.expr.terms().size() == 1);
    YExpr expected(1);
    expected.add_term(1, section_s(HClass::x(1, 1)), section_s(HClass::y(1, 1)),
                      special_of_p(1));
    CHECK(one.expr == expected);

    SurgeryPresentation g0 = parse_presentation("genus 0\ncase closed\n2 Y (;1) (;1) (;1)\n");
    CHECK(g0.expr.terms().size() == 1);
}

TEST_CASE("parser errors carry line numbers") {
    auto expect_error = [](const std::string& text, int line) {
        try {
            parse_presentation(text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_error("case boundary\n", 1);                                     // bad header
    expect_error("genus 1\ncase torus\n", 2);                               // unknown tag
    expect_error("genus 1\ncase boundary\n1 Y (1,0,0;0) (0,1;0) (0,0;1)\n", 3);
    expect_error("genus 1\ncase boundary\n1 X (1,0;0) (0,1;0) (0,0;1)\n", 3);
    expect_error("genus 1\ncase boundary\n1 Y (1,0;0) (0,1;0)\n", 3);       // two labels
    expect_error("genus 1\ncase boundary\n1 Y (1,0;2) (0,1;0) (0,0;1)\n", 3);
    expect_error("genus -1\ncase boundary\n", 1);
}

TEST_CASE("format and parse round trip") {
    std::mt19937_64 rng(151);
    for (int it = 0; it < 30; ++it) {
        SurgeryPresentation m{2, it % 2 ? SurgeryCase::closed : SurgeryCase::boundary,
                              sample_yexpr(rng, 2, 4)};
        SurgeryPresentation back = parse_presentation(format_presentation(m));
        CHECK(back.genus == m.genus);
        CHECK(back.kind == m.kind);
        CHECK(back.expr == m.expr);
    }
}

TEST_CASE("beta on presentations") {
    SurgeryPresentation all_special =
        parse_presentation("genus 1\ncase boundary\n1 Y (0,0;1) (0,0;1) (0,0;1)\n");
    CHECK(beta(all_special).value == BoolPoly::one(1));

    SurgeryPresentation empty = parse_presentation("genus 2\ncase boundary\n");
    CHECK(beta(empty).value.is_zero());

    // closed g=1 relation: the Boolean part alpha reduces to zero mod the ideal
    SurgeryPresentation rel =
        parse_presentation("genus 1\ncase closed\n1 Y (1,0;0) (0,1;0) (0,0;1)\n");
    CHECK(beta(rel).value.is_zero());
    SurgeryPresentation rel_boundary =
        parse_presentation("genus 1\ncase boundary\n1 Y (1,0;0) (0,1;0) (0,0;1)\n");
    CHECK(beta(rel_boundary).value == arf(1));
}

TEST_CASE("eta1 on presentations") {
    SurgeryPresentation empty = parse_presentation("genus 2\ncase boundary\n");
    CHECK(eta1(empty).value.is_zero());

    SurgeryPresentation m =
        parse_presentation("genus 2\ncase boundary\n1 Y (1,0,0,0;0) (0,0,1,0;0) (0,1,0,0;0)\n");
    CHECK(eta1(m).value == wedge3(HClass::x(2, 1), HClass::y(2, 1), HClass::x(2, 2)));

    // closed case: x1^y1^x2 is a multiple of omega^H at g=2
    SurgeryPresentation mc =
        parse_presentation("genus 2\ncase closed\n1 Y (1,0,0,0;0) (0,0,1,0;0) (0,1,0,0;0)\n");
    CHECK(eta1(mc).value.is_zero());
}

TEST_CASE("rochlin variation") {
    PElem s = special_of_p(1);
    QForm q0{1, 0};
    CHECK(rochlin_delta(s, s, s, q0) == 8);
    CHECK(rochlin_delta(s, s, s, QForm{1, 0b11}) == 8);

    PElem x1 = section_s(HClass::x(1, 1));
    PElem y1 = section_s(HClass::y(1, 1));
    CHECK(rochlin_delta(x1, y1, s, QForm{1, 0b11}) == 8);
    CHECK(rochlin_delta(x1, y1, s, q0) == 0);  // e(x1) vanishes at q0
    CHECK_THROWS_AS(rochlin_delta(x1, y1, s, QForm{2, 0}), std::invalid_argument);
}

TEST_CASE("beta matches the rochlin variation formula") {
    std::mt19937_64 rng(157);
    for (int g : {0, 1, 2}) {
        auto forms = enumerate_forms(g);
        for (int it = 0; it < 40; ++it) {
            SurgeryPresentation m{g, SurgeryCase::boundary, sample_yexpr(rng, g, 4)};
            BoolPoly f = beta(m).value;
            for (const QForm& q : forms) {
                int total = 0;
                for (const auto& [t, c] : m.expr.terms())
                    total = (total + static_cast<int>(((c % 2) + 2) % 2) *
                                         rochlin_delta(t[0], t[1], t[2], q)) %
                            16;
                CHECK(total == 8 * evaluate(f, q));
            }
        }
    }
}

TEST_CASE("y2_equivalent on known pairs") {
    SurgeryPresentation m =
        parse_presentation("genus 1\ncase boundary\n1 Y (1,0;0) (1,0;0) (0,1;0)\n");
    CHECK(y2_equivalent(m, m).equivalent);

    SurgeryPresentation slid =
        parse_presentation("genus 1\ncase boundary\n1 Y (0,0;1) (1,0;0) (0,1;0)\n");
    EquivalenceReport r = y2_equivalent(m, slid);
    CHECK(r.equivalent);
    CHECK(r.text.find("equivalent: yes") != std::string::npos);

    // at genus 1 the wedge dies, so Y[x1,x1,y1] and Y[x1,y1,s] share the
    // normal form (0, alpha)
    SurgeryPresentation arf_like =
        parse_presentation("genus 1\ncase boundary\n1 Y (1,0;0) (0,1;0) (0,0;1)\n");
    CHECK(y2_equivalent(m, arf_like).equivalent);

    SurgeryPresentation rel =
        parse_presentation("genus 1\ncase closed\n1 Y (1,0;0) (0,1;0) (0,0;1)\n");
    SurgeryPresentation nothing = parse_presentation("genus 1\ncase closed\n");
    CHECK(y2_equivalent(rel, nothing).equivalent);

    // same expressions in the boundary case are NOT equivalent
    SurgeryPresentation rel_b =
        parse_presentation("genus 1\ncase boundary\n1 Y (1,0;0) (0,1;0) (0,0;1)\n");
    SurgeryPresentation nothing_b = parse_presentation("genus 1\ncase boundary\n");
    CHECK(!y2_equivalent(rel_b, nothing_b).equivalent);

    CHECK_THROWS_AS(y2_equivalent(rel, nothing_b), std::invalid_argument);
    SurgeryPresentation other_genus = parse_presentation("genus 2\ncase closed\n");
    CHECK_THROWS_AS(y2_equivalent(rel, other_genus), std::invalid_argument);
}

TEST_CASE("y2_equivalent is an equivalence relation invariant under relations") {
    std::mt19937_64 rng(163);
    for (int it = 0; it < 25; ++it) {
        for (SurgeryCase kind : {SurgeryCase::boundary, SurgeryCase::closed}) {
            SurgeryPresentation m1{1, kind, sample_yexpr(rng, 1, 3)};

            // append an AS instance
            PElem a = sample_pelem(rng, 1), b = sample_pelem(rng, 1), c = sample_pelem(rng, 1);
            YExpr with_as = m1.expr;
            with_as.add_term(1, a, b, c);
            with_as.add_term(1, b, a, c);
            SurgeryPresentation m2{1, kind, with_as};
            CHECK(y2_equivalent(m1, m2).equivalent);

            // append a slide instance
            YExpr with_slide = m2.expr;
            with_slide.add_term(1, a, a, b);
            with_slide.add_term(-1, special_of_p(1), a, b);
            SurgeryPresentation m3{1, kind, with_slide};
            CHECK(y2_equivalent(m2, m3).equivalent);
            CHECK(y2_equivalent(m1, m3).equivalent);  // transitivity
            CHECK(y2_equivalent(m3, m1).equivalent);  // symmetry

            if (kind == SurgeryCase::closed) {
                YExpr with_sympl = m3.expr + symplectic_relations(1)[1];
                SurgeryPresentation m4{1, kind, with_sympl};
                CHECK(y2_equivalent(m1, m4).equivalent);
            }
        }
    }
}

TEST_CASE("structure reports match the Habiro counts") {
    StructureReport b1 = structure(1, SurgeryCase::boundary);
    CHECK(b1.agree);
    CHECK(b1.from_pullback == CokernelInvariants{0, {2, 2, 2, 2}});

    StructureReport b2 = structure(2, SurgeryCase::boundary);
    CHECK(b2.agree);
    CHECK(b2.from_pullback ==
          CokernelInvariants{4, std::vector<mpz_class>(11, mpz_class(2))});

    StructureReport c0 = structure(0, SurgeryCase::closed);
    CHECK(c0.agree);
    CHECK(c0.from_pullback == CokernelInvariants{0, {2}});

    CHECK(b2.text.find("free_rank: 4") != std::string::npos);
    CHECK(b2.text.find("agreement: yes") != std::string::npos);
}

TEST_CASE("closed equivalence coincides with equality of the (eta1, beta) pair") {
    for (int g : {1, 2}) {
        std::mt19937_64 rng(173 + g);
        for (int it = 0; it < 300; ++it) {
            SurgeryPresentation a{g, SurgeryCase::closed, sample_yexpr(rng, g, 3)};
            SurgeryPresentation b{g, SurgeryCase::closed, sample_yexpr(rng, g, 3)};
            bool joint = y2_equivalent(a, b).equivalent;
            bool componentwise =
                eta1(a).value == eta1(b).value && beta(a).value == beta(b).value;
            CHECK(joint == componentwise);
        }
    }
}

TEST_CASE("closed beta well-definedness via the ideal") {
    for (int g : {0, 1, 2, 3}) {
        const ClosedStructure& cs = closed_structure(g);
        for (const YExpr& rel : symplectic_relations(g))
            CHECK(cs.arf_ideal.contains(b3_coords(rho(rel).f)));
    }
}

TEST_CASE("selftest runs clean at small genus") {
    SelfTestResult r = selftest(1, 7);
    CHECK(r.all_pass);
    CHECK(r.text.find("FAIL") == std::string::npos);
}
