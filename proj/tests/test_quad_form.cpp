#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ycalc/quad_form.hpp"

using namespace ycalc;

TEST_CASE("q_value extends basis values by polarization") {
    QForm zero{1, 0};
    CHECK(q_value(zero, mod2(HClass::x(1, 1) + HClass::y(1, 1))) == 1);  // 0+0+x1.y1
    CHECK(q_value(zero, H2Class{1, 0}) == 0);
    QForm q{1, 0b01};  // q(x1) = 1
    CHECK(q_value(q, mod2(HClass::x(1, 1))) == 1);
    CHECK_THROWS_AS(q_value(q, H2Class{2, 0}), std::invalid_argument);
}

TEST_CASE("polarization law holds exhaustively at small genus") {
    for (int g : {0, 1, 2}) {
        const std::size_t n = h_dim(g);
        for (const QForm& q : enumerate_forms(g))
            for (std::uint32_t a = 0; a < (1u << n); ++a)
                for (std::uint32_t b = 0; b < (1u << n); ++b) {
                    H2Class ha{g, a}, hb{g, b};
                    int lhs = q_value(q, ha + hb) ^ q_value(q, ha) ^ q_value(q, hb);
                    CHECK(lhs == intersection_mod2(ha, hb));
                }
    }
}

TEST_CASE("affine action") {
    QForm q{1, 0};
    CHECK(act(H2Class{1, 0}, q) == q);

    QForm moved = act(mod2(HClass::x(1, 1)), q);
    CHECK(moved.value_on_basis(1) == 1);  // q'(y1) = x1.y1 = 1
    CHECK(moved.value_on_basis(0) == 0);

    for (const QForm& form : enumerate_forms(2)) {
        H2Class x{2, 0b1011};
        CHECK(act(x, act(x, form)) == form);  // characteristic 2
    }
}

TEST_CASE("the action is free and transitive") {
    for (int g : {0, 1, 2}) {
        const std::size_t n = h_dim(g);
        QForm base{g, 0b10u & ((1u << n) - 1)};
        std::set<std::uint32_t> hit;
        for (std::uint32_t x = 0; x < (1u << n); ++x) hit.insert(act(H2Class{g, x}, base).bits);
        CHECK(hit.size() == (std::size_t(1) << n));
    }
}

TEST_CASE("enumerate_forms counts") {
    CHECK(enumerate_forms(0).size() == 1);
    CHECK(enumerate_forms(1).size() == 4);
    CHECK(enumerate_forms(2).size() == 16);
}

TEST_CASE("arf values") {
    CHECK(arf_value(QForm{2, 0}) == 0);
    CHECK(arf_value(QForm{1, 0b11}) == 1);   // q(x1) = q(y1) = 1
    CHECK(arf_value(QForm{2, 0b1111}) == 0); // 1 + 1

    // count of Arf-trivial forms is 2^(2g-1) + 2^(g-1)
    for (int g : {1, 2, 3}) {
        std::size_t zero_count = 0;
        for (const QForm& q : enumerate_forms(g))
            if (arf_value(q) == 0) ++zero_count;
        CHECK(zero_count == (std::size_t(1) << (2 * g - 1)) + (std::size_t(1) << (g - 1)));
    }
}

TEST_CASE("qform text round trip") {
    QForm q = parse_qform(2, "1010");
    CHECK(to_string(q) == "1010");
    CHECK(q.value_on_basis(0) == 1);
    CHECK(q.value_on_basis(2) == 1);
    CHECK_THROWS_AS(parse_qform(2, "101"), std::invalid_argument);
    CHECK_THROWS_AS(parse_qform(1, "1x"), std::invalid_argument);
}
