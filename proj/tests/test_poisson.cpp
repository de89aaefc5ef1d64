#include <gtest/gtest.h>

#include "cpq/errors.hpp"
#include "cpq/poisson.hpp"

using namespace cpq;
using namespace cpq::gen;

namespace {
ClassicalExpr C(int N, Gen g) { return ClassicalExpr::letter(N, g); }
}  // namespace

TEST(Classical, GradedProducts) {
    const int N = 2;
    EXPECT_EQ(C(N, dz(1)) * C(N, dz(2)), -(C(N, dz(2)) * C(N, dz(1))));
    EXPECT_TRUE((C(N, dz(1)) * C(N, dz(1))).is_zero());
    EXPECT_EQ(C(N, z(1)) * C(N, zb(2)), C(N, zb(2)) * C(N, z(1)));
    // rho / rho = 1
    EXPECT_EQ(ClassicalExpr::rho(N, 2).divided_by_rho(2, 1), ClassicalExpr(N, BigRat(1)));
    EXPECT_EQ(C(N, z(1)).d(), C(N, dz(1)));
    EXPECT_TRUE(ClassicalExpr::rho(N, 1).divided_by_rho(2, 3).d().d().is_zero());
    EXPECT_EQ((C(N, dz(1)) * C(N, dzb(2))).star(), C(N, dz(2)) * C(N, dzb(1)));
    EXPECT_EQ((C(N, dz(1)) * C(N, dz(2))).star(), C(N, dzb(2)) * C(N, dzb(1)));
}

TEST(Poisson, QuotedExamples) {
    auto P2 = build_projective(2);
    EXPECT_EQ(poisson_bracket(NCPoly(z(1)), NCPoly(z(2)), P2), C(2, z(1)) * C(2, z(2)));
    auto P1 = build_projective(1);
    EXPECT_EQ(poisson_bracket(NCPoly(z(1)), NCPoly(zb(1)), P1),
              BigRat(2) * (ClassicalExpr(1, BigRat(1)) + C(1, z(1)) * C(1, zb(1))));
    EXPECT_EQ(poisson_bracket(NCPoly(zb(1)), NCPoly(dz(1)), P1), BigRat(-2) * (C(1, zb(1)) * C(1, dz(1))));
    // two functions: (f, g) + (g, f) = 0
    EXPECT_TRUE((poisson_bracket(NCPoly(z(1)), NCPoly(zb(2)), P2) + poisson_bracket(NCPoly(zb(2)), NCPoly(z(1)), P2)).is_zero());
}

TEST(Poisson, WrongGradingIsCaught) {
    // dz_1 dz_1 - dz_1 dz_1 = 0 and dz_1 dz_2 + dz_2 dz_1 = O(q-1), but the
    // commutator dz_1 dz_2 - dz_2 dz_1 survives at q = 1.
    auto P = build_projective(2);
    const RewriteSystem& F = P.forms;
    const NCPoly c = F.normal_form(NCPoly::word({dz(1), dz(2)}) - NCPoly::word({dz(2), dz(1)}));
    bool survives = false;
    for (const auto& [w, k] : c.terms()) survives = survives || k.at_one() != 0;
    EXPECT_TRUE(survives);
    EXPECT_THROW(
        {
            for (const auto& [w, k] : c.terms()) limit_div_q_minus_1(k);
        },
        NonVanishingAtOne);
}

TEST(Poisson, TableAndStructure) {
    for (int N = 1; N <= 2; ++N) {
        auto P = build_projective(N);
        auto rep = check_poisson_table(P);
        rep.merge(check_poisson_structure(P));
        EXPECT_TRUE(rep.all_passed()) << rep.to_text();
    }
}

TEST(Poisson, TableThree) {
    auto P = build_projective(3);
    auto rep = check_poisson_table(P);
    rep.merge(check_poisson_structure(P));
    EXPECT_TRUE(rep.all_passed()) << rep.to_text();
}

TEST(Poisson, JacobiOnQuotedTriple) {
    auto P = build_projective(2);
    FunctionBracket fb(P);
    const auto a = C(2, z(1)), b = C(2, z(2)), c = C(2, zb(1));
    ClassicalExpr s = fb(a, fb(b, c));
    s += fb(b, fb(c, a));
    s += fb(c, fb(a, b));
    EXPECT_TRUE(s.is_zero()) << s.str();
}
