#include <gtest/gtest.h>

#include "cpq/cqspace.hpp"

using namespace cpq;
using namespace cpq::gen;

namespace {
QRat q() { return QRat::q(); }
}  // namespace

TEST(Ambient, BuildsAndReproduces) {
    for (int N = 1; N <= 2; ++N) {
        auto A = build_ambient(N);
        auto rep = check_relation_reproduction(A);
        rep.merge(check_system_hygiene(A.forms, true, false));
        rep.merge(check_L_central(A));
        EXPECT_TRUE(rep.all_passed()) << rep.to_text();
    }
}

TEST(Ambient, DerivativeSystemHygiene) {
    for (int N = 1; N <= 2; ++N) {
        auto A = build_ambient(N);
        auto rep = check_system_hygiene(A.derivs, false, false);
        EXPECT_TRUE(rep.all_passed()) << rep.to_text();
    }
}

TEST(Ambient, CalculusAndSymmetry) {
    for (int N = 1; N <= 2; ++N) {
        auto A = build_ambient(N);
        auto rep = check_derivative_calculus(A, N == 1 ? 3 : 2);
        rep.merge(check_ambient_q_symmetry(A));
        EXPECT_TRUE(rep.all_passed()) << rep.to_text();
    }
}

TEST(Ambient, InvolutionFamily) {
    auto A = build_ambient(1);
    for (int n : {0, 1, -1}) {
        auto rep = check_involution_family(A, n);
        EXPECT_TRUE(rep.all_passed()) << rep.to_text();
    }
}

TEST(Ambient, QuotedExchangeRelations) {
    auto A = build_ambient(1);
    const auto& F = A.forms;
    EXPECT_EQ(F.normal_form(NCPoly::word({x(0), x(1)})), NCPoly::word({x(1), x(0)}, q()));
    // xb^1 x_1 = x_1 xb^1 - q lambda x_0 xb^0
    EXPECT_EQ(F.normal_form(NCPoly::word({xb(1), x(1)})),
              NCPoly::word({x(1), xb(1)}) - NCPoly::word({x(0), xb(0)}, q() * lambda_const()));
    EXPECT_TRUE(F.reduces_to_zero(NCPoly::word({x(0), xi(0)}) - NCPoly::word({xi(0), x(0)}, QRat::q_pow(2))));
    EXPECT_TRUE(F.reduces_to_zero(NCPoly::word({x(0), xib(0)}) - NCPoly::word({xib(0), x(0)})));
    EXPECT_TRUE(F.reduces_to_zero(NCPoly::word({x(0), xb(0)}) - NCPoly::word({xb(0), x(0)})));
    EXPECT_TRUE(F.reduces_to_zero(NCPoly::word({x(0), xb(1)}) - NCPoly::word({xb(1), x(0)}, q().inv())));
    EXPECT_EQ(F.normal_form(NCPoly::word({x0inv(), x(0)})), NCPoly(1));
    EXPECT_EQ(F.star(NCPoly(x0inv())), NCPoly(xb0inv()));
}

TEST(Ambient, FunctionSectorRuleCount) {
    // one rule per inverted pair of the 2(N+1) function letters
    for (int N = 1; N <= 3; ++N) {
        RewriteSystem s("f");
        for (int i = 0; i <= N; ++i) s.add_generator(x(i), 100 - i);
        for (int i = 0; i <= N; ++i) s.add_generator(xb(i), 200 + i);
        auto rels = ambient_function_relations(N, build_rhat(N + 1, 0));
        EXPECT_EQ(rels.size(), static_cast<std::size_t>(3 * (N + 1) * (N + 1)));
        std::vector<NCPoly> bare;
        for (auto& r : rels) bare.push_back(r.relation);
        s.orient_relations(bare);
        const int m = 2 * (N + 1);
        EXPECT_EQ(s.rules().size(), static_cast<std::size_t>(m * (m - 1) / 2));
        EXPECT_TRUE(s.ungoverned_inversions().empty());
    }
}

TEST(Ambient, DeltaSquaredOnQuotedWord) {
    auto A = build_ambient(1);
    NCPoly f = NCPoly::word({x(0), x(1)});
    auto d1 = graded_derivation(Derivation::Holomorphic, f, A.forms);
    EXPECT_FALSE(d1.is_zero());
    EXPECT_TRUE(graded_derivation(Derivation::Holomorphic, d1, A.forms).is_zero());
}

TEST(Ambient, StarOfDerivativeUsesPrimedIndex) {
    auto A = build_ambient(2);
    // i = 0 gives i' = 3
    EXPECT_EQ(A.derivs.star(NCPoly(D(0))), -QRat::q_pow(-6) * NCPoly(Db(0)));
}

TEST(Ambient, ThreeDimensionalSuite) {
    auto A = build_ambient(3);
    auto rep = check_relation_reproduction(A);
    rep.merge(check_system_hygiene(A.forms, true, false));
    rep.merge(check_system_hygiene(A.derivs, false, false));
    rep.merge(check_L_central(A));
    rep.merge(check_ambient_q_symmetry(A));
    rep.merge(check_involution_family(A, 0));
    EXPECT_TRUE(rep.all_passed()) << rep.to_text();
}
