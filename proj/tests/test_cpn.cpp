#include <gtest/gtest.h>

#include "cpq/cpn.hpp"
#include "cpq/errors.hpp"

using namespace cpq;
using namespace cpq::gen;

namespace {
QRat q() { return QRat::q(); }
}  // namespace

TEST(Projective, SystemsAreConfluent) {
    for (int N = 1; N <= 3; ++N) {
        auto P = build_projective(N);
        Report rep("h");
        rep.merge(check_system_hygiene(P.plane, true, false));
        rep.merge(check_system_hygiene(P.functions, true, false));
        rep.merge(check_system_hygiene(P.forms, true, false));
        rep.merge(check_system_hygiene(P.derivs, true, false));
        EXPECT_TRUE(rep.all_passed()) << rep.to_text();
    }
}

TEST(Projective, RelationsPoincareAndAmbient) {
    for (int N = 1; N <= 2; ++N) {
        auto P = build_projective(N);
        auto A = build_ambient(N);
        auto rep = check_projective_relations(P);
        rep.merge(check_poincare(P, 4));
        rep.merge(check_derivation_from_ambient(P, A));
        rep.merge(check_projective_derivatives(P, 2));
        rep.merge(check_projective_q_symmetry(P));
        EXPECT_TRUE(rep.all_passed()) << rep.to_text();
    }
}

// The map written as z_a -> q^{-2a} zb^a, zb^a -> z_a (with q -> 1/q) does not
// preserve the constant term of zb^a z_a; the image leaves -lambda^2.
TEST(Projective, LiteralQSymmetryMissesConstantTerm) {
    auto P = build_projective(1);
    const NCPoly rel = P.function_relations[1].relation;  // zzb[1,1]
    ASSERT_EQ(P.function_relations[1].name, "zzb[1,1]");
    auto literal = [](Gen g) -> NCPoly {
        if (g.kind == Kind::Z) return NCPoly(zb(g.i)) * QRat::q_pow(-2 * g.i);
        return NCPoly(z(g.i));
    };
    NCPoly img = rel.map_coeffs([](const QRat& c) { return c.q_inverted(); }).substitute(literal);
    EXPECT_EQ(P.plane.normal_form(img), NCPoly(-lambda_const() * lambda_const()));
    EXPECT_TRUE(P.plane.normal_form(apply_q_symmetry(rel)).is_zero());
}

TEST(Projective, QuotedRules) {
    auto P2 = build_projective(2);
    // zb^1 z_2 has no constant term
    NCPoly nf = P2.plane.normal_form(NCPoly::word({zb(1), z(2)}));
    EXPECT_TRUE(nf.constant_term().is_zero());
    EXPECT_EQ(nf, NCPoly::word({z(2), zb(1)}, q().inv()));
    // rho_1 z_2 = z_2 rho_1
    EXPECT_EQ(P2.functions.normal_form(NCPoly::word({rho(1), z(2)})), NCPoly::word({z(2), rho(1)}));
    auto P1 = build_projective(1);
    EXPECT_EQ(P1.plane.normal_form(NCPoly::word({zb(1), z(1)})),
              NCPoly::word({z(1), zb(1)}, QRat::q_pow(-2)) - lambda_const() * q().inv());
    // rho^-1 z = q^2 z rho^-1, rho^-1 dz = dz rho^-1
    EXPECT_EQ(P1.forms.normal_form(NCPoly::word({rhoinv(1), z(1), rho(1)})), NCPoly(z(1)) * QRat::q_pow(2));
    EXPECT_EQ(P1.forms.normal_form(NCPoly::word({rhoinv(1), dz(1), rho(1)})), NCPoly(dz(1)));
}

TEST(Projective, DerivativeStarAtDefaultPower) {
    auto P = build_projective(1);
    EXPECT_EQ(P.star_power, 2);
    // (del^1)* = -q^{4-2} rho^2 delb_1 rho^-2
    NCPoly want = -QRat::q_pow(2) * (rho_power(1, 2) * NCPoly(delb(1)) * rho_power(1, -2));
    EXPECT_EQ(P.derivs.star(NCPoly(del(1))), want);
    EXPECT_EQ(P.derivs.normal_form(P.derivs.star(P.derivs.star(NCPoly(del(1))))), NCPoly(del(1)));
}

TEST(Projective, ThreeDimensionalRelations) {
    auto P = build_projective(3);
    auto rep = check_projective_relations(P);
    rep.merge(check_poincare(P, 4));
    rep.merge(check_projective_q_symmetry(P));
    EXPECT_TRUE(rep.all_passed()) << rep.to_text();
}

TEST(Kahler, OneFormsKahlerVolume) {
    for (int N = 1; N <= 2; ++N) {
        auto P = build_projective(N);
        auto rep = check_one_form_identities(P);
        rep.merge(check_kahler(P));
        rep.merge(check_volume(P));
        EXPECT_TRUE(rep.all_passed()) << rep.to_text();
    }
}

TEST(Kahler, EqualExponentsRejected) {
    auto P = build_projective(1);
    EXPECT_THROW(one_form_rep(P.forms, rho(1), rhoinv(1), QRat(1), QRat(1)), PreconditionViolated);
    // rho q-commutes with z by q^-2, not q^2
    EXPECT_THROW(one_form_rep(P.forms, rho(1), rhoinv(1), QRat::q_pow(2), QRat(1)), PreconditionViolated);
}

// At q = 1 the metric is the Fubini-Study one: g^{a bbar} = rho^-2 (rho d_ab - zb^a z_b).
TEST(Kahler, ClassicalMetric) {
    auto g = kahler_metric(2);
    auto P = build_projective(2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            NCPoly want = -(rho_power(2, -2) * NCPoly::word({zb(a + 1), z(b + 1)}));
            if (a == b) want += rho_power(2, -1);
            // compare the q = 1 specializations coefficientwise
            NCPoly diff = P.forms.normal_form(g.upper[a][b] - want);
            for (const auto& [w, c] : diff.terms()) EXPECT_EQ(c.at_one(), 0) << a << b;
        }
}

// K^N = c dv_z with c(1) = (-1)^N N!: the N! from K^N, the sign from
// reordering dz dzb pairs into dzb^N ... dzb^1 dz_1 ... dz_N.
TEST(Kahler, VolumeConstant) {
    const int want[] = {0, -1, 2, -6};
    for (int N = 1; N <= 3; ++N) {
        auto P = build_projective(N);
        EXPECT_EQ(volume_element(P).proportionality.at_one(), want[N]) << N;
    }
    EXPECT_EQ(volume_element(build_projective(1)).proportionality, -QRat::q_pow(3));
    auto rep = check_one_form_identities(build_projective(3));
    rep.merge(check_kahler(build_projective(3)));
    EXPECT_TRUE(rep.all_passed()) << rep.to_text();
}
