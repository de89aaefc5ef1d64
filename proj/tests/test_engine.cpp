#include <gtest/gtest.h>

#include <random>

#include "cpq/calculus.hpp"
#include "cpq/errors.hpp"
#include "cpq/rewrite.hpp"

using namespace cpq;
using gen::z;
using gen::zb;

namespace {

QRat q() { return QRat::q(); }

// One-dimensional projective line: zb z = q^-2 z zb - lambda/q.
RewriteSystem line() {
    RewriteSystem s("line");
    s.add_generator(z(1));
    s.add_generator(zb(1));
    s.orient_relations({NCPoly::word({zb(1), z(1)}) - QRat::q_pow(-2) * NCPoly::word({z(1), zb(1)}) +
                        lambda_const() / q()});
    s.set_star(z(1), zb(1));
    s.set_star(zb(1), z(1));
    return s;
}

NCPoly random_poly(std::mt19937& rng, const std::vector<Gen>& letters) {
    std::uniform_int_distribution<int> nterms(1, 4), len(0, 4), pick(0, static_cast<int>(letters.size()) - 1),
        coeff(-3, 3), shift(-2, 2);
    NCPoly p;
    for (int t = nterms(rng); t > 0; --t) {
        Word w;
        for (int k = len(rng); k > 0; --k) w.push_back(letters[pick(rng)]);
        p += NCPoly(w, QRat(coeff(rng)) * QRat::q_pow(shift(rng)));
    }
    return p;
}

}  // namespace

TEST(Rewrite, OrientationPicksLeadingPair) {
    auto s = line();
    ASSERT_EQ(s.rules().size(), 1u);
    EXPECT_EQ(s.rules()[0].lhs_first, zb(1));
    EXPECT_EQ(s.rules()[0].lhs_second, z(1));
    EXPECT_TRUE(s.is_normal({z(1), z(1), zb(1)}));
    EXPECT_FALSE(s.is_normal({z(1), zb(1), z(1)}));
}

TEST(Rewrite, NormalFormExamples) {
    auto s = line();
    const QRat lam = lambda_const();
    // zb z z = q^-4 z z zb - lambda q^-1 (1 + q^-2) z
    NCPoly got = s.normal_form(NCPoly::word({zb(1), z(1), z(1)}));
    NCPoly want = QRat::q_pow(-4) * NCPoly::word({z(1), z(1), zb(1)}) -
                  lam * (QRat::q_pow(-1) + QRat::q_pow(-3)) * NCPoly(z(1));
    EXPECT_EQ(got, want) << got.str();
    // rho = 1 + z zb satisfies rho z = q^-2 z rho
    NCPoly rho = 1 + NCPoly::word({z(1), zb(1)});
    EXPECT_TRUE(s.reduces_to_zero(rho * NCPoly(z(1)) - QRat::q_pow(-2) * (NCPoly(z(1)) * rho)));
}

TEST(Rewrite, IdempotentAndLinearOnRandomInputs) {
    auto s = line();
    std::mt19937 rng(11);
    const std::vector<Gen> letters{z(1), zb(1)};
    for (int trial = 0; trial < 1000; ++trial) {
        NCPoly a = random_poly(rng, letters), b = random_poly(rng, letters);
        NCPoly na = s.normal_form(a);
        ASSERT_EQ(s.normal_form(na), na);
        ASSERT_EQ(s.normal_form(a + b), na + s.normal_form(b));
        ASSERT_EQ(s.normal_form(a * QRat(lambda_const())), na * lambda_const());
        for (const auto& [w, c] : na.terms()) ASSERT_TRUE(s.is_normal(w));
    }
}

TEST(Rewrite, StarIsAntiMultiplicativeInvolution) {
    auto s = line();
    NCPoly p = NCPoly::word({z(1), z(1), zb(1)}, q()) + 3;
    EXPECT_EQ(s.star(p), NCPoly::word({z(1), zb(1), zb(1)}, q()) + 3);
    EXPECT_EQ(s.star(s.star(p)), p);
    auto rep = check_system_hygiene(s, true, false);
    EXPECT_TRUE(rep.all_passed()) << rep.to_text();
}

TEST(Rewrite, PoincareCountsOfLine) {
    auto s = line();
    auto counts = normal_word_counts(s, {z(1), zb(1)}, 4);
    EXPECT_EQ(counts, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
}

TEST(Rewrite, NonConfluentSystemIsDetected) {
    const Gen a = gen::aux(1), b = gen::aux(2);
    RewriteSystem s("bad");
    s.add_generator(a);
    s.add_generator(b);
    s.add_rule(b, b, NCPoly(a));
    s.add_rule(b, a, NCPoly::word({a, b}, 2));
    auto f = local_confluence_failures(s);
    ASSERT_FALSE(f.empty());
    // both bbb (ab vs 2ab) and bba (aa vs 4aa) fail
    EXPECT_EQ(f.size(), 2u);
    EXPECT_NE(f.front().left_path, f.front().right_path);
}

TEST(Rewrite, OrientationFailureOnLongLeadingWord) {
    RewriteSystem s("long");
    s.add_generator(z(1));
    s.add_generator(zb(1));
    EXPECT_THROW(s.orient_relations({NCPoly::word({zb(1), z(1), z(1)}) - NCPoly(z(1))}), OrientationFailure);
}

TEST(Rewrite, StepBudgetStopsRunaway) {
    const Gen a = gen::aux(1), b = gen::aux(2);
    RewriteSystem s("loop");
    s.add_generator(a);
    s.add_generator(b);
    // b a -> a b + b a b ... grows without bound
    s.add_rule(b, a, NCPoly::word({a, b}) + NCPoly::word({b, b, a}), false);
    s.set_step_budget(2000);
    EXPECT_THROW(s.normal_form(NCPoly::word({b, a})), NonTerminating);
}

TEST(Localize, AdjoinRhoAndInvert) {
    auto s = line();
    const NCPoly rho_val = 1 + NCPoly::word({z(1), zb(1)});
    adjoin_element(s, gen::rho(1), rho_val, 100000,
                   {{z(1), QRat::q_pow(-2)}, {zb(1), QRat::q_pow(2)}}, NCPoly(gen::rho(1)));
    localize(s, gen::rho(1), gen::rhoinv(1), 200000, {{z(1), QRat::q_pow(-2)}, {zb(1), QRat::q_pow(2)}});
    const NCPoly r(gen::rho(1)), ri(gen::rhoinv(1)), zp(z(1));
    EXPECT_EQ(s.normal_form(ri * zp * r), QRat::q_pow(2) * zp);
    EXPECT_EQ(s.normal_form(r * ri), NCPoly(1));
    EXPECT_EQ(s.normal_form(s.expand(r) - rho_val), NCPoly());
    EXPECT_TRUE(local_confluence_failures(s).empty());
    EXPECT_TRUE(check_system_hygiene(s, true, false).all_passed());
}

TEST(Localize, WrongCertificateIsRejected) {
    auto s = line();
    const NCPoly rho_val = 1 + NCPoly::word({z(1), zb(1)});
    EXPECT_THROW(adjoin_element(s, gen::rho(1), rho_val, 100000, {{z(1), QRat(1)}}, NCPoly(gen::rho(1))),
                 CertificateViolation);
    EXPECT_THROW(adjoin_element(s, gen::rho(1), rho_val, 100000, {{z(1), QRat(0)}}, NCPoly(gen::rho(1))),
                 NonUnitCoefficient);
    EXPECT_EQ(infer_commutation(s, rho_val, z(1)), QRat::q_pow(-2));
}

TEST(Derivation, UnsupportedLetterThrows) {
    auto s = line();
    EXPECT_THROW(graded_derivation(Derivation::Holomorphic, NCPoly(gen::del(1)), s), UnsupportedGenerator);
}
