#include <gtest/gtest.h>

#include <random>

#include "cpq/errors.hpp"
#include "cpq/qrat.hpp"

using namespace cpq;

namespace {

QRat q() { return QRat::q(); }

// Random element of Q(q): ratio of small random polynomials with a nonzero denominator.
QRat random_qrat(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 3), shift(-2, 2);
    auto poly = [&] {
        std::vector<BigInt> c;
        const int d = deg(rng);
        for (int k = 0; k <= d; ++k) c.emplace_back(coeff(rng));
        return Poly(c);
    };
    Poly den = poly();
    while (den.is_zero()) den = poly();
    return QRat(poly(), den) * QRat::q_pow(shift(rng));
}

}  // namespace

TEST(QRat, LambdaIsQMinusInverseQ) {
    const QRat lam = lambda_const();
    EXPECT_EQ(lam, q() - q().inv());
    EXPECT_EQ(lam.num(), Poly::monomial(1, 2) - Poly(1L));
    EXPECT_EQ(lam.den(), Poly::monomial(1, 1));
    EXPECT_EQ(lam.at_one(), 0);
    EXPECT_EQ(lam.eval(2), BigRat(3, 2));
}

TEST(QRat, QIntegers) {
    EXPECT_TRUE(qint(0).is_zero());
    EXPECT_EQ(qint(1), QRat(1));
    EXPECT_EQ(qint(2), 1 + q() * q());
    EXPECT_EQ(qint(-1), -QRat::q_pow(-2));
    for (int x = -10; x <= 10; ++x) EXPECT_EQ(qint(x).at_one(), x) << x;
}

TEST(QRat, QIntegerAdditionLaw) {
    for (int x = -10; x <= 10; ++x)
        for (int y = -10; y <= 10; ++y)
            ASSERT_EQ(qint(x + y), qint(x) + QRat::q_pow(2 * x) * qint(y)) << x << "," << y;
}

TEST(QRat, LimitDivQMinusOne) {
    EXPECT_EQ(limit_div_q_minus_1(lambda_const()), 2);
    EXPECT_EQ(limit_div_q_minus_1(QRat()), 0);
    EXPECT_EQ(limit_div_q_minus_1(q() - 1), 1);
    EXPECT_EQ(limit_div_q_minus_1(qint(3) - 3), 6);  // d/dq (1+q^2+q^4) at 1
    EXPECT_THROW(limit_div_q_minus_1(q()), NonVanishingAtOne);
}

TEST(QRat, CanonicalFormMakesEqualityStructural) {
    QRat a = (q() * q() - 1) / (q() - 1);
    EXPECT_EQ(a, q() + 1);
    EXPECT_TRUE(a.den() == Poly(1L));
    QRat b(Poly(-2L), Poly(-4L) * Poly::monomial(1, 1));
    EXPECT_EQ(b.num(), Poly(1L));
    EXPECT_EQ(b.den(), Poly::monomial(2, 1));
    // denominator sign is normalized
    QRat c = QRat(1) / (1 - q());
    EXPECT_GT(c.den().lead(), 0);
}

TEST(QRat, QInversion) {
    EXPECT_EQ(q().q_inverted(), q().inv());
    EXPECT_EQ(lambda_const().q_inverted(), -lambda_const());
    EXPECT_EQ(qint(3).q_inverted(), QRat::q_pow(-4) * qint(3));
}

TEST(QRat, FieldAxiomsOnRandomTriples) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_TRUE((a - a).is_zero());
        if (!a.is_zero()) ASSERT_EQ(a * a.inv(), QRat(1));
        ASSERT_EQ(a.q_inverted().q_inverted(), a);
    }
}

TEST(QRat, EvaluationAndPoles) {
    QRat a = 1 / (q() - 2);
    EXPECT_EQ(a.eval(3), 1);
    EXPECT_THROW(a.eval(2), PoleAtSample);
    EXPECT_THROW(QRat(1) / QRat(0), DivisionByZero);
}

TEST(QRat, Rendering) {
    EXPECT_EQ(lambda_const().str(), "(q^2 - 1)/q");
    EXPECT_EQ(QRat::q_pow(-2).str(), "1/q^2");
    EXPECT_EQ((1 + q() * q()).str(), "q^2 + 1");
    EXPECT_EQ(QRat(-3).str(), "-3");
}

TEST(Poly, GcdOfProducts) {
    Poly a = Poly(std::vector<BigInt>{1, 1});          // 1+q
    Poly b = Poly(std::vector<BigInt>{-1, 0, 1});      // q^2-1
    Poly c = Poly(std::vector<BigInt>{2, 0, 0, 3});    // 3q^3+2
    EXPECT_EQ(gcd(a * c, b * c), a * c);
    EXPECT_EQ(gcd(c.shifted(2), c.shifted(1).scaled(6)), c.shifted(1));
}
