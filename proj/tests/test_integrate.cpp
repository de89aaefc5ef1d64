#include <gtest/gtest.h>

#include "cpq/classical.hpp"
#include "cpq/errors.hpp"
#include "cpq/integrate.hpp"

using namespace cpq;
using namespace cpq::gen;

namespace {
QRat q() { return QRat::q(); }
}  // namespace

TEST(Integrate, ReduceToRhoExamples) {
    auto P = build_projective(1);
    const NCPoly r(rho(1));
    auto a = reduce_to_rho(NCPoly::word({zb(1), z(1)}), P);
    EXPECT_TRUE(a.unbalanced.is_zero());
    EXPECT_EQ(a.rho_part, QRat::q_pow(-2) * r - NCPoly(1));
    EXPECT_EQ(reduce_to_rho(NCPoly::word({z(1), zb(1)}), P).rho_part, r - NCPoly(1));
    NCPoly want = P.functions.normal_form((QRat::q_pow(2) * r - NCPoly(1)) * (r - NCPoly(1)));
    EXPECT_EQ(reduce_to_rho(NCPoly::word({z(1), z(1), zb(1), zb(1)}), P).rho_part, want);
    auto u = reduce_to_rho(NCPoly::word({z(1), z(1), zb(1)}), P);
    EXPECT_TRUE(u.rho_part.is_zero());
    EXPECT_FALSE(u.unbalanced.is_zero());
}

TEST(Integrate, ClosedFormExamples) {
    auto P = build_projective(1);
    EXPECT_EQ(integrate(NCPoly(1), P), QRat(1));
    EXPECT_EQ(integrate(NCPoly(rhoinv(1)), P), (1 + q() * q()).inv());
    EXPECT_TRUE(integrate(NCPoly(z(1)), P).is_zero());
    const QRat v = integrate(NCPoly::word({z(1), zb(1)}) * rho_power(1, -2), P);
    EXPECT_EQ(v, (1 + QRat::q_pow(2)).inv() - (1 + QRat::q_pow(2) + QRat::q_pow(4)).inv());
    EXPECT_EQ(v.at_one(), BigRat(1, 6));
    EXPECT_EQ(integrate(rho_power(1, -2), P).at_one(), BigRat(1, 3));
    EXPECT_THROW(integrate(NCPoly::word({z(1), zb(1)}), P), Divergent);
    EXPECT_THROW(integrate(NCPoly(rho(1)), P), Divergent);
}

TEST(Integrate, RhoIntegralMatchesProduct) {
    // N=2, i=(1,1): I_1 = 2, I_2 = 1, value [1][2]/([3][3])
    EXPECT_EQ(rho_integral({-1, -1}), qint(1) * qint(2) / (qint(3) * qint(3)));
    EXPECT_TRUE(rho_admissible({1, -2}));
    EXPECT_FALSE(rho_admissible({0, 2}));
}

TEST(Integrate, RecursionDilationTorus) {
    for (int N = 1; N <= 3; ++N) {
        auto P = build_projective(N);
        auto rep = check_recursion(P, 4);
        rep.merge(check_dilation_identity(P, 60));
        rep.merge(check_torus_vanishing(P, 6));
        EXPECT_TRUE(rep.all_passed()) << rep.to_text();
    }
}

TEST(Integrate, DilationExamples) {
    auto P2 = build_projective(2);
    const NCPoly f = NCPoly::word({z(1), zb(2)});
    const NCPoly g = NCPoly::word({z(2), zb(1)}) * rho_power(2, -3);
    EXPECT_EQ(dilate(f), QRat::q_pow(-2) * f);
    EXPECT_EQ(integrate(f * g, P2), integrate(g * dilate(f), P2));
    EXPECT_FALSE(integrate(f * g, P2).is_zero());
    auto P1 = build_projective(1);
    const NCPoly f1 = NCPoly::word({z(1), zb(1)}) * rho_power(1, -2);
    EXPECT_EQ(dilate(f1), f1);
    EXPECT_EQ(integrate(f1 * NCPoly(rhoinv(1)), P1), integrate(NCPoly(rhoinv(1)) * f1, P1));
}

// q = 1 values against the beta-integral oracle: every z/zb word of degree
// <= 4 times rho^{-s}, N <= 2. Divergence must agree too.
TEST(Integrate, ClassicalOracle) {
    EXPECT_EQ(*classical_fs_integral({1}, 2), BigRat(1, 6));
    EXPECT_FALSE(classical_fs_integral({1}, 0).has_value());
    for (int N = 1; N <= 2; ++N) {
        auto P = build_projective(N);
        std::vector<Gen> letters;
        for (int a = 1; a <= N; ++a) {
            letters.push_back(z(a));
            letters.push_back(zb(a));
        }
        std::vector<Word> words{{}}, layer{{}};
        for (int d = 1; d <= 4; ++d) {
            std::vector<Word> grown;
            for (const auto& w : layer)
                for (Gen g : letters) {
                    Word u = w;
                    u.push_back(g);
                    grown.push_back(u);
                }
            layer = grown;
            words.insert(words.end(), layer.begin(), layer.end());
        }
        int compared = 0;
        for (const auto& w : words) {
            std::vector<int> k(N, 0), kb(N, 0);
            for (Gen g : w) (g.kind == Kind::Z ? k : kb)[g.i - 1]++;
            for (int s = 0; s <= 4; ++s) {
                const NCPoly f = NCPoly(w) * rho_power(N, -s);
                std::optional<BigRat> want = k == kb ? classical_fs_integral(k, s) : std::optional<BigRat>(0);
                if (!want) {
                    EXPECT_THROW(integrate(f, P), Divergent) << f.str();
                    continue;
                }
                EXPECT_EQ(integrate(f, P).at_one(), *want) << f.str();
                ++compared;
            }
        }
        EXPECT_GT(compared, 100);
    }
}
