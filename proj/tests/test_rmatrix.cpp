#include <gtest/gtest.h>

#include <json.hpp>

#include "cpq/rmatrix.hpp"

using namespace cpq;

namespace {
QRat q() { return QRat::q(); }
}  // namespace

TEST(RMatrix, TwoDimensionalEntries) {
    const auto R = build_rhat(2, 0);
    const QRat lam = lambda_const();
    EXPECT_EQ(R.at(0, 0, 0, 0), q());
    EXPECT_EQ(R.at(1, 1, 1, 1), q());
    EXPECT_EQ(R.at(1, 0, 0, 1), QRat(1));
    EXPECT_EQ(R.at(0, 1, 0, 1), lam);
    EXPECT_EQ(R.at(0, 1, 1, 0), QRat(1));
    EXPECT_TRUE(R.at(1, 0, 1, 0).is_zero());
    EXPECT_EQ(R.entries().size(), 5u);
}

TEST(RMatrix, OneDimensionalIsScalarQ) {
    const auto R = build_rhat(1, 1);
    ASSERT_EQ(R.entries().size(), 1u);
    EXPECT_EQ(R.at(1, 1, 1, 1), q());
}

TEST(RMatrix, ThreeDimensionalPattern) {
    const auto R = build_rhat(3, 0);
    EXPECT_EQ(R.at(0, 2, 2, 0), QRat(1));
    EXPECT_EQ(R.at(0, 2, 0, 2), lambda_const());
    EXPECT_TRUE(R.at(2, 0, 2, 0).is_zero());
}

// The convention is pinned by feeding R into x_i x_j = q^{-1} R^{kl}_{ij} x_k x_l
// and requiring x_0 x_a = q x_a x_0. Commuting symbols model the quadratic
// relation space: the relation for (i,j) = (0,a) reads
//   x_0 x_a - q^{-1}(R^{a0}_{0a} x_a x_0 + R^{0a}_{0a} x_0 x_a) = 0,
// so x_0 x_a (1 - R^{0a}_{0a}/q) = (R^{a0}_{0a}/q) x_a x_0.
TEST(RMatrix, ConventionReproducesQCommutation) {
    for (int n = 2; n <= 4; ++n) {
        const auto R = build_rhat(n, 0);
        for (int a = 1; a < n; ++a) {
            QRat lhs = 1 - R.at(0, a, 0, a) / q();
            QRat rhs = R.at(a, 0, 0, a) / q();
            EXPECT_EQ(rhs / lhs, q()) << "n=" << n << " a=" << a;
            // the reversed pair gives the same relation
            EXPECT_EQ(R.at(0, a, a, 0) / q(), q().inv());
            EXPECT_TRUE(R.at(a, 0, a, 0).is_zero());
        }
    }
}

TEST(RMatrix, IdentitiesHoldUpToFive) {
    for (int n = 2; n <= 5; ++n) {
        const auto rep = check_matrix_identities(build_rhat(n, 0));
        EXPECT_TRUE(rep.all_passed()) << rep.to_text();
        EXPECT_EQ(rep.entries().size(), 6u);
    }
    EXPECT_TRUE(check_matrix_identities(build_rhat(3, 1)).all_passed());
}

TEST(RMatrix, PerturbedMatrixFailsHecke) {
    auto R = build_rhat(2, 0);
    R.set(0, 1, 0, 1, 0);
    const auto rep = check_matrix_identities(R);
    bool hecke_failed = false;
    for (const auto& e : rep.entries())
        if (e.id.find("hecke") != std::string::npos) hecke_failed = e.status == Status::Fail;
    EXPECT_TRUE(hecke_failed);
}

TEST(RMatrix, PhiEntries) {
    const auto Phi = build_phi(build_rhat(2, 0));
    EXPECT_EQ(Phi.at(0, 0, 0, 0), q());
    // Phi^{ij}_{kl} = R^{ji}_{lk} q^{2(i-l)}
    EXPECT_EQ(Phi.at(0, 1, 1, 0), QRat(1));                    // R^{10}_{01}, i=l
    EXPECT_EQ(Phi.at(1, 0, 0, 1), QRat(1));                    // R^{01}_{10}, i=l
    EXPECT_EQ(Phi.at(1, 0, 1, 0), lambda_const() * QRat::q_pow(2));  // R^{01}_{01} = lambda
}

// The exponent 2(j-k) differs from 2(i-l) exactly on the lambda entries
// R^{ji}_{ji}, i != j; everywhere else the two forms coincide.
TEST(RMatrix, AlternativePhiExponentDiffersOnlyOnLambdaEntries) {
    const auto R = build_rhat(3, 0);
    int differing = 0;
    for (const auto& [k, v] : R.entries()) {
        const int j = k[0], i = k[1], l = k[2], kk = k[3];
        if (i - l != j - kk) {
            ++differing;
            EXPECT_EQ(v, lambda_const());
        }
    }
    EXPECT_EQ(differing, 3);
}

TEST(RMatrix, DiagonalMatrices) {
    auto D = build_dmatrix(2);
    ASSERT_EQ(D.size(), 2u);
    EXPECT_EQ(D[0], QRat::q_pow(-1));
    EXPECT_EQ(D[1], q());
    EXPECT_EQ((D[0] * D[1]).at_one(), 1);
    auto cal = build_cal_d(2);
    EXPECT_EQ(cal[0], QRat::q_pow(2));
    EXPECT_EQ(cal[1], QRat::q_pow(4));
}

TEST(RMatrix, JsonDumpListsNonzeroEntries) {
    auto j = nlohmann::json::parse(build_rhat(2, 0).to_json());
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["entries"].size(), 5u);
    EXPECT_EQ(j["entries"][0]["value"].get<std::string>().empty(), false);
}
