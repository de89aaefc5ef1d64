#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "cpq/errors.hpp"
#include "cpq/qgroup.hpp"

using namespace cpq;
using namespace cpq::gen;

namespace {
void expect_clean(const Report& r) {
    EXPECT_TRUE(r.all_passed()) << r.to_text();
}
NCPoly Tp(int i, int j) { return NCPoly(T(i, j)); }
}  // namespace

TEST(QGroup, CovarianceN1) { expect_clean(check_covariance(1)); }
TEST(QGroup, CovarianceN2) { expect_clean(check_covariance(2)); }
TEST(QGroup, FractionalAndK) { expect_clean(check_K_invariance(1)); }

TEST(QGroup, RttRelationsAtQ1Commute) {
    // at q = 1 each RTT relation vanishes once the T entries commute
    const auto rels = rtt_relations(build_rhat(2, 0));
    ASSERT_EQ(rels.size(), 12u);  // the four trivial ones are dropped
    for (const auto& r : rels) {
        std::map<Word, BigRat> sorted;
        for (const auto& [w, c] : r.terms()) {
            Word u = w;
            std::sort(u.begin(), u.end());
            sorted[u] += c.at_one();
        }
        for (const auto& [u, c] : sorted) EXPECT_EQ(c, 0);
    }
}

TEST(QGroup, WrongDeterminantIsNotCentral) {
    RewriteSystem gl("gl2");
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) gl.add_generator(T(a, b), 20000 + 2 * a + b);
    gl.orient_relations(rtt_relations(build_rhat(2, 0)));
    const NCPoly good = quantum_determinant2();
    const NCPoly bad = Tp(0, 0) * Tp(1, 1) - QRat::q().inv() * (Tp(0, 1) * Tp(1, 0));
    EXPECT_TRUE(gl.normal_form(good * Tp(0, 1) - Tp(0, 1) * good).is_zero());
    EXPECT_FALSE(gl.normal_form(bad * Tp(0, 0) - Tp(0, 0) * bad).is_zero());
}

TEST(QGroup, IdentityAndUnsupported) {
    const NCPoly p = NCPoly(x(0)) * NCPoly(xi(1)) + NCPoly(Db(0));
    EXPECT_EQ(at_identity(coact(p, 3)), p);
    EXPECT_THROW(coact(NCPoly(xb(1)), 3), UnsupportedGenerator);
    EXPECT_NO_THROW(coact(NCPoly(xb(1)), 2));
}
