#include <gtest/gtest.h>

#include "cpq/cpn.hpp"
#include "cpq/errors.hpp"
#include "cpq/geometry.hpp"
#include "cpq/parse.hpp"

using namespace cpq;
using namespace cpq::gen;

TEST(Parse, Word) {
    EXPECT_EQ(parse_expr("z[1]*zb[1]", {1, -1}), NCPoly::word({z(1), zb(1)}));
}

TEST(Parse, MetricShape) {
    const QRat q = QRat::q();
    const NCPoly want = q.inv() * (NCPoly::word({rhoinv(1), rhoinv(1)}) * (NCPoly(rho(1)) - q * q * NCPoly::word({zb(1), z(1)})));
    EXPECT_EQ(parse_expr("q^-1 * rho^-2 * (rho - q^2*zb[1]*z[1])", {1, -1}), want);
}

TEST(Parse, CopyDifference) {
    EXPECT_EQ(parse_expr("z[1,A=2] - z[1,A=3]", {1, 4}), pt_diff(2, 3, 1));
}

TEST(Parse, Scalars) {
    EXPECT_EQ(parse_expr("lambda"), NCPoly(lambda_const()));
    EXPECT_EQ(parse_expr("(q^2 - 1)/q - lambda"), NCPoly());
    EXPECT_EQ(parse_expr("2/4*x[0]"), NCPoly(x(0)) * QRat(BigRat(1, 2)));
    EXPECT_EQ(parse_expr("x[0]^-1*x[0,A=2]^-2"), NCPoly::word({x0inv(), Gen{Kind::X0Inv, 0, 0, 2}, Gen{Kind::X0Inv, 0, 0, 2}}));
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse_expr("z[1]*", {1, -1}), SyntaxError);
    EXPECT_THROW(parse_expr("z[1] / z[1]"), SyntaxError);
    EXPECT_THROW(parse_expr("(z[1] + 1)^-1"), SyntaxError);
    EXPECT_THROW(parse_expr("z[1]^-1"), SyntaxError);
    EXPECT_THROW(parse_expr("y[1]"), UnknownGenerator);
    EXPECT_THROW(parse_expr("z[2]", {1, -1}), IndexOutOfRange);
    EXPECT_THROW(parse_expr("z[1,A=5]", {1, 4}), IndexOutOfRange);
    EXPECT_THROW(parse_expr("T[0]"), SyntaxError);
    try {
        parse_expr("z[1] + )");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.position, 7u);
    }
}

// render(parse(s)) parses back to the same polynomial, over normal forms that
// exercise rational coefficients, inverses and copy labels
TEST(Parse, RoundTrip) {
    std::vector<NCPoly> corpus;
    const ProjectiveAlgebra P = build_projective(2);
    corpus.push_back(kahler_form(P));
    corpus.push_back(P.functions.normal_form(NCPoly::word({zb(2), z(1), rhoinv(2), z(2)})));
    corpus.push_back(P.forms.normal_form(NCPoly::word({dzb(1), z(2), dz(1), zb(1)})));
    const BraidedAlgebra B = build_braided(1, 3);
    corpus.push_back(B.rewrite.normal_form(NCPoly::word({z(1, 3), z(1, 1), zb(1, 2), z(1, 2)})));
    corpus.push_back(NCPoly::word({x0inv(), xb0inv(), L(), Linv(), T(0, 1), Tinv(1, 0), aux(3), auxinv(3)}, QRat(BigRat(-3, 7))));
    corpus.push_back(NCPoly(lambda_const() * lambda_const()) - NCPoly::word({xi(0), xib(1), D(0), Db(1), del(1), delb(2)}));
    for (const auto& p : corpus) {
        const std::string s = p.str();
        const NCPoly back = parse_expr(s);
        EXPECT_EQ(back, p) << s;
        EXPECT_EQ(back.str(), s);
    }
}
