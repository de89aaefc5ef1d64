#pragma once

// Exact arithmetic in Q(q): rational functions of the deformation parameter
// with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cpq {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Dense univariate polynomial in q over Z, lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor)
    explicit Poly(BigInt c);
    explicit Poly(std::vector<BigInt> coeffs);

    static Poly monomial(BigInt c, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Exponent of the lowest nonzero term (0 for the zero polynomial).
    int low_degree() const;
    bool is_monomial() const;
    const BigInt& lead() const { return c_.back(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int k) const;

    BigInt content() const;
    Poly primitive_part() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly scaled(const BigInt& k) const;
    /// Divide every coefficient exactly by k.
    Poly divided_exact(const BigInt& k) const;
    /// Multiply by q^k (k may be negative when low_degree() >= -k).
    Poly shifted(int k) const;
    /// Exact quotient; throws std::logic_error if `d` does not divide *this over Z.
    Poly divided_exact(const Poly& d) const;
    /// Pseudo-remainder of *this by d.
    Poly pseudo_rem(const Poly& d) const;
    /// p(q) -> q^degree * p(1/q).
    Poly reversed() const;

    BigRat eval(const BigRat& x) const;

    std::string str() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// GCD in Z[q], normalized to positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

/// Element of Q(q) in canonical reduced form: gcd(num, den) = 1 and den has
/// positive leading coefficient, so structural equality is mathematical equality.
class QRat {
public:
    QRat() : num_(0L), den_(1L) {}
    QRat(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
    explicit QRat(const BigRat& c);
    QRat(Poly num, Poly den);

    static QRat q() { return q_pow(1); }
    static QRat q_pow(int k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// True when the value is an integer/rational constant independent of q.
    bool is_constant() const;

    QRat operator-() const;
    QRat& operator+=(const QRat& o);
    QRat& operator-=(const QRat& o);
    QRat& operator*=(const QRat& o);
    QRat& operator/=(const QRat& o);
    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
    friend bool operator==(const QRat&, const QRat&) = default;

    QRat inv() const;
    QRat pow(int k) const;
    /// c(q) -> c(1/q).
    QRat q_inverted() const;

    /// Value at a rational q; throws PoleAtSample if the denominator vanishes.
    BigRat eval(const BigRat& x) const;
    BigRat at_one() const { return eval(BigRat(1)); }

    /// "p(q)" or "(p(q))/(r(q))", reparseable by the expression grammar.
    std::string str() const;
    /// True when str() needs parentheses as a product factor.
    bool needs_parens() const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const QRat& c);
std::ostream& operator<<(std::ostream& os, const Poly& p);

/// lambda = q - 1/q.
QRat lambda_const();
/// q-integer [x] = (q^{2x} - 1)/(q^2 - 1).
QRat qint(int x);
/// lim_{q->1} c/(q-1); requires c(1) = 0, otherwise NonVanishingAtOne.
BigRat limit_div_q_minus_1(const QRat& c);

std::string rat_str(const BigRat& r);

}  // namespace cpq
