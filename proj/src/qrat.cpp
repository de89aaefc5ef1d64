#include "cpq/qrat.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cpq/errors.hpp"

namespace cpq {

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
    if (c != 0) c_.emplace_back(c);
}

Poly::Poly(BigInt c) {
    if (c != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(BigInt c, int degree) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
    p.c_.back() = std::move(c);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::low_degree() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return 0;
}

bool Poly::is_monomial() const {
    return !c_.empty() && low_degree() == degree();
}

BigInt Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return c_[static_cast<std::size_t>(k)];
}

BigInt Poly::content() const {
    BigInt g = 0;
    for (const auto& x : c_) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    BigInt g = content();
    if (lead() < 0) g = -g;
    return divided_exact(g);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
        }
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly Poly::scaled(const BigInt& k) const {
    if (k == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

Poly Poly::divided_exact(const BigInt& k) const {
    Poly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    if (k > 0) {
        r.c_.assign(static_cast<std::size_t>(k), BigInt(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    } else {
        if (-k > low_degree()) throw std::logic_error("Poly::shifted: negative power");
        r.c_.assign(c_.begin() + (-k), c_.end());
    }
    return r;
}

Poly Poly::divided_exact(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return Poly();
    if (degree() < d.degree()) throw std::logic_error("Poly::divided_exact: not divisible");
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> quo(static_cast<std::size_t>(degree() - d.degree() + 1), BigInt(0));
    const int dd = d.degree();
    for (int k = degree(); k >= dd; --k) {
        auto& top = rem[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.lead().get_mpz_t()))
            throw std::logic_error("Poly::divided_exact: not divisible");
        BigInt t = top / d.lead();
        quo[static_cast<std::size_t>(k - dd)] = t;
        for (int j = 0; j <= dd; ++j)
            mpz_submul(rem[static_cast<std::size_t>(k - dd + j)].get_mpz_t(), t.get_mpz_t(),
                       d.c_[static_cast<std::size_t>(j)].get_mpz_t());
    }
    for (const auto& x : rem)
        if (x != 0) throw std::logic_error("Poly::divided_exact: not divisible");
    return Poly(std::move(quo));
}

Poly Poly::pseudo_rem(const Poly& d) const {
    Poly r = *this;
    const int dd = d.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        Poly t = Poly::monomial(r.lead(), r.degree() - dd) * d;
        r = r.scaled(d.lead()) - t;
    }
    return r;
}

Poly Poly::reversed() const {
    Poly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

BigRat Poly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
    acc.canonicalize();
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        BigInt c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        BigInt a = abs(c);
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "q";
            if (k != 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly gcd(const Poly& a0, const Poly& b0) {
    if (a0.is_zero()) return b0.is_zero() ? Poly() : b0.primitive_part().scaled(BigInt(abs(b0.content())));
    if (b0.is_zero()) return a0.primitive_part().scaled(BigInt(abs(a0.content())));
    BigInt cg;
    mpz_gcd(cg.get_mpz_t(), a0.content().get_mpz_t(), b0.content().get_mpz_t());
    // Common power of q is handled separately; it keeps the PRS short.
    const int common_low = std::min(a0.low_degree(), b0.low_degree());
    Poly a = a0.shifted(-a0.low_degree()).primitive_part();
    Poly b = b0.shifted(-b0.low_degree()).primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero() && b.degree() > 0) {
        Poly r = a.pseudo_rem(b);
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive_part();
    }
    Poly g = b.is_zero() ? a : Poly(1L);
    return g.primitive_part().scaled(cg).shifted(common_low);
}

// ---------------------------------------------------------------- QRat

QRat::QRat(const BigRat& c) : num_(c.get_num()), den_(c.get_den()) { normalize(); }

QRat::QRat(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("QRat with zero denominator");
    normalize();
}

QRat QRat::q_pow(int k) {
    QRat r;
    if (k >= 0) {
        r.num_ = Poly::monomial(1, k);
        r.den_ = Poly(1L);
    } else {
        r.num_ = Poly(1L);
        r.den_ = Poly::monomial(1, -k);
    }
    return r;
}

void QRat::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1L);
        return;
    }
    const int s = std::min(num_.low_degree(), den_.low_degree());
    if (s > 0) {
        num_ = num_.shifted(-s);
        den_ = den_.shifted(-s);
    }
    if (den_.is_monomial() || num_.is_monomial()) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
        if (g != 1) {
            num_ = num_.divided_exact(g);
            den_ = den_.divided_exact(g);
        }
    } else {
        Poly g = gcd(num_, den_);
        if (!(g == Poly(1L))) {
            num_ = num_.divided_exact(g);
            den_ = den_.divided_exact(g);
        }
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool QRat::is_one() const { return num_ == Poly(1L) && den_ == Poly(1L); }

bool QRat::is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat& QRat::operator+=(const QRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = QRat();
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inv(); }

QRat QRat::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero coefficient");
    QRat r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.lead() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QRat QRat::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    QRat r = 1;
    QRat b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

QRat QRat::q_inverted() const {
    // n(1/q)/d(1/q) = q^{dd - dn} rev(n)/rev(d)
    Poly n = num_.reversed();
    Poly d = den_.reversed();
    const int shift = den_.degree() - num_.degree();
    if (shift >= 0)
        n = n.shifted(shift);
    else
        d = d.shifted(-shift);
    return QRat(std::move(n), std::move(d));
}

BigRat QRat::eval(const BigRat& x) const {
    BigRat d = den_.eval(x);
    if (d == 0) throw PoleAtSample("coefficient " + str() + " has a pole at q = " + rat_str(x));
    BigRat r = num_.eval(x) / d;
    r.canonicalize();
    return r;
}

bool QRat::needs_parens() const {
    if (!(den_ == Poly(1L))) return true;
    const auto& c = num_.coeffs();
    int terms = 0;
    for (const auto& x : c)
        if (x != 0) ++terms;
    return terms > 1;
}

std::string QRat::str() const {
    if (den_ == Poly(1L)) return num_.str();
    std::string n = num_.str();
    const bool nparen = !(num_.is_monomial() && num_.lead() > 0 && num_.lead() == 1) &&
                        n.find_first_of("+- *") != std::string::npos;
    std::string d = den_.str();
    const bool dparen = d.find_first_of("+- *") != std::string::npos;
    return (nparen ? "(" + n + ")" : n) + "/" + (dparen ? "(" + d + ")" : d);
}

std::ostream& operator<<(std::ostream& os, const QRat& c) { return os << c.str(); }

QRat lambda_const() { return QRat(Poly::monomial(1, 2) - Poly(1L), Poly::monomial(1, 1)); }

QRat qint(int x) {
    // (q^{2x} - 1)/(q^2 - 1), written over q^{-2x} for negative x.
    Poly q2m1 = Poly::monomial(1, 2) - Poly(1L);
    if (x >= 0) return QRat(Poly::monomial(1, 2 * x) - Poly(1L), q2m1);
    return QRat(Poly(1L) - Poly::monomial(1, -2 * x), q2m1 * Poly::monomial(1, -2 * x));
}

BigRat limit_div_q_minus_1(const QRat& c) {
    if (c.is_zero()) return 0;
    BigRat d1 = c.den().eval(BigRat(1));
    if (d1 == 0 || c.num().eval(BigRat(1)) != 0)
        throw NonVanishingAtOne("coefficient " + c.str() + " does not vanish at q = 1");
    Poly qm1 = Poly::monomial(1, 1) - Poly(1L);
    Poly n = c.num().divided_exact(qm1);
    BigRat r = n.eval(BigRat(1)) / d1;
    r.canonicalize();
    return r;
}

std::string rat_str(const BigRat& r) { return r.get_str(); }

}  // namespace cpq
