#pragma once

// Typed generators, words and noncommutative polynomials over Q(q).

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "cpq/qrat.hpp"

namespace cpq {

enum class Kind : std::uint8_t {
    // ambient quantum plane, index i = 0..N
    X,
    XBar,
    Xi,
    XiBar,
    Dx,
    DxBar,
    X0Inv,
    XBar0Inv,
    L,
    LInv,
    LHalf,
    LHalfInv,
    // projective space, index a = 1..N, optional copy label
    Z,
    ZBar,
    Dz,
    DzBar,
    Del,
    DelBar,
    Rho,     // rho_r, index r = 1..N
    RhoInv,
    // quantum group entries T^i_j
    T,
    TInv,
    // opaque elements adjoined by name (localizations of composite expressions)
    Aux,
    AuxInv,
};

/// A generator: kind plus up to two indices and a copy label (0 = none).
struct Gen {
    Kind kind{};
    std::uint8_t i = 0;
    std::uint8_t j = 0;
    std::uint8_t copy = 0;

    constexpr std::uint32_t code() const {
        return (static_cast<std::uint32_t>(kind) << 24) | (static_cast<std::uint32_t>(copy) << 16) |
               (static_cast<std::uint32_t>(i) << 8) | j;
    }
    static constexpr Gen from_code(std::uint32_t c) {
        return Gen{static_cast<Kind>(c >> 24), static_cast<std::uint8_t>((c >> 8) & 0xff),
                   static_cast<std::uint8_t>(c & 0xff), static_cast<std::uint8_t>((c >> 16) & 0xff)};
    }
    friend constexpr bool operator==(Gen a, Gen b) { return a.code() == b.code(); }
    friend constexpr bool operator<(Gen a, Gen b) { return a.code() < b.code(); }
};

/// Form degree: 1 for the differentials, 0 for everything else.
int parity(Gen g);
/// True for kinds that are the formal inverse of another generator.
bool is_inverse_kind(Kind k);
/// Inverse partner kind (X0Inv <-> X, etc.); throws UnsupportedGenerator if none.
Kind inverse_kind(Kind k);

std::string to_string(Gen g);

namespace gen {
inline Gen x(int i) { return {Kind::X, static_cast<std::uint8_t>(i)}; }
inline Gen xb(int i) { return {Kind::XBar, static_cast<std::uint8_t>(i)}; }
inline Gen xi(int i) { return {Kind::Xi, static_cast<std::uint8_t>(i)}; }
inline Gen xib(int i) { return {Kind::XiBar, static_cast<std::uint8_t>(i)}; }
inline Gen D(int i) { return {Kind::Dx, static_cast<std::uint8_t>(i)}; }
inline Gen Db(int i) { return {Kind::DxBar, static_cast<std::uint8_t>(i)}; }
inline Gen x0inv() { return {Kind::X0Inv}; }
inline Gen xb0inv() { return {Kind::XBar0Inv}; }
inline Gen L() { return {Kind::L}; }
inline Gen Linv() { return {Kind::LInv}; }
inline Gen Lhalf() { return {Kind::LHalf}; }
inline Gen Lhalfinv() { return {Kind::LHalfInv}; }
inline Gen z(int a, int copy = 0) { return {Kind::Z, static_cast<std::uint8_t>(a), 0, static_cast<std::uint8_t>(copy)}; }
inline Gen zb(int a, int copy = 0) { return {Kind::ZBar, static_cast<std::uint8_t>(a), 0, static_cast<std::uint8_t>(copy)}; }
inline Gen dz(int a, int copy = 0) { return {Kind::Dz, static_cast<std::uint8_t>(a), 0, static_cast<std::uint8_t>(copy)}; }
inline Gen dzb(int a, int copy = 0) { return {Kind::DzBar, static_cast<std::uint8_t>(a), 0, static_cast<std::uint8_t>(copy)}; }
inline Gen del(int a) { return {Kind::Del, static_cast<std::uint8_t>(a)}; }
inline Gen delb(int a) { return {Kind::DelBar, static_cast<std::uint8_t>(a)}; }
inline Gen rho(int r) { return {Kind::Rho, static_cast<std::uint8_t>(r)}; }
inline Gen rhoinv(int r) { return {Kind::RhoInv, static_cast<std::uint8_t>(r)}; }
inline Gen T(int i, int j) { return {Kind::T, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}; }
inline Gen Tinv(int i, int j) { return {Kind::TInv, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}; }
inline Gen aux(int id) { return {Kind::Aux, static_cast<std::uint8_t>(id)}; }
inline Gen auxinv(int id) { return {Kind::AuxInv, static_cast<std::uint8_t>(id)}; }
}  // namespace gen

using Word = std::vector<Gen>;

int parity(const Word& w);
std::string to_string(const Word& w);

struct WordLess {
    bool operator()(const Word& a, const Word& b) const;
};

/// Finite QRat-linear combination of words. No zero coefficients are stored.
class NCPoly {
public:
    using Terms = std::map<Word, QRat, WordLess>;

    NCPoly() = default;
    NCPoly(long c);          // NOLINT(google-explicit-constructor)
    NCPoly(const QRat& c);   // NOLINT(google-explicit-constructor)
    NCPoly(Gen g);           // NOLINT(google-explicit-constructor)
    NCPoly(const Word& w, const QRat& c = 1);

    static NCPoly word(std::initializer_list<Gen> gs, const QRat& c = 1) { return NCPoly(Word(gs), c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of the empty word.
    QRat constant_term() const;
    QRat coeff(const Word& w) const;

    void add_term(const Word& w, const QRat& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const QRat& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const QRat& c) { return a *= c; }
    friend NCPoly operator*(const QRat& c, NCPoly a) { return a *= c; }
    /// Concatenation product (free algebra, no rewriting).
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly&, const NCPoly&) = default;

    NCPoly pow(int k) const;
    /// Apply f to every coefficient.
    NCPoly map_coeffs(const std::function<QRat(const QRat&)>& f) const;
    /// Replace every generator by a polynomial (an algebra map of the free algebra).
    NCPoly substitute(const std::function<NCPoly(Gen)>& f) const;
    /// Highest/lowest form degree among terms (0 for zero).
    int max_parity() const;
    /// True when every term has the same form degree.
    bool is_homogeneous_form() const;

    /// Canonical textual form, reparseable by the expression grammar.
    std::string str() const;

private:
    Terms terms_;
};

/// Graded commutator [a, b]_± = ab - (-1)^{|a||b|} ba (free algebra).
NCPoly graded_commutator(const NCPoly& a, const NCPoly& b);

}  // namespace cpq
