#pragma once

// q -> 1 Poisson structure: (f, g) = lim (f g -+ g f)/(q - 1).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cpq/cpn.hpp"
#include "cpq/report.hpp"

namespace cpq {

/// Graded-commutative expression over Q in z_a, zb^a (even) and dz_a, dzb^a
/// (odd), divided by a product of rho_r powers. Numerators are fully expanded;
/// two expressions are equal iff their difference has an empty numerator.
class ClassicalExpr {
public:
    /// even exponents (z_1..z_N, zb^1..zb^N), odd letters as a bitmask in the same order
    using Key = std::pair<std::vector<int>, std::uint32_t>;

    explicit ClassicalExpr(int N = 1);
    ClassicalExpr(int N, const BigRat& c);
    static ClassicalExpr letter(int N, Gen g);
    /// 1 + sum_{c <= r} z_c zb^c
    static ClassicalExpr rho(int N, int r);

    int N() const { return N_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, BigRat>& terms() const { return terms_; }
    const std::vector<int>& denominator() const { return den_; }

    ClassicalExpr operator-() const;
    ClassicalExpr& operator+=(const ClassicalExpr& o);
    ClassicalExpr& operator-=(const ClassicalExpr& o);
    friend ClassicalExpr operator+(ClassicalExpr a, const ClassicalExpr& b) { return a += b; }
    friend ClassicalExpr operator-(ClassicalExpr a, const ClassicalExpr& b) { return a -= b; }
    friend ClassicalExpr operator*(const ClassicalExpr& a, const ClassicalExpr& b);
    friend ClassicalExpr operator*(const BigRat& c, const ClassicalExpr& a);
    friend bool operator==(const ClassicalExpr& a, const ClassicalExpr& b) { return (a - b).is_zero(); }

    /// Divide by rho_r^k, k >= 0.
    ClassicalExpr divided_by_rho(int r, int k) const;

    /// Exterior derivative.
    ClassicalExpr d() const;
    /// Partial derivative in an even letter (z or zb).
    ClassicalExpr partial(Gen v) const;
    /// Complex conjugation: z <-> zb, dz <-> dzb, products reversed.
    ClassicalExpr star() const;
    /// Form degree when homogeneous; -1 otherwise (0 for zero).
    int degree() const;

    std::string str() const;

private:
    int N_;
    std::map<Key, BigRat> terms_;
    std::vector<int> den_;  // rho_r exponent in the denominator, r = 1..N

    void add_term(const Key& k, const BigRat& c);
    ClassicalExpr with_denominator(const std::vector<int>& den) const;
};

/// q = 1 image of p. Letters outside z, zb, dz, dzb, rho_r^{+-1} throw UnsupportedGenerator.
ClassicalExpr classical_limit(const NCPoly& p, int N);

/// (f, g) for f, g of definite form degree m, n: normal form of f g - (-1)^{mn} g f
/// in the forms system (or the functions system when f, g involve rho_r, r < N),
/// each coefficient divided by (q - 1) at q = 1. Throws NonVanishingAtOne.
ClassicalExpr poisson_bracket(const NCPoly& f, const NCPoly& g, const ProjectiveAlgebra& P);

/// Bracket of classical functions from the bivector {u, v} on coordinates.
class FunctionBracket {
public:
    explicit FunctionBracket(const ProjectiveAlgebra& P);
    ClassicalExpr operator()(const ClassicalExpr& F, const ClassicalExpr& G) const;

private:
    int N_;
    std::vector<Gen> coords_;
    std::vector<std::vector<ClassicalExpr>> table_;
};

Report check_poisson_table(const ProjectiveAlgebra& P);
Report check_poisson_structure(const ProjectiveAlgebra& P, std::uint64_t seed = 1);

}  // namespace cpq
