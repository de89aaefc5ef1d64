#pragma once

// m braided copies of CP_q(N), collinearity of quantum points, anharmonic
// ratios and the classical projective invariant I.

#include <cstdint>
#include <string>
#include <vector>

#include "cpq/cpn.hpp"
#include "cpq/report.hpp"

namespace cpq {

/// Copies are labelled A = 1..m through Gen::copy. Normal words put z before
/// zb and lower copies first; the lambda term of the braiding leaves no other
/// degree-lexicographic orientation.
struct BraidedAlgebra {
    int N = 0;
    int m = 0;
    IndexedMatrix R{1, 1};
    RewriteSystem rewrite;
    /// z^A_a z^B_b = q R^{ce}_{ab} (z^B_c - q^-1 lambda z^A_c) z^A_e and
    /// zb^B_a z^A_b = q^-1 (R^-1)^{ac}_{be} z^A_c zb^B_e - q^-1 lambda delta^a_b
    /// for A <= B, with their * images.
    std::vector<NamedRelation> relations;
};

std::vector<NamedRelation> braided_relations(int N, int A, int B, const IndexedMatrix& R);
BraidedAlgebra build_braided(int N, int m);

/// [AB]_a = z^A_a - z^B_a
NCPoly pt_diff(int A, int B, int a);

/// Self-braiding (A = B gives the one-copy relations), q = 1 commutativity,
/// confluence and * closure.
Report check_braided(const BraidedAlgebra& B);

/// Two copies of the ambient plane with x_i x'_j = tau R^{kl}_{ij} x'_k x_l and
/// xb^i x'_j = nu (R^-1)^{ik}_{jl} x'_k xb^l. Checks that L = x_i xb^i commutes
/// with x'_j, xb'^j exactly when tau nu = 1, and that z_a = x_0^-1 x_a,
/// zb^a = xb^a xb^0^-1 satisfy the braided z z' and zb' z relations for
/// (tau, nu) and for a second pair.
Report check_homogeneous_braiding(int N, const QRat& tau, const QRat& nu);

/// alpha(AB)_{ab} = [AB]_a [CD]_b - q^2 [CD]_a [AB]_b with C = m-1, D = m.
NCPoly collinearity_alpha(int A, int B, int a, int b, int m);

struct CollinearityIdeal {
    int N = 0;
    int m = 0;
    std::vector<NamedRelation> generators;
    /// The braided rules.
    RewriteSystem braided;
    /// The braided rules plus each generator oriented by its leading word.
    /// Not confluent for N >= 2 (see check_collinearity), so it is used
    /// only to locate critical pairs.
    RewriteSystem oriented;
};

CollinearityIdeal build_collinearity(const BraidedAlgebra& B);

/// Remainder of p against the span of NF(u alpha v), |u| + |v| <= deg p - 2,
/// over the letters of p and every z letter; echelon form under the word
/// order, so the remainder is canonical. Zero certifies p in I.
NCPoly reduce_mod_collinearity(const NCPoly& p, const CollinearityIdeal& I);

/// Generators and their left multiples z^E_c alpha lie in I, and every
/// critical pair of the oriented rules agrees modulo I.
Report check_collinearity(const BraidedAlgebra& B);

/// The four left-multiplication identities z^B alpha = sum alpha' f for
/// B <= A, A <= B <= C, [CD] and [BD], for every index combination (m >= 4).
Report check_ideal_stability(const BraidedAlgebra& B);

/// (A_0, ..., A_n): determinant of the columns (1, z^{A_k}).
BigRat point_determinant(const std::vector<std::vector<BigRat>>& pts, const std::vector<int>& labels);

/// I for 2(n+1) points of n inhomogeneous coordinates. Labels are 1-based.
/// Throws DegenerateConfiguration when a denominator determinant vanishes.
BigRat classical_invariant_I(const std::vector<std::vector<BigRat>>& pts);

/// (a - c)(b - d) / ((a - d)(b - c))
BigRat cross_ratio(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& d);

/// I against the cross ratio of z, z', z^{n+1}, z^{n+2} on the line through
/// z^{n+1}, z^{n+2}, and I under random projective maps.
Report check_classical_invariant(int n, int samples, std::uint64_t seed = 7);

}  // namespace cpq
