#pragma once

// The coaction x_i -> x_j T^j_i of GL_q(N+1) / SU_q(N+1) on the ambient
// calculus, and the induced fractional transformations of CP_q(N).

#include <vector>

#include "cpq/cpn.hpp"
#include "cpq/cqspace.hpp"
#include "cpq/report.hpp"

namespace cpq {

/// R T1 T2 = T1 T2 R: sum_{kl} T^c_k T^d_l R^{kl}_{ij} = sum_{ab} R^{cd}_{ab} T^a_i T^b_j.
std::vector<NCPoly> rtt_relations(const IndexedMatrix& R);

/// SU_q(2) with alpha = T^0_0, beta = T^0_1, gamma = T^1_0, delta = T^1_1:
/// det_q = alpha delta - q beta gamma = 1 and
/// T^-1 = [[delta, -q^-1 beta], [-q gamma, alpha]].
NCPoly quantum_determinant2();
/// (T^-1)^i_j as a polynomial in the T entries; n = 2 only.
NCPoly antipode_entry(int i, int j);

/// A copy of a base system with the T^i_j adjoined (ranked above every base
/// letter), the RTT rules, T commuting with the base letters, and for n = 2
/// the determinant rule det_q = 1.
struct CoactionAlgebra {
    int n = 0;
    bool unimodular = false;
    RewriteSystem sys;
};

/// unimodular adds D_q = 1 (n = 2 only).
CoactionAlgebra build_coaction(const RewriteSystem& base, int n, bool unimodular = true);

/// x_i -> x_j T^j_i, xi_i -> xi_j T^j_i, Db_i -> Db_j q^{2i'} T^j_i q^{-2j'};
/// xb^i -> (T^-1)^i_j xb^j, xib^i and D^i likewise (n = 2 only, else
/// UnsupportedGenerator). L and L^-1 are fixed. Not normal-formed.
NCPoly coact(const NCPoly& p, int n);

/// A CP_q(1) element after z -> (T^0_0 + z T^1_0)^-1 (T^0_1 + z T^1_1),
/// written over the ambient as x'_0^-m numerator xb'^0^-k with x' = x T,
/// xb' = T^-1 xb. `numerator` is normal-formed in the coaction algebra.
struct FractionalImage {
    int left = 0;
    NCPoly numerator;
    int right = 0;
};

/// Clears x_0^-1 on the left and xb0^-1 on the right of p's ambient image, then coacts.
/// Throws PreconditionViolated when the cleared numerator still holds an inverse.
FractionalImage fractional_transform(const NCPoly& p, const AmbientAlgebra& A, const CoactionAlgebra& C);

/// T set to the identity matrix.
NCPoly at_identity(const NCPoly& p);

/// Confluence of RTT plus base rules, T T^-1 = T^-1 T = 1 (n = 2), and every
/// displayed ambient relation mapped to 0: x, xi and Db sectors for n <= 3,
/// all sectors for n = 2.
Report check_covariance(int N);
/// N = 1: fractional images of every CP relation vanish, the eta shift
/// eta -> eta + q f^-1 delta f with f = T^0_0 + z T^1_0, and K' = K.
Report check_K_invariance(int N);

}  // namespace cpq
