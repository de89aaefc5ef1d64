#pragma once

// The invariant integral <f> on CP_q(N), normalized by <1> = 1.

#include <cstdint>
#include <vector>

#include "cpq/cpn.hpp"
#include "cpq/report.hpp"

namespace cpq {

/// Output of reduce_to_rho. `rho_part` has words in rho_r^{+-1} only;
/// `unbalanced` collects normal-form words whose z and zb multidegrees differ.
struct RhoReduction {
    NCPoly rho_part;
    NCPoly unbalanced;
};

/// Normal-form p in the functions system, then repeatedly replace the inner
/// pair z_a zb^a of each balanced word by rho_a - rho_{a-1} (rho_0 = 1).
RhoReduction reduce_to_rho(const NCPoly& p, const ProjectiveAlgebra& P);

/// Exponents e_a of rho_a (a = 1..N) in a word of rho letters.
std::vector<int> rho_exponents(const Word& w, int N);

/// <rho_1^{e_1} ... rho_N^{e_N}> = prod_a [a]/[I_a + a], I_a = -(e_a + ... + e_N).
/// Throws Divergent when some I_a + a <= 0.
QRat rho_integral(const std::vector<int>& e);
bool rho_admissible(const std::vector<int>& e);

QRat integrate(const NCPoly& p, const ProjectiveAlgebra& P);
QRat integrate(const NCPoly& p, int N);

/// f(Dz, D^-1 zb) with D = diag(q^2, ..., q^{2N}).
NCPoly dilate(const NCPoly& f);

/// Closed form against the recursion for exponents in [-maxexp, maxexp],
/// positivity at sample q, and the recursion rederived from <zb^a M z_a>.
Report check_recursion(const ProjectiveAlgebra& P, int maxexp);
/// <f g> = <g f(Dz, D^-1 zb)> on `samples` random integrable pairs.
Report check_dilation_identity(const ProjectiveAlgebra& P, int samples, std::uint64_t seed = 1);
/// Every z/zb word of degree <= max_degree with unequal multidegree integrates to 0.
Report check_torus_vanishing(const ProjectiveAlgebra& P, int max_degree);

}  // namespace cpq
