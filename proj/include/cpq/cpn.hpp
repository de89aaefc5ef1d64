#pragma once

// The differential calculus and Kähler geometry of CP_q(N) in inhomogeneous
// coordinates z_a, zb^a, a = 1..N.

#include <string>
#include <vector>

#include "cpq/calculus.hpp"
#include "cpq/cqspace.hpp"
#include "cpq/report.hpp"
#include "cpq/rewrite.hpp"
#include "cpq/rmatrix.hpp"

namespace cpq {

/// Four rewriting systems over the same coordinates:
///   plane      z, zb                          (PBW and Poincaré counts)
///   functions  z, zb, rho_r, rho_r^-1 (r=1..N) (integration)
///   forms      z, zb, dz, dzb, rho, rho^-1      (Kähler geometry)
///   derivs     z, zb, del, delb, rho, rho^-1
/// rho is rho_N. In forms and derivs the word z_1 zb^1 is rewritten to
/// rho - 1 - sum_{a>1} z_a zb^a, so rho and its expansion share one normal
/// form. The functions system keeps rho_r opaque (eliminating every z_r zb^r
/// there would need rules longer than two letters); integration reduces
/// balanced words to rho_r explicitly.
struct ProjectiveAlgebra {
    int N = 0;
    IndexedMatrix R{1, 1};
    RewriteSystem plane;
    RewriteSystem functions;
    RewriteSystem forms;
    RewriteSystem derivs;
    std::vector<NamedRelation> function_relations;
    std::vector<NamedRelation> form_relations;
    std::vector<NamedRelation> derivative_relations;
    int star_power = 0;
};

std::vector<NamedRelation> projective_function_relations(int N, const IndexedMatrix& R);
std::vector<NamedRelation> projective_form_relations(int N, const IndexedMatrix& R);
/// The displayed derivative relations. The delb-delb relation is not displayed;
/// it is taken as delb_a delb_b = q^-1 R^{ce}_{ab} delb_c delb_e, the ambient analogue.
std::vector<NamedRelation> projective_derivative_relations(int N, const IndexedMatrix& R);

/// rho_r = 1 + sum_{a<=r} z_a zb^a as a polynomial.
NCPoly rho_value(int r);
/// rho^k for k of either sign, as a word in rho_r or rho_r^-1.
NCPoly rho_power(int r, int k);

ProjectiveAlgebra build_projective(int N);

/// (del^a)* = -q^{2n-2a'} rho^n delb_a rho^-n, (delb_a)* = -q^{2a'-2n} rho^n del^a rho^-n.
void set_projective_derivative_star(ProjectiveAlgebra& P, int n);

/// Displayed relations, confluence, star closure and the rho_r relations.
Report check_projective_relations(const ProjectiveAlgebra& P);
/// Classical counts C(d+2N-1, 2N-1) of normal z, zb words of each degree d.
Report check_poincare(const ProjectiveAlgebra& P, int max_degree);
/// Image of a CP letter in the localized ambient forms system:
/// z_a = x_0^-1 x_a, zb^a = xb^a (xb^0)^-1, dz_a = x_0^-1(xi_a - xi_0 x_0^-1 x_a) and its conjugate;
/// with N given, also rho_N = x_0^-1 L (xb^0)^-1 and rho_N^-1 = xb^0 L^-1 x_0.
NCPoly ambient_image(Gen g, int N = 0);
/// z_a = x_0^-1 x_a, zb^a = xb^a xb^0^-1 and the matching dz, dzb substituted
/// into every function and form relation vanish in the localized ambient algebra.
Report check_derivation_from_ambient(const ProjectiveAlgebra& P, const AmbientAlgebra& A);
/// delta f = dz_a (del^a f) and deltabar f = dzb^a (delb_a f).
Report check_projective_derivatives(const ProjectiveAlgebra& P, int max_len);
Report check_projective_q_symmetry(const ProjectiveAlgebra& P);

struct OneForms {
    NCPoly eta;
    NCPoly etabar;
    NCPoly Xi;
};

/// eta = lambda/(1 - s/r) delta(a) a^-1, etabar = lambda/(1 - r/s) deltabar(a) a^-1.
/// Verifies a* = a, a z = r z a and a dz = s dz a for every holomorphic letter
/// (PreconditionViolated otherwise, naming the letter).
OneForms one_form_rep(const RewriteSystem& sys, Gen a, Gen a_inv, const QRat& r, const QRat& s);
OneForms projective_one_forms(const ProjectiveAlgebra& P);

/// K = deltabar(eta).
NCPoly kahler_form(const ProjectiveAlgebra& P);

struct MetricPair {
    std::vector<std::vector<NCPoly>> upper;  // g^{a bbar}
    std::vector<std::vector<NCPoly>> lower;  // g_{bbar c}
};
MetricPair kahler_metric(int N);

Report check_one_form_identities(const ProjectiveAlgebra& P);
/// K = dz_a g^{a bbar} dzb^b, dK = 0, K* = K, K central, g g^-1 = 1.
Report check_kahler(const ProjectiveAlgebra& P);

struct VolumeElement {
    NCPoly dv;          // rho^{-(N+1)} dzb^N ... dzb^1 dz_1 ... dz_N
    QRat proportionality;  // K^N = c dv
};
VolumeElement volume_element(const ProjectiveAlgebra& P);
Report check_volume(const ProjectiveAlgebra& P);

}  // namespace cpq
