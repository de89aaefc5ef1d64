#pragma once

// The covariant calculus on the complex quantum space C_q^{N+1}.

#include <string>
#include <vector>

#include "cpq/calculus.hpp"
#include "cpq/report.hpp"
#include "cpq/rewrite.hpp"
#include "cpq/rmatrix.hpp"

namespace cpq {

/// A displayed relation instance, lhs - rhs, with a label such as "xbx[1,0]".
struct NamedRelation {
    std::string name;
    NCPoly relation;
};

/// Functions, differentials and derivatives live in two rewriting systems:
/// `forms` over x, xb, xi, xib and `derivs` over x, xb, D, Db. The derivative
/// and differential letters are never multiplied together.
struct AmbientAlgebra {
    int N = 0;
    IndexedMatrix R{1, 0};
    RewriteSystem forms;
    RewriteSystem derivs;
    std::vector<NamedRelation> function_relations;
    std::vector<NamedRelation> form_relations;
    std::vector<NamedRelation> derivative_relations;
    /// Exponent n of the derivative involution currently installed.
    int star_power = 0;
};

std::vector<NamedRelation> ambient_function_relations(int N, const IndexedMatrix& R);
/// Holomorphic differential relations and their * images.
std::vector<NamedRelation> ambient_form_relations(int N, const IndexedMatrix& R);
std::vector<NamedRelation> ambient_derivative_relations(int N, const IndexedMatrix& R);

/// Orients all relations, adjoins L = x_i xb^i with its inverse, and inverts
/// x_0 and xb^0 in the forms system.
AmbientAlgebra build_ambient(int N);

/// L^n as a word in L or L^-1.
NCPoly L_power(int n);
/// Install (D^i)* = -q^{-2i'} L^n Db_i L^-n and (Db_i)* = -q^{2i'} L^n D^i L^-n.
void set_derivative_star(AmbientAlgebra& A, int n);

Report check_relation_reproduction(const AmbientAlgebra& A);
Report check_L_central(const AmbientAlgebra& A);
/// delta^2 = deltabar^2 = 0, deltabar x_j = x_j deltabar, and delta f = xi_i (D^i f).
Report check_derivative_calculus(const AmbientAlgebra& A, int max_len = 3);
Report check_involution_family(AmbientAlgebra A, int n);
Report check_ambient_q_symmetry(const AmbientAlgebra& A);

}  // namespace cpq
