#pragma once

// Operations layered on a RewriteSystem: adjoining named elements, formal
// inverses, graded derivations and the q <-> 1/q symmetry.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cpq/report.hpp"
#include "cpq/rewrite.hpp"

namespace cpq {

/// Claim g·h = c·h·g (+ w when `inhomogeneous`, w computed by normal form).
struct CommutationFact {
    Gen h;
    QRat c;
    bool inhomogeneous = false;
};

/// The remainder w = NF(g·h - c·h·g). `g` is either a letter of the system or
/// the defining value of a letter about to be adjoined.
NCPoly commutation_remainder(const RewriteSystem& sys, const NCPoly& g, Gen h, const QRat& c);

/// Ratio c with g·h = c·h·g + (lower terms), read off the largest word shared
/// by NF(g·h) and NF(h·g). Throws CertificateViolation if they share none.
QRat infer_commutation(const RewriteSystem& sys, const NCPoly& g, Gen h);

/// Adjoin a new letter g standing for `value` (e.g. rho_r, L). Each fact is
/// verified on the expanded value and turned into a rule between g and h.
void adjoin_element(RewriteSystem& sys, Gen g, const NCPoly& value, std::int64_t rank,
                    const std::vector<CommutationFact>& facts, const NCPoly& star_image);

/// Adjoin the formal inverse `ginv` of g with rules g·ginv = ginv·g = 1 and,
/// for each fact g·h = c·h·g + w, the derived exchange rule of ginv with h.
/// Throws CertificateViolation if a homogeneous fact fails its normal-form
/// check and NonUnitCoefficient if c = 0.
void localize(RewriteSystem& sys, Gen g, Gen ginv, std::int64_t rank, const std::vector<CommutationFact>& facts);

/// Rewrite the leading word of g's value back to g, so that g and its
/// expansion share one normal form. Throws OrientationFailure unless that
/// word has two letters.
void eliminate_value(RewriteSystem& sys, Gen g);

enum class Derivation { Holomorphic, AntiHolomorphic, Total };

/// Graded derivation determined by its action on letters, extended by
/// the graded Leibniz rule and normal-formed in `sys`.
NCPoly graded_derivation(Derivation which, const NCPoly& p, const RewriteSystem& sys);
/// Action on a single letter before normal forming.
NCPoly derivation_on_letter(Derivation which, Gen g, const RewriteSystem& sys);

/// Letter map of the q -> 1/q symmetry: x_i -> q^{-2i} xb^i, xb^i -> x_i,
/// D^i -> q^{2i} Db_i, Db_i -> D^i; on CP_q(N) the induced map
/// z_a -> q^{1-2a} zb^a, zb^a -> q z_a, del^a -> q^{2a-1} delb_a, delb_a -> q^-1 del^a.
NCPoly q_symmetry_letter(Gen g);
/// Algebra map: letters by q_symmetry_letter, coefficients q -> 1/q.
NCPoly apply_q_symmetry(const NCPoly& p);

/// Each rule read as a relation lhs - rhs = 0.
std::vector<NCPoly> rule_relations(const RewriteSystem& sys);

/// Checks shared by every shipped system: orientation completeness, local
/// confluence, *-closure of the rule set, and (optionally) q-symmetry closure.
Report check_system_hygiene(const RewriteSystem& sys, bool with_star, bool with_q_symmetry);

/// NF(NF p) = NF p, NF p has only normal words, and NF(a p + b r) = a NF p + b NF r
/// on `samples` random polynomials over the alphabet (words of length <= max_len).
Report check_normal_form_properties(const RewriteSystem& sys, int samples, int max_len, std::uint64_t seed = 11);

}  // namespace cpq
