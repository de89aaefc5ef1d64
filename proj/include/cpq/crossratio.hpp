#pragma once

// Replay of the invariance of the anharmonic ratio on CP_q(1) under the
// SU_q(2) fractional transformation, as a chain of checked claims.

#include <string>
#include <vector>

#include "cpq/report.hpp"

namespace cpq {

/// GLq2 drops D_q = 1; its replay stops at the unimodularity step.
enum class CoactionKind { Identity, Diagonal, Full, GLq2 };

struct ReplayStep {
    int index = 0;
    std::string claim;
    /// How the claim was checked: a normal form, a formal cancellation or a
    /// factorwise q-commutation.
    std::string method;
};

struct ReplayResult {
    int A = 2;
    int B = 3;
    CoactionKind kind = CoactionKind::Full;
    /// Elements the argument divides by. They are declared, not derived.
    std::vector<std::string> assumptions;
    std::vector<ReplayStep> steps;
};

/// CR(A, B) = [A1][A4]^-1 [B4][B1]^-1 on four braided copies at N = 1 with
/// A, B in {2, 3}. Throws StepFailure naming the first claim that does not
/// check, PreconditionViolated for other A, B.
ReplayResult replay_cross_ratio(int A, int B, CoactionKind kind);

std::string to_text(const ReplayResult& r);

/// Every replay (both orders, three coactions) plus the well-definedness of
/// tau(A) = [1A]_a [14]_a^-1 in a at N = 2. PreconditionViolated unless N = 1.
Report check_cross_ratio_invariance(int N);

}  // namespace cpq
