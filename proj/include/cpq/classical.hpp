#pragma once

// Classical Fubini-Study integrals on CP(N), computed independently of the
// quantum machinery by iterated beta integrals over t_a = |z_a|^2.

#include <optional>
#include <vector>

#include "cpq/qrat.hpp"

namespace cpq {

/// Normalized integral of prod_a |z_a|^{2k_a} rho^{-s} against rho^{-(N+1)} d^{2N}z,
/// with N = k.size(). Empty when the integral diverges.
std::optional<BigRat> classical_fs_integral(const std::vector<int>& k, int s);

}  // namespace cpq
