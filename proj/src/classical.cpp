#include "cpq/classical.hpp"

namespace cpq {

namespace {

BigRat factorial(int n) {
    BigRat f(1);
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// B(a, b) for positive integers.
BigRat beta(int a, int b) { return factorial(a - 1) * factorial(b - 1) / factorial(a + b - 1); }

// int_{R+^N} prod t_a^{k_a} (1 + sum t)^{-m} dt. The innermost variable is
// integrated first: int_0^inf t^k (c + t)^{-m} dt = c^{k+1-m} B(k+1, m-k-1).
std::optional<BigRat> dirichlet(const std::vector<int>& k, int m) {
    BigRat v(1);
    for (auto it = k.rbegin(); it != k.rend(); ++it) {
        const int b = m - *it - 1;
        if (b <= 0) return std::nullopt;
        v *= beta(*it + 1, b);
        m = b;
    }
    return v;
}

}  // namespace

std::optional<BigRat> classical_fs_integral(const std::vector<int>& k, int s) {
    const int N = static_cast<int>(k.size());
    auto num = dirichlet(k, s + N + 1);
    if (!num) return std::nullopt;
    auto den = dirichlet(std::vector<int>(N, 0), N + 1);
    return *num / *den;
}

}  // namespace cpq
