#pragma once

// GL_q(n) braid-form R-matrices and the matrices derived from them.

#include <array>
#include <map>
#include <string>

#include "cpq/qrat.hpp"
#include "cpq/report.hpp"

namespace cpq {

/// Sparse four-index array M^{kl}_{ij} (upper pair k,l; lower pair i,j).
/// Indices run over base .. base+n-1.
class IndexedMatrix {
public:
    using Key = std::array<int, 4>;  // {k, l, i, j}

    IndexedMatrix() = default;
    IndexedMatrix(int n, int base) : n_(n), base_(base) {}

    int n() const { return n_; }
    int base() const { return base_; }
    int lo() const { return base_; }
    int hi() const { return base_ + n_ - 1; }

    QRat at(int k, int l, int i, int j) const;
    void set(int k, int l, int i, int j, const QRat& v);
    const std::map<Key, QRat>& entries() const { return e_; }

    /// Composite operator: first this, then `o`:
    /// (A*B)^{kl}_{ij} = sum_{mn} A^{mn}_{ij} B^{kl}_{mn}.
    IndexedMatrix then(const IndexedMatrix& o) const;
    IndexedMatrix plus(const IndexedMatrix& o, const QRat& scale = 1) const;
    static IndexedMatrix identity(int n, int base);

    /// All entries with q -> 1 (as a matrix over Q(q) with constant entries).
    IndexedMatrix at_q_one() const;

    friend bool operator==(const IndexedMatrix&, const IndexedMatrix&) = default;

    std::string to_json() const;

private:
    int n_ = 0;
    int base_ = 0;
    std::map<Key, QRat> e_;
};

/// Standard R-hat: q on i=j, the swap on i!=j, plus lambda on the diagonal pair when i<j.
IndexedMatrix build_rhat(int n, int base);
/// R-hat inverse from the Hecke relation: R^{-1} = R - lambda.
IndexedMatrix rhat_inverse(const IndexedMatrix& R);
/// Phi^{ij}_{kl} = R^{ji}_{lk} q^{2(i-l)}.
IndexedMatrix build_phi(const IndexedMatrix& R);

/// Diagonal D^i_j = q^{-N+2i} for SU_q(N+1), i = 0..N; returned as a vector of diagonal entries.
std::vector<QRat> build_dmatrix(int n);
/// Diagonal D^a_b = q^{2a}, a = 1..N.
std::vector<QRat> build_cal_d(int N);

/// Braid relation, Hecke condition, invertibility and the Phi contraction
/// identities (trace identities only for a 0-based R).
Report check_matrix_identities(const IndexedMatrix& R);

}  // namespace cpq
