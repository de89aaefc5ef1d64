#include "cpq/rmatrix.hpp"

#include <json.hpp>

namespace cpq {

QRat IndexedMatrix::at(int k, int l, int i, int j) const {
    auto it = e_.find(Key{k, l, i, j});
    return it == e_.end() ? QRat() : it->second;
}

void IndexedMatrix::set(int k, int l, int i, int j, const QRat& v) {
    if (v.is_zero()) e_.erase(Key{k, l, i, j});
    else e_[Key{k, l, i, j}] = v;
}

IndexedMatrix IndexedMatrix::then(const IndexedMatrix& o) const {
    IndexedMatrix r(n_, base_);
    for (const auto& [ka, va] : e_) {
        // ka = {m, n, i, j}
        for (int k = lo(); k <= hi(); ++k)
            for (int l = lo(); l <= hi(); ++l) {
                QRat vb = o.at(k, l, ka[0], ka[1]);
                if (vb.is_zero()) continue;
                r.set(k, l, ka[2], ka[3], r.at(k, l, ka[2], ka[3]) + va * vb);
            }
    }
    return r;
}

IndexedMatrix IndexedMatrix::plus(const IndexedMatrix& o, const QRat& scale) const {
    IndexedMatrix r = *this;
    for (const auto& [k, v] : o.e_) r.set(k[0], k[1], k[2], k[3], r.at(k[0], k[1], k[2], k[3]) + scale * v);
    return r;
}

IndexedMatrix IndexedMatrix::identity(int n, int base) {
    IndexedMatrix r(n, base);
    for (int i = base; i < base + n; ++i)
        for (int j = base; j < base + n; ++j) r.set(i, j, i, j, 1);
    return r;
}

IndexedMatrix IndexedMatrix::at_q_one() const {
    IndexedMatrix r(n_, base_);
    for (const auto& [k, v] : e_) r.set(k[0], k[1], k[2], k[3], QRat(v.at_one()));
    return r;
}

std::string IndexedMatrix::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["base"] = base_;
    auto& arr = j["entries"] = nlohmann::json::array();
    for (const auto& [k, v] : e_)
        arr.push_back({{"upper", {k[0], k[1]}}, {"lower", {k[2], k[3]}}, {"value", v.str()}});
    return j.dump(2);
}

IndexedMatrix build_rhat(int n, int base) {
    IndexedMatrix R(n, base);
    const QRat q = QRat::q();
    const QRat lam = lambda_const();
    for (int i = base; i < base + n; ++i)
        for (int j = base; j < base + n; ++j) {
            if (i == j) {
                R.set(i, j, i, j, q);
            } else {
                R.set(j, i, i, j, 1);
                if (i < j) R.set(i, j, i, j, lam);
            }
        }
    return R;
}

IndexedMatrix rhat_inverse(const IndexedMatrix& R) {
    return R.plus(IndexedMatrix::identity(R.n(), R.base()), -lambda_const());
}

IndexedMatrix build_phi(const IndexedMatrix& R) {
    IndexedMatrix P(R.n(), R.base());
    for (const auto& [key, v] : R.entries()) {
        // R^{ji}_{lk} -> Phi^{ij}_{kl}
        const int j = key[0], i = key[1], l = key[2], k = key[3];
        P.set(i, j, k, l, v * QRat::q_pow(2 * (i - l)));
    }
    return P;
}

std::vector<QRat> build_dmatrix(int n) {
    std::vector<QRat> d;
    const int N = n - 1;
    for (int i = 0; i <= N; ++i) d.push_back(QRat::q_pow(-N + 2 * i));
    return d;
}

std::vector<QRat> build_cal_d(int N) {
    std::vector<QRat> d;
    for (int a = 1; a <= N; ++a) d.push_back(QRat::q_pow(2 * a));
    return d;
}

namespace {

using Triple = std::array<int, 3>;
using Op3 = std::map<Triple, std::map<Triple, QRat>>;

Op3 lift12(const IndexedMatrix& R) {
    Op3 op;
    for (const auto& [k, v] : R.entries())
        for (int x = R.lo(); x <= R.hi(); ++x) op[{k[2], k[3], x}][{k[0], k[1], x}] = v;
    return op;
}

Op3 lift23(const IndexedMatrix& R) {
    Op3 op;
    for (const auto& [k, v] : R.entries())
        for (int x = R.lo(); x <= R.hi(); ++x) op[{x, k[2], k[3]}][{x, k[0], k[1]}] = v;
    return op;
}

Op3 compose(const Op3& a, const Op3& b) {
    Op3 r;
    for (const auto& [row, cols] : a)
        for (const auto& [mid, va] : cols) {
            auto it = b.find(mid);
            if (it == b.end()) continue;
            for (const auto& [col, vb] : it->second) {
                auto& slot = r[row][col];
                slot += va * vb;
            }
        }
    for (auto& [row, cols] : r)
        for (auto it = cols.begin(); it != cols.end();)
            it = it->second.is_zero() ? cols.erase(it) : std::next(it);
    return r;
}

std::string first_difference(const Op3& a, const Op3& b) {
    auto get = [](const Op3& m, const Triple& r, const Triple& c) {
        auto i = m.find(r);
        if (i == m.end()) return QRat();
        auto j = i->second.find(c);
        return j == i->second.end() ? QRat() : j->second;
    };
    for (const auto* m : {&a, &b})
        for (const auto& [row, cols] : *m)
            for (const auto& [col, v] : cols)
                if (!(get(a, row, col) == get(b, row, col)))
                    return "entry (" + std::to_string(row[0]) + std::to_string(row[1]) + std::to_string(row[2]) +
                           ")->(" + std::to_string(col[0]) + std::to_string(col[1]) + std::to_string(col[2]) +
                           "): " + get(a, row, col).str() + " vs " + get(b, row, col).str();
    return {};
}

std::string first_difference(const IndexedMatrix& a, const IndexedMatrix& b) {
    for (const auto* m : {&a, &b})
        for (const auto& [k, v] : m->entries())
            if (!(a.at(k[0], k[1], k[2], k[3]) == b.at(k[0], k[1], k[2], k[3])))
                return "entry ^{" + std::to_string(k[0]) + std::to_string(k[1]) + "}_{" + std::to_string(k[2]) +
                       std::to_string(k[3]) + "}: " + a.at(k[0], k[1], k[2], k[3]).str() + " vs " +
                       b.at(k[0], k[1], k[2], k[3]).str();
    return {};
}

std::optional<std::string> as_witness(std::string s) {
    if (s.empty()) return std::nullopt;
    return s;
}

}  // namespace

Report check_matrix_identities(const IndexedMatrix& R) {
    Report rep("rmatrix n=" + std::to_string(R.n()));
    const std::string tag = "n=" + std::to_string(R.n());
    const int lo = R.lo(), hi = R.hi();

    rep.run("rmatrix.braid." + tag, "R12 R23 R12 = R23 R12 R23", [&] {
        Op3 a = lift12(R), b = lift23(R);
        return as_witness(first_difference(compose(compose(a, b), a), compose(compose(b, a), b)));
    });

    rep.run("rmatrix.hecke." + tag, "(R - q)(R + 1/q) = 0", [&] {
        IndexedMatrix sq = R.then(R);
        IndexedMatrix lhs = sq.plus(R, -lambda_const()).plus(IndexedMatrix::identity(R.n(), R.base()), -1);
        return as_witness(first_difference(lhs, IndexedMatrix(R.n(), R.base())));
    });

    const IndexedMatrix Rinv = rhat_inverse(R);
    rep.run("rmatrix.inverse." + tag, "R R^-1 = R^-1 R = 1", [&] {
        const auto id = IndexedMatrix::identity(R.n(), R.base());
        auto w = first_difference(R.then(Rinv), id);
        if (w.empty()) w = first_difference(Rinv.then(R), id);
        return as_witness(w);
    });

    rep.run("rmatrix.classical-limit." + tag, "R at q=1 is the flip", [&] {
        IndexedMatrix flip(R.n(), R.base());
        for (int i = lo; i <= hi; ++i)
            for (int j = lo; j <= hi; ++j) flip.set(j, i, i, j, 1);
        return as_witness(first_difference(R.at_q_one(), flip));
    });

    const IndexedMatrix Phi = build_phi(R);
    rep.run("rmatrix.phi-contraction." + tag, "Phi^{ri}_{sj} (R^-1)^{jk}_{il} = (R^-1)^{ri}_{sj} Phi^{jk}_{il} = d^r_l d^k_s",
            [&]() -> std::optional<std::string> {
                for (int r = lo; r <= hi; ++r)
                    for (int s = lo; s <= hi; ++s)
                        for (int k = lo; k <= hi; ++k)
                            for (int l = lo; l <= hi; ++l) {
                                QRat a, b;
                                for (int i = lo; i <= hi; ++i)
                                    for (int j = lo; j <= hi; ++j) {
                                        a += Phi.at(r, i, s, j) * Rinv.at(j, k, i, l);
                                        b += Rinv.at(r, i, s, j) * Phi.at(j, k, i, l);
                                    }
                                QRat want = (r == l && k == s) ? QRat(1) : QRat(0);
                                if (!(a == want) || !(b == want))
                                    return "r,s,k,l=" + std::to_string(r) + std::to_string(s) + std::to_string(k) +
                                           std::to_string(l) + ": " + a.str() + ", " + b.str();
                            }
                return std::nullopt;
            });

    if (R.base() == 0) {
        const int N = R.n() - 1;
        rep.run("rmatrix.phi-trace." + tag, "sum_k Phi^{ik}_{jk} = d^i_j q^{2i+1}; sum_k Phi^{ki}_{kj} = d^i_j q^{2(N-i)+1}",
                [&]() -> std::optional<std::string> {
                    for (int i = lo; i <= hi; ++i)
                        for (int j = lo; j <= hi; ++j) {
                            QRat a, b;
                            for (int k = lo; k <= hi; ++k) {
                                a += Phi.at(i, k, j, k);
                                b += Phi.at(k, i, k, j);
                            }
                            QRat wa = i == j ? QRat::q_pow(2 * i + 1) : QRat(0);
                            QRat wb = i == j ? QRat::q_pow(2 * (N - i) + 1) : QRat(0);
                            if (!(a == wa) || !(b == wb))
                                return "i,j=" + std::to_string(i) + std::to_string(j) + ": " + a.str() + ", " + b.str();
                        }
                    return std::nullopt;
                });
    }
    return rep;
}

}  // namespace cpq
