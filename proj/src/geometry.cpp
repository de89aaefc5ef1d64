#include "cpq/geometry.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <random>

#include "cpq/calculus.hpp"
#include "cpq/cqspace.hpp"
#include "cpq/errors.hpp"

namespace cpq {

using namespace gen;

namespace {

std::string tag(const char* name, int a, int b) { return std::string(name) + "." + std::to_string(a) + std::to_string(b); }
std::string copies(int A, int B) { return "(" + std::to_string(A) + "," + std::to_string(B) + ")"; }

NCPoly w2(Gen a, Gen b, const QRat& c = 1) { return NCPoly::word({a, b}, c); }

Gen with_copy(Gen g, int A) {
    g.copy = static_cast<std::uint8_t>(A);
    return g;
}

Gen letter_star(Gen g) {
    switch (g.kind) {
        case Kind::Z: return with_copy(zb(g.i), g.copy);
        case Kind::ZBar: return with_copy(z(g.i), g.copy);
        case Kind::X: return with_copy(xb(g.i), g.copy);
        case Kind::XBar: return with_copy(x(g.i), g.copy);
        default: throw UnsupportedGenerator("no free involution on " + to_string(g));
    }
}

NCPoly free_star(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        Word r;
        for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(letter_star(*it));
        out.add_term(r, c);
    }
    return out;
}

NCPoly relabel(const NCPoly& p, int A) {
    return p.substitute([&](Gen g) { return NCPoly(with_copy(g, A)); });
}

std::vector<NCPoly> bare(const std::vector<NamedRelation>& rs) {
    std::vector<NCPoly> out;
    for (const auto& r : rs) out.push_back(r.relation);
    return out;
}

std::optional<std::string> all_vanish(const std::vector<NamedRelation>& rels, const RewriteSystem& s) {
    for (const auto& r : rels) {
        NCPoly rest = s.normal_form(r.relation);
        if (!rest.is_zero()) return r.name + " leaves " + rest.str();
    }
    return std::nullopt;
}

std::string nm(int N, int m) { return ".N" + std::to_string(N) + ".m" + std::to_string(m); }

}  // namespace

std::vector<NamedRelation> braided_relations(int N, int A, int B, const IndexedMatrix& R) {
    const QRat q = QRat::q(), qi = q.inv(), lam = lambda_const();
    const IndexedMatrix Ri = rhat_inverse(R);
    const std::string ab = copies(A, B);
    std::vector<NamedRelation> out;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            NCPoly zz = w2(z(a, A), z(b, B)), zbz = w2(zb(a, B), z(b, A));
            if (a == b) zbz += qi * lam;
            for (int c = 1; c <= N; ++c)
                for (int e = 1; e <= N; ++e) {
                    const QRat r = R.at(c, e, a, b);
                    if (!r.is_zero()) {
                        zz -= w2(z(c, B), z(e, A), q * r);
                        zz += w2(z(c, A), z(e, A), lam * r);
                    }
                    zbz -= w2(z(c, A), zb(e, B), qi * Ri.at(a, c, b, e));
                }
            out.push_back({tag("zz", a, b) + ab, zz});
            out.push_back({tag("zbz", a, b) + ab, zbz});
            out.push_back({tag("*zz", a, b) + ab, free_star(zz)});
            if (A != B) out.push_back({tag("*zbz", a, b) + ab, free_star(zbz)});
        }
    return out;
}

BraidedAlgebra build_braided(int N, int m) {
    if (N < 1 || m < 1) throw PreconditionViolated("build_braided needs N, m >= 1");
    BraidedAlgebra B;
    B.N = N;
    B.m = m;
    B.R = build_rhat(N, 1);
    B.rewrite = RewriteSystem("braided.N" + std::to_string(N) + ".m" + std::to_string(m));
    for (int A = 1; A <= m; ++A)
        for (int a = 1; a <= N; ++a) B.rewrite.add_generator(z(a, A), 1000 + (A - 1) * N + (N - a));
    for (int A = 1; A <= m; ++A)
        for (int a = 1; a <= N; ++a) B.rewrite.add_generator(zb(a, A), 2000 + (A - 1) * N + a);
    for (int A = 1; A <= m; ++A)
        for (int a = 1; a <= N; ++a) {
            B.rewrite.set_star(z(a, A), NCPoly(zb(a, A)));
            B.rewrite.set_star(zb(a, A), NCPoly(z(a, A)));
        }
    for (int A = 1; A <= m; ++A)
        for (int C = A; C <= m; ++C) {
            auto rs = braided_relations(N, A, C, B.R);
            B.relations.insert(B.relations.end(), rs.begin(), rs.end());
        }
    B.rewrite.orient_relations(bare(B.relations));
    return B;
}

NCPoly pt_diff(int A, int B, int a) { return NCPoly(z(a, A)) - NCPoly(z(a, B)); }

Report check_braided(const BraidedAlgebra& B) {
    Report rep("braiding");
    const int N = B.N;
    const std::string t = nm(N, B.m);
    rep.run("braiding.self" + t, "A = B: z^A_a z^A_b = q^-1 R^{ce}_{ab} z^A_c z^A_e, zb^A z^A as in one copy",
            [&]() -> std::optional<std::string> {
                const auto one = projective_function_relations(N, B.R);
                const auto self = braided_relations(N, 1, 1, B.R);
                // the one-copy relation set must span the A = B instances and conversely
                RewriteSystem s1("one"), s2("self");
                for (auto* s : {&s1, &s2}) {
                    for (int a = 1; a <= N; ++a) s->add_generator(z(a, 1), 1000 + N - a);
                    for (int a = 1; a <= N; ++a) s->add_generator(zb(a, 1), 2000 + a);
                }
                std::vector<NCPoly> rel1;
                for (const auto& r : one) rel1.push_back(relabel(r.relation, 1));
                s1.orient_relations(rel1);
                s2.orient_relations(bare(self));
                for (const auto& r : rel1)
                    if (NCPoly d = s2.normal_form(r); !d.is_zero()) return "one-copy relation not implied: " + d.str();
                for (const auto& r : self)
                    if (NCPoly d = s1.normal_form(r.relation); !d.is_zero()) return r.name + " not implied: " + d.str();
                return std::nullopt;
            });
    rep.run("braiding.sq2" + t, "z^A_a z^B_a = q^2 z^B_a z^A_a - q lambda z^A_a z^A_a, A <= B", [&]() -> std::optional<std::string> {
        const QRat q = QRat::q();
        for (int A = 1; A <= B.m; ++A)
            for (int C = A; C <= B.m; ++C)
                for (int a = 1; a <= N; ++a) {
                    const NCPoly e = w2(z(a, A), z(a, C)) - w2(z(a, C), z(a, A), q * q) +
                                     w2(z(a, A), z(a, A), q * lambda_const());
                    if (NCPoly d = B.rewrite.normal_form(e); !d.is_zero()) return copies(A, C) + " a=" + std::to_string(a) + ": " + d.str();
                }
        return std::nullopt;
    });
    rep.run("braiding.relations" + t, "every braided relation reduces to 0", [&] { return all_vanish(B.relations, B.rewrite); });
    rep.run("braiding.classical" + t, "q = 1: copies commute", [&]() -> std::optional<std::string> {
        for (const auto& r : B.relations) {
            std::map<Word, BigRat> sorted;
            for (const auto& [w, c] : r.relation.terms()) {
                Word u = w;
                std::sort(u.begin(), u.end());
                sorted[u] += c.at_one();
            }
            for (const auto& [u, c] : sorted)
                if (c != 0) return r.name + " at q = 1 leaves " + to_string(u);
        }
        return std::nullopt;
    });
    rep.merge(check_system_hygiene(B.rewrite, true, false));
    return rep;
}

// ---- two ambient copies

namespace {

struct TwoCopies {
    RewriteSystem sys;
    std::vector<NamedRelation> cross;
};

// copy 2 (primed) x first, then copy 1 x, copy 1 xb, copy 2 xb.
TwoCopies two_copies(int N, const QRat& tau, const QRat& nu) {
    const IndexedMatrix R = build_rhat(N + 1, 0), Ri = rhat_inverse(R);
    TwoCopies T;
    T.sys = RewriteSystem("two-copies.N" + std::to_string(N));
    for (int i = 0; i <= N; ++i) T.sys.add_generator(with_copy(x(i), 2), 500 + N - i);
    for (int i = 0; i <= N; ++i) T.sys.add_generator(with_copy(x(i), 1), 1000 + N - i);
    for (int i = 0; i <= N; ++i) T.sys.add_generator(with_copy(xb(i), 1), 2000 + i);
    for (int i = 0; i <= N; ++i) T.sys.add_generator(with_copy(xb(i), 2), 2500 + i);
    for (int A = 1; A <= 2; ++A)
        for (int i = 0; i <= N; ++i) {
            T.sys.set_star(with_copy(x(i), A), NCPoly(with_copy(xb(i), A)));
            T.sys.set_star(with_copy(xb(i), A), NCPoly(with_copy(x(i), A)));
        }
    std::vector<NCPoly> rels;
    for (int A = 1; A <= 2; ++A)
        for (const auto& r : ambient_function_relations(N, R)) rels.push_back(relabel(r.relation, A));
    auto X = [](int i, int A) { return with_copy(x(i), A); };
    auto Xb = [](int i, int A) { return with_copy(xb(i), A); };
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
            NCPoly xx = w2(X(i, 1), X(j, 2)), xbx = w2(Xb(i, 1), X(j, 2));
            for (int k = 0; k <= N; ++k)
                for (int l = 0; l <= N; ++l) {
                    xx -= w2(X(k, 2), X(l, 1), tau * R.at(k, l, i, j));
                    xbx -= w2(X(k, 2), Xb(l, 1), nu * Ri.at(i, k, j, l));
                }
            for (auto& [name, rel] : std::vector<NamedRelation>{{tag("xx'", i, j), xx}, {tag("xbx'", i, j), xbx}}) {
                T.cross.push_back({name, rel});
                T.cross.push_back({"*" + name, free_star(rel)});
            }
        }
    for (const auto& r : T.cross) rels.push_back(r.relation);
    T.sys.orient_relations(rels);
    return T;
}

void localize_all(RewriteSystem& s, Gen g, Gen ginv, std::int64_t rank) {
    std::vector<CommutationFact> facts;
    for (Gen h : s.alphabet())
        if (!(h == g)) facts.push_back({h, infer_commutation(s, NCPoly(g), h), true});
    localize(s, g, ginv, rank, facts);
}

// z z' and zb' z for one (tau, nu): the relations after z_a = x_0^-1 x_a,
// zb^a = xb^a xb^0^-1 in both copies.
std::optional<std::string> induced_braiding(int N, const QRat& tau, const QRat& nu) {
    TwoCopies T = two_copies(N, tau, nu);
    RewriteSystem& s = T.sys;
    const Gen x0p = with_copy(x(0), 2), x0 = with_copy(x(0), 1);
    const Gen xb0 = with_copy(xb(0), 1), xb0p = with_copy(xb(0), 2);
    const Gen i0p = with_copy(x0inv(), 2), i0 = with_copy(x0inv(), 1);
    const Gen ib0 = with_copy(xb0inv(), 1), ib0p = with_copy(xb0inv(), 2);
    localize_all(s, x0p, i0p, 900);
    localize_all(s, x0, i0, 1500);
    localize_all(s, xb0, ib0, 1999);
    localize_all(s, xb0p, ib0p, 2499);
    auto Z = [&](int a, int A) { return NCPoly(A == 1 ? i0 : i0p) * NCPoly(with_copy(x(a), A)); };
    auto Zb = [&](int a, int A) { return NCPoly(with_copy(xb(a), A)) * NCPoly(A == 1 ? ib0 : ib0p); };
    const IndexedMatrix R = build_rhat(N, 1), Ri = rhat_inverse(R);
    const QRat q = QRat::q(), qi = q.inv(), lam = lambda_const();
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            NCPoly zz = Z(a, 1) * Z(b, 2), zbz = Zb(a, 2) * Z(b, 1);
            if (a == b) zbz += qi * lam;
            for (int c = 1; c <= N; ++c)
                for (int e = 1; e <= N; ++e) {
                    zz -= q * R.at(c, e, a, b) * ((Z(c, 2) - qi * lam * Z(c, 1)) * Z(e, 1));
                    zbz -= qi * Ri.at(a, c, b, e) * (Z(c, 1) * Zb(e, 2));
                }
            if (NCPoly d = s.normal_form(zz); !d.is_zero()) return tag("zz'", a, b) + " leaves " + d.str();
            if (NCPoly d = s.normal_form(zbz); !d.is_zero()) return tag("zb'z", a, b) + " leaves " + d.str();
        }
    return std::nullopt;
}

}  // namespace

Report check_homogeneous_braiding(int N, const QRat& tau, const QRat& nu) {
    Report rep("homogeneous-braiding");
    const std::string t = ".N" + std::to_string(N) + ".tau=" + tau.str() + ".nu=" + nu.str();
    const bool predicted = (tau * nu).is_one();
    rep.run("braiding.L-central" + t, "L f' = f' L iff tau = nu^-1", [&]() -> std::optional<std::string> {
        TwoCopies T = two_copies(N, tau, nu);
        NCPoly Lv;
        for (int i = 0; i <= N; ++i) Lv += w2(with_copy(x(i), 1), with_copy(xb(i), 1));
        std::string witness;
        for (int j = 0; j <= N && witness.empty(); ++j)
            for (Gen f : {with_copy(x(j), 2), with_copy(xb(j), 2)}) {
                NCPoly d = T.sys.normal_form(Lv * NCPoly(f) - NCPoly(f) * Lv);
                if (!d.is_zero()) {
                    witness = "L " + to_string(f) + " - " + to_string(f) + " L = " + d.str();
                    break;
                }
            }
        const bool central = witness.empty();
        if (central == predicted) return std::nullopt;
        return central ? std::string("L central although tau nu != 1") : witness;
    });
    rep.run("braiding.cross-relations" + t, "x x' and xb x' relations reduce to 0", [&]() -> std::optional<std::string> {
        TwoCopies T = two_copies(N, tau, nu);
        return all_vanish(T.cross, T.sys);
    });
    const bool reference = tau == QRat(1) && nu == QRat(1);
    const QRat tau2 = reference ? QRat::q() : QRat(1), nu2 = reference ? QRat::q().inv() : QRat(1);
    rep.run("braiding.induced" + t, "z_a z'_b = q R^{ce}_{ab}(z'_c - q^-1 lambda z_c) z_e, zb'^a z_b = q^-1 (R^-1)^{ac}_{be} z_c zb'^e - q^-1 lambda delta^a_b",
            [&] { return induced_braiding(N, tau, nu); });
    rep.run("braiding.induced-other" + t, "the same z relations for tau = " + tau2.str() + ", nu = " + nu2.str(),
            [&] { return induced_braiding(N, tau2, nu2); });
    return rep;
}

// ---- collinearity

namespace {

NCPoly alpha_cd(int A, int B, int a, int b, int C, int D) {
    return pt_diff(A, B, a) * pt_diff(C, D, b) - QRat::q_pow(2) * (pt_diff(C, D, a) * pt_diff(A, B, b));
}

}  // namespace

NCPoly collinearity_alpha(int A, int B, int a, int b, int m) { return alpha_cd(A, B, a, b, m - 1, m); }

CollinearityIdeal build_collinearity(const BraidedAlgebra& B) {
    if (B.m < 4) throw PreconditionViolated("the collinearity ideal needs m >= 4 copies");
    CollinearityIdeal I;
    I.N = B.N;
    I.m = B.m;
    const int C = B.m - 1;
    for (int A = 1; A < C; ++A)
        for (int Bp = A + 1; Bp <= C; ++Bp)
            for (int a = 1; a <= B.N; ++a)
                for (int b = 1; b <= B.N; ++b)
                    I.generators.push_back({"alpha(" + std::to_string(A) + std::to_string(Bp) + ")." + std::to_string(a) +
                                                std::to_string(b),
                                            collinearity_alpha(A, Bp, a, b, B.m)});
    I.braided = B.rewrite;
    I.oriented = B.rewrite;
    std::vector<NCPoly> gens;
    for (const auto& g : I.generators)
        if (NCPoly r = B.rewrite.normal_form(g.relation); !r.is_zero()) gens.push_back(r);
    I.oriented.orient_relations(gens);
    return I;
}

namespace {

// Row echelon form over Q(q), pivots at leading words.
class Echelon {
public:
    explicit Echelon(const RewriteSystem& s) : s_(s) {}

    NCPoly reduce(NCPoly v) const {
        for (bool again = true; again && !v.is_zero();) {
            again = false;
            for (const auto& [w, c] : v.terms()) {
                auto it = rows_.find(w);
                if (it == rows_.end()) continue;
                v -= c * it->second;
                again = true;
                break;
            }
        }
        return v;
    }

    void insert(const NCPoly& p) {
        NCPoly v = reduce(p);
        if (v.is_zero()) return;
        const Word lead = s_.leading_word(v);
        v = v.coeff(lead).inv() * v;
        rows_.emplace(lead, v);
    }

private:
    const RewriteSystem& s_;
    std::map<Word, NCPoly> rows_;
};

void normal_words(const std::vector<Gen>& letters, const RewriteSystem& s, int max_len, std::vector<Word>& out) {
    std::vector<Word> layer{Word{}};
    out.push_back(Word{});
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (Gen g : letters) {
                Word u = w;
                u.push_back(g);
                if (s.is_normal(u)) next.push_back(u);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
}

}  // namespace

NCPoly reduce_mod_collinearity(const NCPoly& p, const CollinearityIdeal& I) {
    const NCPoly v = I.braided.normal_form(p);
    if (v.is_zero()) return v;
    int d = 0;
    std::vector<Gen> letters;
    for (int A = 1; A <= I.m; ++A)
        for (int a = 1; a <= I.N; ++a) letters.push_back(z(a, A));
    for (const auto& [w, c] : v.terms()) {
        d = std::max(d, static_cast<int>(w.size()));
        for (Gen g : w)
            if (std::find(letters.begin(), letters.end(), g) == letters.end()) letters.push_back(g);
    }
    if (d < 2) return v;
    std::vector<Word> words;
    normal_words(letters, I.braided, d - 2, words);
    Echelon E(I.braided);
    for (const auto& u : words)
        for (const auto& w : words) {
            if (static_cast<int>(u.size() + w.size()) > d - 2) continue;
            for (const auto& g : I.generators)
                E.insert(I.braided.normal_form(NCPoly(u, QRat(1)) * g.relation * NCPoly(w, QRat(1))));
        }
    return E.reduce(v);
}

Report check_collinearity(const BraidedAlgebra& B) {
    Report rep("collinearity");
    const std::string t = nm(B.N, B.m);
    const CollinearityIdeal I = build_collinearity(B);
    const int m = B.m, N = B.N;
    rep.run("collinearity.generators" + t, "alpha(AB)_{ab} = [AB]_a [CD]_b - q^2 [CD]_a [AB]_b in I",
            [&]() -> std::optional<std::string> {
                for (const auto& g : I.generators)
                    if (NCPoly d = reduce_mod_collinearity(g.relation, I); !d.is_zero()) return g.name + ": " + d.str();
                return std::nullopt;
            });
    rep.run("collinearity.left-multiple" + t, "z^E_c alpha(AB)_{ab} in I", [&]() -> std::optional<std::string> {
        for (int E = 1; E <= m; ++E)
            for (int c = 1; c <= N; ++c)
                for (const auto& g : I.generators)
                    if (NCPoly d = reduce_mod_collinearity(NCPoly(z(c, E)) * g.relation, I); !d.is_zero())
                        return "z[" + std::to_string(c) + ",A=" + std::to_string(E) + "] " + g.name + ": " + d.str();
        return std::nullopt;
    });
    rep.run("collinearity.critical-pairs" + t, "overlaps of the oriented rules agree modulo I", [&]() -> std::optional<std::string> {
        for (const auto& f : local_confluence_failures(I.oriented, 1000))
            if (NCPoly d = reduce_mod_collinearity(f.left_path - f.right_path, I); !d.is_zero())
                return "overlap " + to_string(f.overlap) + ": " + d.str();
        return std::nullopt;
    });
    return rep;
}

namespace {

// sum_{h e f g} M1^{he}_{ab} M2^{fg}_{ec} alpha(AC)_{hf} f_g
NCPoly contract(const IndexedMatrix& M, int a, int b, int c, int N, const std::function<NCPoly(int, int)>& alpha,
                const std::function<NCPoly(int)>& f) {
    NCPoly out;
    for (int h = 1; h <= N; ++h)
        for (int e = 1; e <= N; ++e) {
            const QRat r1 = M.at(h, e, a, b);
            if (r1.is_zero()) continue;
            for (int fi = 1; fi <= N; ++fi)
                for (int g = 1; g <= N; ++g) {
                    const QRat r2 = M.at(fi, g, e, c);
                    if (!r2.is_zero()) out += (r1 * r2) * (alpha(h, fi) * f(g));
                }
        }
    return out;
}

}  // namespace

Report check_ideal_stability(const BraidedAlgebra& Br) {
    Report rep("ideal-stability");
    const int N = Br.N, m = Br.m;
    if (m < 4) throw PreconditionViolated("ideal stability needs m >= 4");
    const std::string t = nm(N, m);
    const int C = m - 1, D = m;
    const IndexedMatrix& R = Br.R;
    const IndexedMatrix Ri = rhat_inverse(R);
    const QRat q2 = QRat::q_pow(2), qi = QRat::q().inv(), lam = lambda_const();
    auto where = [](int A, int B, int a, int b, int c) {
        return "A=" + std::to_string(A) + " B=" + std::to_string(B) + " abc=" + std::to_string(a) + std::to_string(b) +
               std::to_string(c);
    };
    auto run_case = [&](const std::string& id, const std::string& anchor, const BraidedAlgebra& alg, auto&& pairs,
                        auto&& residue) {
        rep.run(id + t, anchor, [&]() -> std::optional<std::string> {
            if (pairs.empty()) return "no index combination";
            for (auto [A, B] : pairs)
                for (int a = 1; a <= N; ++a)
                    for (int b = 1; b <= N; ++b)
                        for (int c = 1; c <= N; ++c)
                            if (NCPoly d = alg.rewrite.normal_form(residue(A, B, a, b, c)); !d.is_zero())
                                return where(A, B, a, b, c) + ": " + d.str();
            return std::nullopt;
        });
    };
    auto alphaAC = [&](int A) { return [=](int h, int f) { return alpha_cd(A, C, h, f, C, D); }; };
    std::vector<std::pair<int, int>> below, between, dd, beyond;
    for (int A = 1; A < C; ++A) {
        for (int B = 1; B <= A; ++B) below.push_back({A, B});
        for (int B = A; B <= C; ++B) between.push_back({A, B});
        dd.push_back({A, D});
        beyond.push_back({A, m + 1});
    }
    run_case("stability.below", "z^B_a alpha(AC)_{bc} = q^2 R^{he}_{ab} R^{fg}_{ec} alpha(AC)_{hf} z^B_g, B <= A < C", Br,
             below, [&](int A, int B, int a, int b, int c) {
                 return NCPoly(z(a, B)) * alpha_cd(A, C, b, c, C, D) -
                        q2 * contract(R, a, b, c, N, alphaAC(A), [&](int g) { return NCPoly(z(g, B)); });
             });
    run_case("stability.between",
             "z^B_a alpha(AC)_{bc} = q^2 R^{he}_{ab} R^{fg}_{ec} (alpha(AC)_{hf} z^B_g + q^-1 lambda alpha(AB)_{hf} [AB]_g), A <= B <= C",
             Br, between, [&](int A, int B, int a, int b, int c) {
                 NCPoly rhs = contract(R, a, b, c, N, alphaAC(A), [&](int g) { return NCPoly(z(g, B)); });
                 if (B != A)
                     rhs += qi * lam *
                            contract(R, a, b, c, N, [&](int h, int f) { return alpha_cd(A, B, h, f, C, D); },
                                     [&](int g) { return pt_diff(A, B, g); });
                 return NCPoly(z(a, B)) * alpha_cd(A, C, b, c, C, D) - q2 * rhs;
             });
    run_case("stability.CD", "[CD]_a alpha(AC)_{bc} = (R^-1)^{he}_{ab} (R^-1)^{fg}_{ec} alpha(AC)_{hf} [CD]_g", Br, dd,
             [&](int A, int, int a, int b, int c) {
                 return pt_diff(C, D, a) * alpha_cd(A, C, b, c, C, D) -
                        contract(Ri, a, b, c, N, alphaAC(A), [&](int g) { return pt_diff(C, D, g); });
             });
    // B > D needs a copy beyond D: one more copy is braided in, C and D stay put
    const BraidedAlgebra wider = build_braided(N, m + 1);
    run_case("stability.BD",
             "[BD]_a alpha(AC)_{bc} = q^-2 (R^-1)^{he}_{ab} (R^-1)^{fg}_{ec} alpha(AC)_{hf} [BD]_g, B > D (copy m+1)", wider,
             beyond, [&](int A, int B, int a, int b, int c) {
                 return pt_diff(B, D, a) * alpha_cd(A, C, b, c, C, D) -
                        QRat::q_pow(-2) * contract(Ri, a, b, c, N, alphaAC(A), [&](int g) { return pt_diff(B, D, g); });
             });
    return rep;
}

// ---- classical invariant

namespace {

BigRat determinant(std::vector<std::vector<BigRat>> M) {
    const std::size_t n = M.size();
    BigRat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(M[p], M[c]);
            det = -det;
        }
        det *= M[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const BigRat f = M[r][c] / M[c][c];
            for (std::size_t k = c; k < n; ++k) M[r][k] -= f * M[c][k];
        }
    }
    return det;
}

}  // namespace

BigRat point_determinant(const std::vector<std::vector<BigRat>>& pts, const std::vector<int>& labels) {
    const std::size_t n = labels.size();
    std::vector<std::vector<BigRat>> M(n, std::vector<BigRat>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const auto& z = pts.at(labels[k] - 1);
        if (z.size() + 1 != n) throw PreconditionViolated("point dimension does not match the label count");
        M[0][k] = 1;
        for (std::size_t a = 0; a + 1 < n; ++a) M[a + 1][k] = z[a];
    }
    return determinant(M);
}

BigRat classical_invariant_I(const std::vector<std::vector<BigRat>>& pts) {
    if (pts.size() < 4 || pts.size() % 2 != 0) throw PreconditionViolated("I needs 2(n+1) points");
    const int n = static_cast<int>(pts.size()) / 2 - 1;
    std::vector<int> num1, num2, den1, den2;
    for (int k = 1; k <= n; ++k) num1.push_back(k), den1.push_back(k);
    num1.push_back(n + 1);
    den1.push_back(n + 2);
    for (int k = n + 2; k <= 2 * n + 2; ++k) num2.push_back(k);
    den2.push_back(n + 1);
    for (int k = n + 3; k <= 2 * n + 2; ++k) den2.push_back(k);
    const BigRat d = point_determinant(pts, den1) * point_determinant(pts, den2);
    if (d == 0) throw DegenerateConfiguration("a denominator determinant of I vanishes");
    return point_determinant(pts, num1) * point_determinant(pts, num2) / d;
}

BigRat cross_ratio(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& d) {
    const BigRat den = (a - d) * (b - c);
    if (den == 0) throw DegenerateConfiguration("cross ratio with a vanishing denominator");
    return (a - c) * (b - d) / den;
}

Report check_classical_invariant(int n, int samples, std::uint64_t seed) {
    Report rep("classical-invariant");
    const std::string t = ".n" + std::to_string(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    auto rnd = [&] {
        BigRat r(num(rng), den(rng));
        r.canonicalize();
        return r;
    };
    auto random_points = [&] {
        std::vector<std::vector<BigRat>> pts(2 * n + 2, std::vector<BigRat>(n));
        for (auto& p : pts)
            for (auto& c : p) c = rnd();
        return pts;
    };
    // parameter t on z^{n+1} + t (z^{n+2} - z^{n+1}) where the line meets the
    // hyperplane through the given n points
    auto meet = [&](const std::vector<std::vector<BigRat>>& pts, std::vector<int> labels) -> BigRat {
        auto at = [&](const BigRat& s) -> BigRat {
            auto ext = pts;
            std::vector<BigRat> p(n);
            for (int a = 0; a < n; ++a) p[a] = pts[n][a] + s * (pts[n + 1][a] - pts[n][a]);
            ext.push_back(p);
            auto l = labels;
            l.push_back(static_cast<int>(ext.size()));
            return point_determinant(ext, l);
        };
        const BigRat f0 = at(0), f1 = at(1);
        if (f0 == f1) throw DegenerateConfiguration("line parallel to the hyperplane");
        return f0 / (f0 - f1);
    };
    rep.run("invariant.cross-ratio" + t, "I = anharmonic ratio of z, z', z^{n+1}, z^{n+2}", [&]() -> std::optional<std::string> {
        int done = 0;
        for (int tries = 0; done < samples && tries < 20 * samples; ++tries) {
            const auto pts = random_points();
            try {
                std::vector<int> first, last;
                for (int k = 1; k <= n; ++k) first.push_back(k);
                for (int k = n + 3; k <= 2 * n + 2; ++k) last.push_back(k);
                const BigRat I = classical_invariant_I(pts);
                const BigRat cr = cross_ratio(meet(pts, first), meet(pts, last), BigRat(0), BigRat(1));
                if (I != cr) return "I = " + I.get_str() + ", cross ratio = " + cr.get_str();
                ++done;
            } catch (const DegenerateConfiguration&) {
            }
        }
        if (done < samples) return "only " + std::to_string(done) + " nondegenerate samples";
        return std::nullopt;
    });
    rep.run("invariant.projective" + t, "I unchanged under x -> M x", [&]() -> std::optional<std::string> {
        int done = 0;
        for (int tries = 0; done < samples && tries < 20 * samples; ++tries) {
            const auto pts = random_points();
            std::vector<std::vector<BigRat>> M(n + 1, std::vector<BigRat>(n + 1));
            for (auto& r : M)
                for (auto& c : r) c = BigRat(num(rng));
            if (determinant(M) == 0) continue;
            std::vector<std::vector<BigRat>> img;
            bool finite = true;
            for (const auto& p : pts) {
                std::vector<BigRat> h(n + 1);
                for (int i = 0; i <= n; ++i) {
                    h[i] = M[i][0];
                    for (int a = 0; a < n; ++a) h[i] += M[i][a + 1] * p[a];
                }
                if (h[0] == 0) {
                    finite = false;
                    break;
                }
                std::vector<BigRat> zz(n);
                for (int a = 0; a < n; ++a) zz[a] = h[a + 1] / h[0];
                img.push_back(zz);
            }
            if (!finite) continue;
            try {
                const BigRat I0 = classical_invariant_I(pts), I1 = classical_invariant_I(img);
                if (I0 != I1) return "I = " + I0.get_str() + " becomes " + I1.get_str();
                ++done;
            } catch (const DegenerateConfiguration&) {
            }
        }
        if (done < samples) return "only " + std::to_string(done) + " nondegenerate samples";
        return std::nullopt;
    });
    return rep;
}

}  // namespace cpq
