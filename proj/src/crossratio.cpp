#include "cpq/crossratio.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "cpq/cpn.hpp"
#include "cpq/cqspace.hpp"
#include "cpq/errors.hpp"
#include "cpq/geometry.hpp"
#include "cpq/qgroup.hpp"

namespace cpq {

using namespace gen;

namespace {

// b = k a
std::optional<QRat> ratio(const NCPoly& a, const NCPoly& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    const auto& [w, c] = *a.terms().begin();
    const QRat k = b.coeff(w) / c;
    if (k.is_zero() || !(b - k * a).is_zero()) return std::nullopt;
    return k;
}

struct Factor {
    NCPoly p;
    int e = 1;
    std::string name;
};

// scalar times a word in polynomials and their formal inverses
struct Frac {
    QRat c = 1;
    std::vector<Factor> f;
};

Frac atom(const NCPoly& p, const std::string& name) { return Frac{1, {{p, 1, name}}}; }

Frac operator*(Frac a, const Frac& b) {
    a.c = a.c * b.c;
    a.f.insert(a.f.end(), b.f.begin(), b.f.end());
    return a;
}

Frac inverse(const Frac& a) {
    Frac r{a.c.inv(), {}};
    for (auto it = a.f.rbegin(); it != a.f.rend(); ++it) r.f.push_back({it->p, -it->e, it->name});
    return r;
}

// p (k p)^-1 = k^-1, p^-1 (k p) = k, constants go to the scalar
Frac simplify(const Frac& a) {
    Frac r{a.c, {}};
    for (const auto& x : a.f) {
        if (x.p.size() == 1 && x.p.terms().begin()->first.empty()) {
            const QRat k = x.p.constant_term();
            r.c = r.c * (x.e > 0 ? k : k.inv());
            continue;
        }
        if (!r.f.empty() && r.f.back().e == -x.e) {
            if (auto k = ratio(r.f.back().p, x.p)) {
                r.c = r.c * (r.f.back().e > 0 ? k->inv() : *k);
                r.f.pop_back();
                continue;
            }
        }
        r.f.push_back(x);
    }
    return r;
}

bool same(const Frac& a, const Frac& b) {
    const Frac x = simplify(a), y = simplify(b);
    if (x.f.size() != y.f.size()) return false;
    QRat c = x.c;
    for (std::size_t i = 0; i < x.f.size(); ++i) {
        if (x.f[i].e != y.f[i].e) return false;
        auto k = ratio(y.f[i].p, x.f[i].p);
        if (!k) return false;
        c = c * (x.f[i].e > 0 ? *k : k->inv());
    }
    return c == y.c;
}

std::string show(const Frac& a) {
    std::string s = a.c.is_one() ? "" : "(" + a.c.str() + ") ";
    for (const auto& x : a.f) s += x.e > 0 ? x.name : x.name + "^-1";
    return s.empty() ? "1" : s;
}

const char* kind_name(CoactionKind k) {
    switch (k) {
        case CoactionKind::Identity: return "identity";
        case CoactionKind::Diagonal: return "diagonal";
        case CoactionKind::GLq2: return "GL_q(2)";
        default: return "SU_q(2)";
    }
}

struct Setting {
    BraidedAlgebra br = build_braided(1, 4);
    CoactionAlgebra C = build_coaction(br.rewrite, 2);
    CoactionAlgebra G = build_coaction(br.rewrite, 2, false);
};

const Setting& setting() {
    static const Setting s;
    return s;
}

}  // namespace

ReplayResult replay_cross_ratio(int A, int B, CoactionKind kind) {
    if ((A != 2 && A != 3) || (B != 2 && B != 3))
        throw PreconditionViolated("cross ratio needs A, B in {2, 3}, got " + std::to_string(A) + ", " + std::to_string(B));
    const auto& S = kind == CoactionKind::GLq2 ? setting().G.sys : setting().C.sys;
    const QRat q = QRat::q(), qi = q.inv();

    // T restricted to the chosen one-parameter family; the diagonal and
    // identity matrices are quotients of SU_q(2), so NF commutes with them
    auto restrict_T = [&](const NCPoly& p) {
        auto sub = [&](Gen g) -> NCPoly {
            if (g.kind != Kind::T || kind == CoactionKind::Full || kind == CoactionKind::GLq2) return NCPoly(g);
            if (g.i != g.j) return NCPoly();
            return kind == CoactionKind::Identity ? NCPoly(1) : NCPoly(g);
        };
        // in the diagonal quotient alpha delta = delta alpha = 1, which the
        // rules state through beta gamma
        auto unit = [&](const NCPoly& p0) {
            if (kind != CoactionKind::Diagonal) return p0;
            NCPoly out;
            for (const auto& [w, c] : p0.terms()) {
                Word r;
                for (Gen g : w) {
                    if (!r.empty() && r.back().kind == Kind::T && g.kind == Kind::T && r.back().i == r.back().j && g.i == g.j &&
                        r.back().i != g.i) {
                        r.pop_back();
                        continue;
                    }
                    r.push_back(g);
                }
                out.add_term(r, c);
            }
            return out;
        };
        NCPoly cur = S.normal_form(p);
        for (int guard = 0; guard < 8; ++guard) {
            NCPoly nxt = S.normal_form(unit(S.normal_form(cur.substitute(sub))));
            if (nxt == cur) return cur;
            cur = nxt;
        }
        throw NonTerminating("specialisation of " + p.str());
    };
    auto Te = [&](int i, int j) { return NCPoly(T(i, j)); };
    auto Z = [](int c) { return NCPoly(z(1, c)); };
    auto U = [&](int c) { return restrict_T(Te(0, 0) + Z(c) * Te(1, 0)); };
    auto X = [&](int c) { return restrict_T(Te(0, 1) + Z(c) * Te(1, 1)); };
    auto V = [&](int c) { return restrict_T(Te(0, 0) + q * (Z(c) * Te(1, 0))); };
    auto Y = [&](int c) { return restrict_T(qi * Te(0, 1) + Z(c) * Te(1, 1)); };
    auto br = [&](int P, int Q) { return Z(P) - Z(Q); };
    auto bn = [](int P, int Q) { return "[" + std::to_string(P) + std::to_string(Q) + "]"; };
    // z^P_c M_1^{1c}, c = 0, 1, z_0 = 1
    auto zM = [&](int P) {
        return restrict_T(Te(1, 0) * Te(0, 1) - q * (Te(1, 1) * Te(0, 0)) + Z(P) * (Te(1, 0) * Te(1, 1) - q * (Te(1, 1) * Te(1, 0))));
    };

    ReplayResult res;
    res.A = A;
    res.B = B;
    res.kind = kind;
    const std::string a = std::to_string(A), b = std::to_string(B);
    res.assumptions = {"[14]", "[" + a + "4]", "[" + b + "1]", "U(1)", "U(4)", "V(" + a + ")", "V(" + b + ")",
                       "1 - tau(" + a + ")", "tau(" + b + ")"};

    auto step = [&](const std::string& claim, const std::string& method, const std::function<std::optional<std::string>()>& check) {
        const int k = static_cast<int>(res.steps.size()) + 1;
        std::optional<std::string> bad;
        try {
            bad = check();
        } catch (const Error& e) {
            bad = e.what();
        }
        if (bad) throw StepFailure(k, claim + ": " + *bad);
        res.steps.push_back({k, claim, method});
    };

    step("x'_0 = x_0 U, x'_1 = x_0 X with U = T^0_0 + z T^1_0, X = T^0_1 + z T^1_1, so z' = U^-1 X on each copy",
         "normal form in the coaction algebra over C_q^2", [&]() -> std::optional<std::string> {
             const AmbientAlgebra amb = build_ambient(1);
             const CoactionAlgebra C1 = build_coaction(amb.forms, 2);
             const auto img = fractional_transform(NCPoly(z(1)), amb, C1);
             if (img.left != 1 || img.right != 0) return "denominators x'_0^" + std::to_string(img.left);
             const NCPoly zz = amb.forms.normal_form(ambient_image(z(1), 1));
             const NCPoly d1 = C1.sys.normal_form(coact(NCPoly(x(0)), 2) - NCPoly(x(0)) * (Te(0, 0) + zz * Te(1, 0)));
             const NCPoly d2 = C1.sys.normal_form(img.numerator - NCPoly(x(0)) * (Te(0, 1) + zz * Te(1, 1)));
             if (!d1.is_zero()) return "x'_0 - x_0 U = " + d1.str();
             if (!d2.is_zero()) return "numerator - x_0 X = " + d2.str();
             return std::nullopt;
         });

    step("X(C) V(C) = U(C) Y(C) with V(C) = T^0_0 + q z^C T^1_0, Y(C) = q^-1 T^0_1 + z^C T^1_1, so z'^C = Y(C) V(C)^-1",
         "normal form, C = 1..4", [&]() -> std::optional<std::string> {
             for (int c = 1; c <= 4; ++c)
                 if (NCPoly d = restrict_T(X(c) * V(c) - U(c) * Y(c)); !d.is_zero()) return "C = " + std::to_string(c) + ": " + d.str();
             return std::nullopt;
         });

    const std::vector<std::pair<int, int>> pairs{{A, 1}, {A, 4}, {B, 4}, {B, 1}};
    step("U(Q) Y(P) - X(Q) V(P) = -q^-1 [PQ] z^P_c M_1^{1c}, M_a^{bc} = T^b_0 T^c_a - q T^b_a T^c_0", "normal form",
         [&]() -> std::optional<std::string> {
             for (auto [P, Q] : pairs) {
                 NCPoly d = restrict_T(U(Q) * Y(P) - X(Q) * V(P) + qi * (br(P, Q) * zM(P)));
                 if (!d.is_zero()) return bn(P, Q) + ": " + d.str();
             }
             return std::nullopt;
         });

    step("-q^-1 z^P_c M_1^{1c} = 1, so [PQ]' = z'^P - z'^Q = U(Q)^-1 [PQ] V(P)^-1", "normal form (quantum determinant)",
         [&]() -> std::optional<std::string> {
             for (int P : {A, B})
                 if (NCPoly d = restrict_T(-qi * zM(P) - NCPoly(1)); !d.is_zero()) return "P = " + std::to_string(P) + ": " + d.str();
             return std::nullopt;
         });

    auto Uf = [&](int c) { return atom(U(c), "U(" + std::to_string(c) + ")"); };
    auto Vf = [&](int c) { return atom(V(c), "V(" + std::to_string(c) + ")"); };
    auto Bf = [&](int P, int Q) { return atom(br(P, Q), bn(P, Q)); };
    auto image = [&](int P, int Q) { return inverse(Uf(Q)) * Bf(P, Q) * inverse(Vf(P)); };
    const Frac CR = Bf(A, 1) * inverse(Bf(A, 4)) * Bf(B, 4) * inverse(Bf(B, 1));
    const Frac CRp = image(A, 1) * inverse(image(A, 4)) * image(B, 4) * inverse(image(B, 1));

    step("CR' = [" + a + "1]'[" + a + "4]'^-1[" + b + "4]'[" + b + "1]'^-1 = U(1)^-1 CR U(1)", "formal cancellation",
         [&]() -> std::optional<std::string> {
             const Frac want = inverse(Uf(1)) * CR * Uf(1);
             if (!same(CRp, want)) return show(simplify(CRp)) + " vs " + show(simplify(want));
             return std::nullopt;
         });

    step("[C4] = [14] - [1C], so 1 - tau(C) = [C4][14]^-1 with tau(C) = [1C][14]^-1", "normal form, C = A, B",
         [&]() -> std::optional<std::string> {
             for (int c : {A, B})
                 if (NCPoly d = S.normal_form(br(c, 4) - br(1, 4) + br(1, c)); !d.is_zero()) return d.str();
             return std::nullopt;
         });

    auto tau = [&](int c) { return Bf(1, c) * inverse(Bf(1, 4)); };
    auto one_minus_tau = [&](int c) { return Bf(c, 4) * inverse(Bf(1, 4)); };
    step("CR = tau(A) (1 - tau(A))^-1 (1 - tau(B)) tau(B)^-1", "formal cancellation", [&]() -> std::optional<std::string> {
        const Frac t = tau(A) * inverse(one_minus_tau(A)) * one_minus_tau(B) * inverse(tau(B));
        if (!same(CR, t)) return show(simplify(CR)) + " vs " + show(simplify(t));
        return std::nullopt;
    });

    // g F = F g when g q-commutes with every factor and the weights cancel
    auto commutes = [&](const NCPoly& g, const Frac& F) -> std::optional<std::string> {
        for (const auto& [w, c0] : g.terms()) {
            const NCPoly t(w);
            QRat tot = 1;
            for (const auto& x : F.f) {
                auto k = ratio(S.normal_form(x.p * t), S.normal_form(t * x.p));
                if (!k) return NCPoly(w).str() + " does not q-commute with " + x.name;
                tot = tot * (x.e > 0 ? *k : k->inv());
            }
            if (!tot.is_one()) return NCPoly(w).str() + " picks up " + tot.str();
        }
        return std::nullopt;
    };

    step("z^1 [PQ] = q^2 [PQ] z^1, so z^1 tau(C) = tau(C) z^1 and z^1 CR = CR z^1", "factorwise q-commutation",
         [&]() -> std::optional<std::string> {
             for (const auto& x : CR.f)
                 if (NCPoly d = S.normal_form(Z(1) * x.p - q * q * (x.p * Z(1))); !d.is_zero()) return x.name + ": " + d.str();
             for (int c : {A, B})
                 if (auto e = commutes(Z(1), tau(c))) return *e;
             return commutes(Z(1), CR);
         });

    step("T^i_j commutes with z^C, so U(1) CR = CR U(1)", "factorwise q-commutation on the terms of U(1)",
         [&]() -> std::optional<std::string> {
             for (int i = 0; i < 2; ++i)
                 for (int j = 0; j < 2; ++j)
                     for (int c = 1; c <= 4; ++c)
                         if (NCPoly d = S.normal_form(Te(i, j) * Z(c) - Z(c) * Te(i, j)); !d.is_zero()) return d.str();
             return commutes(U(1), CR);
         });

    step("CR' = U(1)^-1 CR U(1) = U(1)^-1 U(1) CR = CR", "steps 5 and 9, formal cancellation",
         [&]() -> std::optional<std::string> {
             if (!same(inverse(Uf(1)) * Uf(1) * CR, CR)) return "U(1)^-1 U(1) does not cancel";
             return std::nullopt;
         });
    return res;
}

std::string to_text(const ReplayResult& r) {
    std::ostringstream os;
    os << "cross ratio CR = [" << r.A << "1][" << r.A << "4]^-1[" << r.B << "4][" << r.B << "1]^-1, N = 1, m = 4, T "
       << kind_name(r.kind) << "\n";
    os << "assumed invertible:";
    for (const auto& s : r.assumptions) os << " " << s << ";";
    os << "\n";
    for (const auto& s : r.steps) os << "  " << s.index << ". " << s.claim << "  [" << s.method << "]\n";
    return os.str();
}

Report check_cross_ratio_invariance(int N) {
    if (N != 1) throw PreconditionViolated("the cross ratio replay is defined for N = 1 only, got N = " + std::to_string(N));
    Report rep("crossratio");
    for (auto kind : {CoactionKind::Identity, CoactionKind::Diagonal, CoactionKind::Full})
        for (auto [A, B] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}})
            rep.run(std::string("crossratio.replay.") + kind_name(kind) + "." + std::to_string(A) + std::to_string(B),
                    "CR' = CR step by step", [&]() -> std::optional<std::string> {
                        replay_cross_ratio(A, B, kind);
                        return std::nullopt;
                    });

    // tau(A) = [1A]_a [14]_a^-1 = ([1A][34]^-1)_a (1 + ([13][34]^-1)_a)^-1; each
    // [1A]_a [34]_a^-1 is a-independent once [1A]_a [34]_b = q^2 [34]_a [1A]_b
    // holds for all a, b, which is a generator of the collinearity ideal
    rep.run("crossratio.tau-well-defined", "N = 2, m = 4: [1A]_a [34]_b - q^2 [34]_a [1A]_b in I, [14] = [13] + [34]",
            [&]() -> std::optional<std::string> {
                const BraidedAlgebra Bm = build_braided(2, 4);
                const CollinearityIdeal I = build_collinearity(Bm);
                const QRat q2 = QRat::q_pow(2);
                for (int A : {2, 3})
                    for (int a = 1; a <= 2; ++a)
                        for (int b = 1; b <= 2; ++b) {
                            NCPoly g = pt_diff(1, A, a) * pt_diff(3, 4, b) - q2 * (pt_diff(3, 4, a) * pt_diff(1, A, b));
                            if (NCPoly d = reduce_mod_collinearity(g, I); !d.is_zero())
                                return "A = " + std::to_string(A) + ", a = " + std::to_string(a) + ", b = " + std::to_string(b) + ": " + d.str();
                        }
                for (int a = 1; a <= 2; ++a)
                    if (!(pt_diff(1, 4, a) - pt_diff(1, 3, a) - pt_diff(3, 4, a)).is_zero()) return "[14] != [13] + [34]";
                return std::nullopt;
            });
    return rep;
}

}  // namespace cpq
