#include "cpq/qgroup.hpp"

#include "cpq/errors.hpp"

namespace cpq {

using namespace gen;

namespace {

constexpr std::int64_t kTRank = 20000;

NCPoly Te(int i, int j) { return NCPoly(T(i, j)); }

bool contains_kind(const NCPoly& p, Kind k) {
    for (const auto& [w, c] : p.terms())
        for (Gen g : w)
            if (g.kind == k) return true;
    return false;
}

std::string nstr(int N) { return "." + std::to_string(N); }

}  // namespace

std::vector<NCPoly> rtt_relations(const IndexedMatrix& R) {
    std::vector<NCPoly> out;
    const int lo = R.lo(), hi = R.hi();
    for (int c = lo; c <= hi; ++c)
        for (int d = lo; d <= hi; ++d)
            for (int i = lo; i <= hi; ++i)
                for (int j = lo; j <= hi; ++j) {
                    NCPoly rel;
                    for (int k = lo; k <= hi; ++k)
                        for (int l = lo; l <= hi; ++l) {
                            const QRat r = R.at(k, l, i, j);
                            if (!r.is_zero()) rel += r * (Te(c, k) * Te(d, l));
                        }
                    for (int a = lo; a <= hi; ++a)
                        for (int b = lo; b <= hi; ++b) {
                            const QRat r = R.at(c, d, a, b);
                            if (!r.is_zero()) rel -= r * (Te(a, i) * Te(b, j));
                        }
                    if (!rel.is_zero()) out.push_back(rel);
                }
    return out;
}

NCPoly quantum_determinant2() { return Te(0, 0) * Te(1, 1) - QRat::q() * (Te(0, 1) * Te(1, 0)); }

NCPoly antipode_entry(int i, int j) {
    const QRat q = QRat::q();
    if (i == 0 && j == 0) return Te(1, 1);
    if (i == 0 && j == 1) return -q.inv() * Te(0, 1);
    if (i == 1 && j == 0) return -q * Te(1, 0);
    if (i == 1 && j == 1) return Te(0, 0);
    throw IndexOutOfRange("antipode entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

CoactionAlgebra build_coaction(const RewriteSystem& base, int n, bool unimodular) {
    CoactionAlgebra C;
    C.n = n;
    C.unimodular = unimodular && n == 2;
    C.sys = base;
    const auto letters = base.alphabet();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C.sys.add_generator(T(i, j), kTRank + i * n + j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (Gen g : letters) C.sys.add_rule(T(i, j), g, NCPoly::word({g, T(i, j)}));
    auto rels = rtt_relations(build_rhat(n, 0));
    if (C.unimodular) rels.push_back(quantum_determinant2() - NCPoly(1));
    C.sys.orient_relations(rels);
    return C;
}

NCPoly coact(const NCPoly& p, int n) {
    const int N = n - 1;
    auto need_inverse = [&](Gen g) {
        if (n != 2) throw UnsupportedGenerator(to_string(g) + " needs T^-1, available for n = 2 only");
    };
    return p.substitute([&](Gen g) -> NCPoly {
        NCPoly out;
        switch (g.kind) {
            case Kind::X:
                for (int j = 0; j < n; ++j) out += NCPoly(x(j)) * Te(j, g.i);
                return out;
            case Kind::Xi:
                for (int j = 0; j < n; ++j) out += NCPoly(xi(j)) * Te(j, g.i);
                return out;
            case Kind::DxBar:
                for (int j = 0; j < n; ++j)
                    out += QRat::q_pow(2 * (N - g.i + 1) - 2 * (N - j + 1)) * (NCPoly(Db(j)) * Te(j, g.i));
                return out;
            case Kind::XBar:
                need_inverse(g);
                for (int j = 0; j < n; ++j) out += antipode_entry(g.i, j) * NCPoly(xb(j));
                return out;
            case Kind::XiBar:
                need_inverse(g);
                for (int j = 0; j < n; ++j) out += antipode_entry(g.i, j) * NCPoly(xib(j));
                return out;
            case Kind::Dx:
                need_inverse(g);
                for (int j = 0; j < n; ++j) out += antipode_entry(g.i, j) * NCPoly(D(j));
                return out;
            case Kind::L:
            case Kind::LInv: return NCPoly(g);
            default: throw UnsupportedGenerator("no coaction image for " + to_string(g));
        }
    });
}

NCPoly at_identity(const NCPoly& p) {
    return p.substitute([](Gen g) -> NCPoly {
        if (g.kind == Kind::T) return g.i == g.j ? NCPoly(1) : NCPoly();
        return NCPoly(g);
    });
}

FractionalImage fractional_transform(const NCPoly& p, const AmbientAlgebra& A, const CoactionAlgebra& C) {
    const NCPoly amb = A.forms.normal_form(p.substitute([&](Gen g) { return ambient_image(g, A.N); }));
    int m = 0, k = 0;
    for (const auto& [w, c] : amb.terms()) {
        int a = 0, b = 0;
        for (Gen g : w) {
            a += g.kind == Kind::X0Inv;
            b += g.kind == Kind::XBar0Inv;
        }
        m = std::max(m, a);
        k = std::max(k, b);
    }
    // x_0 and xb^0 are normal in the function sector; the forms may need one more
    for (int extra = 0; extra <= 2; ++extra) {
        const NCPoly num = A.forms.normal_form(NCPoly(x(0)).pow(m + extra) * amb * NCPoly(xb(0)).pow(k + extra));
        if (contains_kind(num, Kind::X0Inv) || contains_kind(num, Kind::XBar0Inv)) continue;
        return {m + extra, C.sys.normal_form(coact(num, C.n)), k + extra};
    }
    throw PreconditionViolated("cannot clear x_0^-1, xb0^-1 from " + amb.str());
}

Report check_covariance(int N) {
    Report rep("covariance");
    const int n = N + 1;
    const std::string tag = nstr(N);
    const AmbientAlgebra A = build_ambient(N);
    const CoactionAlgebra Cf = build_coaction(A.forms, n), Cd = build_coaction(A.derivs, n);

    for (const auto* C : {&Cf, &Cd}) {
        const auto h = check_system_hygiene(C->sys, false, false);
        for (auto e : h.entries()) {
            e.id = "qgroup." + e.id + tag;
            rep.add(e);
        }
    }
    if (n == 2) {
        rep.run("qgroup.antipode" + tag, "T T^-1 = T^-1 T = 1 with det_q = 1", [&]() -> std::optional<std::string> {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    NCPoly a, b;
                    for (int k = 0; k < 2; ++k) {
                        a += Te(i, k) * antipode_entry(k, j);
                        b += antipode_entry(i, k) * Te(k, j);
                    }
                    const NCPoly id = i == j ? NCPoly(1) : NCPoly();
                    for (const auto& v : {a, b}) {
                        NCPoly d = Cf.sys.normal_form(v - id);
                        if (!d.is_zero()) return "entry " + std::to_string(i) + std::to_string(j) + ": " + d.str();
                    }
                }
            return std::nullopt;
        });
        rep.run("qgroup.det-central" + tag, "det_q commutes with every T^i_j", [&]() -> std::optional<std::string> {
            const NCPoly det = quantum_determinant2();
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    // computed without the det rule: GL_q(2) alone
                    RewriteSystem gl("gl2");
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b) gl.add_generator(T(a, b), kTRank + 2 * a + b);
                    gl.orient_relations(rtt_relations(build_rhat(2, 0)));
                    NCPoly d = gl.normal_form(det * Te(i, j) - Te(i, j) * det);
                    if (!d.is_zero()) return "T^" + std::to_string(i) + "_" + std::to_string(j) + ": " + d.str();
                }
            return std::nullopt;
        });
        rep.run("qgroup.L-invariant" + tag, "x_i xb^i -> x_i xb^i", [&]() -> std::optional<std::string> {
            const NCPoly Lv = *A.forms.value(L());
            NCPoly d = Cf.sys.normal_form(coact(Lv, n) - Lv);
            if (d.is_zero()) return std::nullopt;
            return d.str();
        });
    }

    auto sector = [&](const std::string& id, const std::vector<NamedRelation>& rels, const CoactionAlgebra& C) {
        rep.run("qgroup.covariance." + id + tag, "x -> x T, xb -> T^-1 xb, xi -> xi T, D -> T^-1 D, Db_i -> Db_j q^{2i'} T^j_i q^{-2j'}",
                [&]() -> std::optional<std::string> {
                    int checked = 0;
                    for (const auto& r : rels) {
                        NCPoly img;
                        try {
                            img = coact(r.relation, n);
                        } catch (const UnsupportedGenerator&) {
                            if (n == 2) throw;
                            continue;
                        }
                        ++checked;
                        NCPoly d = C.sys.normal_form(img);
                        if (!d.is_zero()) return r.name + " leaves " + d.str();
                    }
                    if (checked == 0) return "no relation in this sector is checkable";
                    return std::nullopt;
                });
    };
    sector("functions", A.function_relations, Cf);
    sector("forms", A.form_relations, Cf);
    sector("derivatives", A.derivative_relations, Cd);
    rep.run("qgroup.identity" + tag, "T = 1 acts trivially", [&]() -> std::optional<std::string> {
        for (const auto& r : A.form_relations) {
            NCPoly img;
            try {
                img = coact(r.relation, n);
            } catch (const UnsupportedGenerator&) {
                continue;
            }
            if (!(at_identity(img) == r.relation)) return r.name;
        }
        return std::nullopt;
    });
    return rep;
}

// L is opaque in the forms system: clear L^-1 on the right, then put L = x_i xb^i.
static NCPoly modulo_L(const RewriteSystem& S, NCPoly p, int N) {
    for (int guard = 0; contains_kind(p, Kind::LInv); ++guard) {
        if (guard > 8) throw PreconditionViolated("L^-1 does not clear: " + p.str());
        p = S.normal_form(p * NCPoly(L()));
    }
    NCPoly Lv;
    for (int i = 0; i <= N; ++i) Lv += NCPoly(x(i)) * NCPoly(xb(i));
    return S.normal_form(p.substitute([&](Gen g) { return g.kind == Kind::L ? Lv : NCPoly(g); }));
}

Report check_K_invariance(int N) {
    Report rep("k-invariance");
    const std::string tag = nstr(N);
    if (N != 1) {
        rep.run("qgroup.k-invariance" + tag, "fractional transformations at N = 1",
                [] { return std::optional<std::string>("only N = 1 is supported"); });
        return rep;
    }
    const AmbientAlgebra A = build_ambient(1);
    const ProjectiveAlgebra P = build_projective(1);
    const CoactionAlgebra C = build_coaction(A.forms, 2);
    auto amb = [&](const NCPoly& p) { return A.forms.normal_form(p.substitute([&](Gen g) { return ambient_image(g, A.N); })); };

    rep.run("qgroup.fractional.z" + tag, "z -> (T^0_0 + z T^1_0)^-1 (T^0_1 + z T^1_1)", [&]() -> std::optional<std::string> {
        const auto img = fractional_transform(NCPoly(z(1)), A, C);
        if (img.left != 1 || img.right != 0) return "denominator powers " + std::to_string(img.left) + ", " + std::to_string(img.right);
        // x'_0 = x_0 (alpha + z gamma), numerator = x_0 (beta + z delta)
        const NCPoly zamb = amb(NCPoly(z(1)));
        const NCPoly U = Te(0, 0) + zamb * Te(1, 0), X = Te(0, 1) + zamb * Te(1, 1);
        NCPoly d1 = C.sys.normal_form(coact(NCPoly(x(0)), 2) - NCPoly(x(0)) * U);
        NCPoly d2 = C.sys.normal_form(img.numerator - NCPoly(x(0)) * X);
        if (!d1.is_zero()) return "x'_0 - x_0 U = " + d1.str();
        if (!d2.is_zero()) return "numerator - x_0 X = " + d2.str();
        if (!(at_identity(img.numerator) == NCPoly(x(1)))) return "T = 1 does not give z";
        return std::nullopt;
    });
    rep.run("qgroup.fractional.relations" + tag, "x'_0 normal: x'_0 x'_1 = q x'_1 x'_0, xb'^1 x'_0 = q x'_0 xb'^1, x'_0 xb'^0 = xb'^0 x'_0",
            [&]() -> std::optional<std::string> {
                const NCPoly x0 = coact(NCPoly(x(0)), 2), x1 = coact(NCPoly(x(1)), 2);
                const NCPoly xb0 = coact(NCPoly(xb(0)), 2), xb1 = coact(NCPoly(xb(1)), 2);
                const QRat q = QRat::q();
                for (const auto& [name, rel] : std::vector<std::pair<std::string, NCPoly>>{
                         {"x0x1", x0 * x1 - q * (x1 * x0)}, {"xb1x0", xb1 * x0 - q * (x0 * xb1)}, {"xb0x0", xb0 * x0 - x0 * xb0}}) {
                    NCPoly d = C.sys.normal_form(rel);
                    if (!d.is_zero()) return name + ": " + d.str();
                }
                return std::nullopt;
            });

    const OneForms of = projective_one_forms(P);
    const NCPoly eta = amb(of.eta);
    rep.run("qgroup.eta-shift" + tag, "eta -> eta + q f^-1 delta f, f = T^0_0 + z T^1_0 (multiplied on the left by x'_0)",
            [&]() -> std::optional<std::string> {
                const NCPoly H = A.forms.normal_form(NCPoly(x(0)) * eta);
                if (contains_kind(H, Kind::X0Inv)) return "x_0 eta still holds x_0^-1: " + H.str();
                const NCPoly x0p = coact(NCPoly(x(0)), 2), xi0p = coact(NCPoly(xi(0)), 2);
                const NCPoly lhs = coact(H, 2);
                // x'_0 f^-1 delta f = x_0 delta(x_0^-1 x'_0) = xi'_0 - xi_0 x_0^-1 x'_0
                const NCPoly rhs = x0p * eta + QRat::q() * (xi0p - NCPoly(xi(0)) * NCPoly(x0inv()) * x0p);
                NCPoly d = modulo_L(C.sys, C.sys.normal_form(lhs - rhs), A.N);
                if (!d.is_zero()) return d.str();
                return std::nullopt;
            });
    rep.run("qgroup.K-invariant" + tag, "K -> K", [&]() -> std::optional<std::string> {
        const NCPoly K = amb(kahler_form(P));
        if (K.is_zero()) return "K vanishes in the ambient algebra";
        if (contains_kind(K, Kind::X0Inv) || contains_kind(K, Kind::XBar0Inv)) return "K holds x_0^-1: " + K.str();
        NCPoly d = C.sys.normal_form(coact(K, 2) - K);
        if (!d.is_zero()) return d.str();
        return std::nullopt;
    });
    return rep;
}

}  // namespace cpq
