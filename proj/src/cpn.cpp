#include "cpq/cpn.hpp"

#include "cpq/errors.hpp"

namespace cpq {

using namespace gen;

namespace {

std::string tag(const char* name, int a, int b) {
    return std::string(name) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

NCPoly w2(Gen a, Gen b, const QRat& c = 1) { return NCPoly::word({a, b}, c); }

Gen letter_star(Gen g) {
    switch (g.kind) {
        case Kind::Z: return zb(g.i, g.copy);
        case Kind::ZBar: return z(g.i, g.copy);
        case Kind::Dz: return dzb(g.i, g.copy);
        case Kind::DzBar: return dz(g.i, g.copy);
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

constexpr std::int64_t kZ = 1000, kZb = 2000, kRho = 3000, kDz = 4000, kDzb = 5000, kDelb = 6000, kDel = 7000;

std::int64_t rho_rank(int r) { return kRho + 2 * r; }
std::int64_t rhoinv_rank(int r) { return kRho + 2 * r + 1; }

void add_coordinates(RewriteSystem& s, int N) {
    for (int a = 1; a <= N; ++a) s.add_generator(z(a), kZ + (N - a));
    for (int a = 1; a <= N; ++a) s.add_generator(zb(a), kZb + a);
    for (int a = 1; a <= N; ++a) {
        s.set_star(z(a), zb(a));
        s.set_star(zb(a), z(a));
    }
}

std::vector<NCPoly> bare(const std::vector<NamedRelation>& rs) {
    std::vector<NCPoly> out;
    for (const auto& r : rs) out.push_back(r.relation);
    return out;
}

// rho_r z_a = c z_a rho_r with c = 1 for r < a and q^-2 otherwise; zb^a gets 1/c.
std::vector<CommutationFact> rho_coordinate_facts(int N, int r) {
    std::vector<CommutationFact> f;
    for (int a = 1; a <= N; ++a) {
        const QRat c = r < a ? QRat(1) : QRat::q_pow(-2);
        f.push_back({z(a), c});
        f.push_back({zb(a), c.inv()});
    }
    return f;
}

bool is_derivative(Gen h) { return h.kind == Kind::Del || h.kind == Kind::DelBar; }

std::string nstr(int N) { return ".N" + std::to_string(N); }

}  // namespace

NCPoly rho_value(int r) {
    NCPoly v(1);
    for (int a = 1; a <= r; ++a) v += w2(z(a), zb(a));
    return v;
}

NCPoly rho_power(int r, int k) {
    NCPoly p(1);
    for (int i = 0; i < std::abs(k); ++i) p = p * NCPoly(k > 0 ? rho(r) : rhoinv(r));
    return p;
}

std::vector<NamedRelation> projective_function_relations(int N, const IndexedMatrix& R) {
    const QRat q = QRat::q(), qi = q.inv(), lam = lambda_const();
    const IndexedMatrix Ri = rhat_inverse(R);
    std::vector<NamedRelation> out;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            NCPoly zz = w2(z(a), z(b)), zzb = w2(zb(a), z(b));
            if (a == b) zzb += lam * qi;
            for (int c = 1; c <= N; ++c)
                for (int e = 1; e <= N; ++e) {
                    zz -= w2(z(c), z(e), qi * R.at(c, e, a, b));
                    zzb -= w2(z(c), zb(e), qi * Ri.at(a, c, b, e));
                }
            out.push_back({tag("zz", a, b), zz});
            out.push_back({tag("zzb", a, b), zzb});
            out.push_back({tag("*zz", a, b), free_star(zz)});
        }
    return out;
}

std::vector<NamedRelation> projective_form_relations(int N, const IndexedMatrix& R) {
    const QRat q = QRat::q(), qi = q.inv();
    const IndexedMatrix Ri = rhat_inverse(R);
    std::vector<NamedRelation> out;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            NCPoly zdz = w2(z(a), dz(b)), zbdz = w2(zb(a), dz(b)), dzdz = w2(dz(a), dz(b)),
                   dzdzb = w2(dzb(a), dz(b));
            for (int c = 1; c <= N; ++c)
                for (int e = 1; e <= N; ++e) {
                    zdz -= w2(dz(c), z(e), q * R.at(c, e, a, b));
                    zbdz -= w2(dz(c), zb(e), qi * Ri.at(a, c, b, e));
                    dzdz += w2(dz(c), dz(e), q * R.at(c, e, a, b));
                    dzdzb += w2(dz(c), dzb(e), qi * Ri.at(a, c, b, e));
                }
            for (auto& [name, rel] : std::vector<NamedRelation>{{tag("zdz", a, b), zdz},
                                                                 {tag("zbdz", a, b), zbdz},
                                                                 {tag("dzdz", a, b), dzdz},
                                                                 {tag("dzdzb", a, b), dzdzb}}) {
                out.push_back({name, rel});
                out.push_back({"*" + name, free_star(rel)});
            }
        }
    return out;
}

std::vector<NamedRelation> projective_derivative_relations(int N, const IndexedMatrix& R) {
    const QRat q = QRat::q(), qi = q.inv();
    const IndexedMatrix Ri = rhat_inverse(R);
    const IndexedMatrix Phi = build_phi(R);
    std::vector<NamedRelation> out;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            const NCPoly delta = a == b ? NCPoly(1) : NCPoly();
            NCPoly dz_ = w2(del(a), z(b)) - delta, dzb_ = w2(del(a), zb(b)), dbz = w2(delb(a), z(b)),
                   dbzb = w2(delb(a), zb(b)) - delta, dd = w2(del(b), del(a)), ddb = w2(del(a), delb(b)),
                   dbdb = w2(delb(a), delb(b));
            for (int c = 1; c <= N; ++c)
                for (int e = 1; e <= N; ++e) {
                    dz_ -= w2(z(c), del(e), q * R.at(a, c, b, e));
                    dzb_ -= w2(zb(c), del(e), qi * Ri.at(b, a, e, c));
                    dbz -= w2(z(c), delb(e), q * Phi.at(e, c, b, a));
                    dbzb -= w2(zb(c), delb(e), qi * Ri.at(e, b, c, a));
                    dd -= w2(del(e), del(c), qi * R.at(a, b, c, e));
                    ddb -= w2(delb(c), del(e), q * Phi.at(c, a, e, b));
                    dbdb -= w2(delb(c), delb(e), qi * R.at(c, e, a, b));
                }
            out.push_back({tag("delz", a, b), dz_});
            out.push_back({tag("delzb", a, b), dzb_});
            out.push_back({tag("delbz", a, b), dbz});
            out.push_back({tag("delbzb", a, b), dbzb});
            out.push_back({tag("deldel", a, b), dd});
            out.push_back({tag("deldelb", a, b), ddb});
            out.push_back({tag("delbdelb", a, b), dbdb});
        }
    return out;
}

void set_projective_derivative_star(ProjectiveAlgebra& P, int n) {
    const int N = P.N;
    for (int a = 1; a <= N; ++a) {
        const int ap = N - a + 1;
        P.derivs.set_star(del(a), -QRat::q_pow(2 * n - 2 * ap) * (rho_power(N, n) * NCPoly(delb(a)) * rho_power(N, -n)));
        P.derivs.set_star(delb(a), -QRat::q_pow(2 * ap - 2 * n) * (rho_power(N, n) * NCPoly(del(a)) * rho_power(N, -n)));
    }
    P.star_power = n;
    P.derivs.clear_cache();
}

ProjectiveAlgebra build_projective(int N) {
    if (N < 1) throw PreconditionViolated("projective space needs N >= 1");
    ProjectiveAlgebra P;
    P.N = N;
    P.R = build_rhat(N, 1);
    P.function_relations = projective_function_relations(N, P.R);
    P.form_relations = projective_form_relations(N, P.R);
    P.derivative_relations = projective_derivative_relations(N, P.R);
    const std::string n = "-N" + std::to_string(N);

    P.plane = RewriteSystem("cpn-plane" + n);
    add_coordinates(P.plane, N);
    P.plane.orient_relations(bare(P.function_relations));

    // functions with every rho_r
    RewriteSystem& Fn = P.functions;
    Fn = RewriteSystem("cpn-functions" + n);
    add_coordinates(Fn, N);
    Fn.orient_relations(bare(P.function_relations));
    for (int r = 1; r <= N; ++r) {
        auto facts = rho_coordinate_facts(N, r);
        for (int s = 1; s < r; ++s) facts.push_back({rho(s), QRat(1)});
        adjoin_element(Fn, rho(r), rho_value(r), rho_rank(r), facts, NCPoly(rho(r)));
    }
    for (int r = 1; r <= N; ++r) {
        auto facts = rho_coordinate_facts(N, r);
        for (int s = 1; s <= N; ++s)
            if (s != r) facts.push_back({rho(s), QRat(1)});
        for (int s = 1; s < r; ++s) facts.push_back({rhoinv(s), QRat(1)});
        localize(Fn, rho(r), rhoinv(r), rhoinv_rank(r), facts);
    }

    // forms with rho = rho_N
    RewriteSystem& Fo = P.forms;
    Fo = RewriteSystem("cpn-forms" + n);
    add_coordinates(Fo, N);
    for (int a = 1; a <= N; ++a) Fo.add_generator(dz(a), kDz + (N - a));
    for (int a = 1; a <= N; ++a) Fo.add_generator(dzb(a), kDzb + a);
    for (int a = 1; a <= N; ++a) {
        Fo.set_star(dz(a), dzb(a));
        Fo.set_star(dzb(a), dz(a));
    }
    Fo.orient_relations(bare(P.function_relations));
    Fo.orient_relations(bare(P.form_relations));
    {
        auto facts = rho_coordinate_facts(N, N);
        for (int a = 1; a <= N; ++a) {
            facts.push_back({dz(a), QRat(1)});
            facts.push_back({dzb(a), QRat(1)});
        }
        adjoin_element(Fo, rho(N), rho_value(N), rho_rank(N), facts, NCPoly(rho(N)));
        eliminate_value(Fo, rho(N));
        localize(Fo, rho(N), rhoinv(N), rhoinv_rank(N), facts);
    }

    // derivatives with rho = rho_N
    RewriteSystem& Dv = P.derivs;
    Dv = RewriteSystem("cpn-derivatives" + n);
    add_coordinates(Dv, N);
    for (int a = 1; a <= N; ++a) Dv.add_generator(delb(a), kDelb + (N - a));
    for (int a = 1; a <= N; ++a) Dv.add_generator(del(a), kDel + a);
    Dv.orient_relations(bare(P.function_relations));
    Dv.orient_relations(bare(P.derivative_relations));
    {
        const NCPoly rv = rho_value(N);
        auto facts = rho_coordinate_facts(N, N);
        for (int a = 1; a <= N; ++a)
            for (Gen h : {del(a), delb(a)}) facts.push_back({h, infer_commutation(Dv, rv, h), true});
        adjoin_element(Dv, rho(N), rv, rho_rank(N), facts, NCPoly(rho(N)));
        eliminate_value(Dv, rho(N));
        for (auto& f : facts) f.c = infer_commutation(Dv, NCPoly(rho(N)), f.h);
        localize(Dv, rho(N), rhoinv(N), rhoinv_rank(N), facts);
    }
    set_projective_derivative_star(P, N + 1);
    return P;
}

}  // namespace cpq

namespace cpq {

namespace {

std::optional<std::string> all_vanish(const std::vector<NamedRelation>& rels, const RewriteSystem& s) {
    for (const auto& r : rels) {
        NCPoly rest = s.normal_form(r.relation);
        if (!rest.is_zero()) return r.name + " leaves " + rest.str();
    }
    return std::nullopt;
}

std::optional<std::string> vanishes(const std::string& what, const NCPoly& p) {
    if (p.is_zero()) return std::nullopt;
    return what + " leaves " + p.str();
}

}  // namespace

Report check_projective_relations(const ProjectiveAlgebra& P) {
    Report rep("cpn-relations");
    const int N = P.N;
    const std::string n = nstr(N);
    rep.run("cpn.relations.functions" + n, "z_a z_b = q^-1 R^{ce}_{ab} z_c z_e; zb^a z_b = q^-1 (R^-1)^{ac}_{be} z_c zb^e - lambda q^-1 delta^a_b",
            [&] { return all_vanish(P.function_relations, P.plane); });
    rep.run("cpn.relations.forms" + n, "z dz, zb dz, dz dz, dzb dz and their * images",
            [&] { return all_vanish(P.form_relations, P.forms); });
    rep.run("cpn.relations.derivatives" + n, "del z, del zb, delb z, delb zb, del del, del delb",
            [&] { return all_vanish(P.derivative_relations, P.derivs); });
    rep.run("cpn.rho.rhoz" + n, "rho_r z_a = z_a rho_r (r<a), q^-2 z_a rho_r (r>=a)", [&]() -> std::optional<std::string> {
        for (int r = 1; r <= N; ++r)
            for (int a = 1; a <= N; ++a) {
                const QRat c = r < a ? QRat(1) : QRat::q_pow(-2);
                NCPoly e = rho_value(r) * NCPoly(z(a)) - c * (NCPoly(z(a)) * rho_value(r));
                if (auto w = vanishes("r=" + std::to_string(r) + " a=" + std::to_string(a), P.plane.normal_form(e)))
                    return w;
            }
        return std::nullopt;
    });
    rep.run("cpn.rho.commute" + n, "rho_r rho_s = rho_s rho_r", [&]() -> std::optional<std::string> {
        for (int r = 1; r <= N; ++r)
            for (int s = r + 1; s <= N; ++s)
                if (auto w = vanishes("r,s=" + std::to_string(r) + std::to_string(s),
                                      P.plane.normal_form(rho_value(r) * rho_value(s) - rho_value(s) * rho_value(r))))
                    return w;
        return std::nullopt;
    });
    rep.run("cpn.rho.roro" + n, "zb^a z_a = q^-2 rho_a - rho_{a-1}", [&]() -> std::optional<std::string> {
        for (int a = 1; a <= N; ++a) {
            NCPoly e = w2(zb(a), z(a)) - QRat::q_pow(-2) * rho_value(a) + rho_value(a - 1);
            if (auto w = vanishes("a=" + std::to_string(a), P.plane.normal_form(e))) return w;
        }
        return std::nullopt;
    });
    rep.run("cpn.rho.dz" + n, "rho z_a = q^-2 z_a rho, rho dz_a = dz_a rho", [&]() -> std::optional<std::string> {
        const NCPoly rv = rho_value(N);
        for (int a = 1; a <= N; ++a) {
            if (auto w = vanishes("z", P.forms.normal_form(rv * NCPoly(z(a)) - QRat::q_pow(-2) * (NCPoly(z(a)) * rv))))
                return w;
            if (auto w = vanishes("dz", P.forms.normal_form(rv * NCPoly(dz(a)) - NCPoly(dz(a)) * rv))) return w;
        }
        return std::nullopt;
    });
    return rep;
}

Report check_poincare(const ProjectiveAlgebra& P, int max_degree) {
    Report rep("cpn-poincare");
    const int N = P.N;
    rep.run("cpn.poincare" + nstr(N), "normal z, zb words of degree d number C(d+2N-1, 2N-1)",
            [&]() -> std::optional<std::string> {
                std::vector<Gen> letters;
                for (int a = 1; a <= N; ++a) {
                    letters.push_back(z(a));
                    letters.push_back(zb(a));
                }
                auto counts = normal_word_counts(P.plane, letters, max_degree);
                for (int d = 0; d <= max_degree; ++d) {
                    // binomial(d + 2N - 1, 2N - 1)
                    BigInt want = 1;
                    for (int k = 1; k <= 2 * N - 1; ++k) want = want * (d + k) / k;
                    if (BigInt(static_cast<unsigned long>(counts[d])) != want)
                        return "degree " + std::to_string(d) + ": " + std::to_string(counts[d]) + " vs " + want.get_str();
                }
                return std::nullopt;
            });
    return rep;
}

NCPoly ambient_image(Gen g, int N) {
    const NCPoly x0i(x0inv()), xb0i(xb0inv());
    if ((g.kind == Kind::Rho || g.kind == Kind::RhoInv) && g.i == N && N > 0)
        return g.kind == Kind::Rho ? x0i * NCPoly(L()) * xb0i : NCPoly::word({xb(0), Linv(), x(0)});
    switch (g.kind) {
        case Kind::Z: return x0i * NCPoly(x(g.i));
        case Kind::ZBar: return NCPoly(xb(g.i)) * xb0i;
        case Kind::Dz: return x0i * (NCPoly(xi(g.i)) - NCPoly(xi(0)) * x0i * NCPoly(x(g.i)));
        case Kind::DzBar: return (NCPoly(xib(g.i)) - NCPoly(xb(g.i)) * xb0i * NCPoly(xib(0))) * xb0i;
        default: throw UnsupportedGenerator("no ambient image for " + to_string(g));
    }
}

Report check_derivation_from_ambient(const ProjectiveAlgebra& P, const AmbientAlgebra& A) {
    Report rep("cpn-from-ambient");
    const std::string n = nstr(P.N);
    auto run = [&](const std::string& id, const std::vector<NamedRelation>& rels) {
        rep.run(id + n, "z_a = x_0^-1 x_a, zb^a = xb^a (xb^0)^-1, dz_a = x_0^-1(xi_a - xi_0 z_a)",
                [&]() -> std::optional<std::string> {
                    for (const auto& r : rels) {
                        NCPoly img = A.forms.normal_form(r.relation.substitute([](Gen g) { return ambient_image(g); }));
                        if (!img.is_zero()) return r.name + " leaves " + img.str();
                    }
                    return std::nullopt;
                });
    };
    run("cpn.from-ambient.functions", P.function_relations);
    run("cpn.from-ambient.forms", P.form_relations);
    return rep;
}

namespace {

std::vector<Word> words_upto(const std::vector<Gen>& letters, int max_len) {
    std::vector<Word> out{Word{}}, layer{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (Gen g : letters) {
                Word v = w;
                v.push_back(g);
                next.push_back(v);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

NCPoly apply_derivative(const RewriteSystem& s, Gen d, const NCPoly& f) {
    NCPoly full = s.normal_form(NCPoly(d) * f);
    NCPoly out;
    for (const auto& [w, c] : full.terms()) {
        bool free = true;
        for (Gen g : w) free = free && !is_derivative(g);
        if (free) out.add_term(w, c);
    }
    return out;
}

std::vector<Gen> coordinates(int N) {
    std::vector<Gen> v;
    for (int a = 1; a <= N; ++a) {
        v.push_back(z(a));
        v.push_back(zb(a));
    }
    return v;
}

std::vector<Gen> form_letters(int N) {
    std::vector<Gen> v = coordinates(N);
    for (int a = 1; a <= N; ++a) {
        v.push_back(dz(a));
        v.push_back(dzb(a));
    }
    return v;
}

}  // namespace

Report check_projective_derivatives(const ProjectiveAlgebra& P, int max_len) {
    Report rep("cpn-derivatives");
    const int N = P.N;
    const auto words = words_upto(coordinates(N), max_len);
    rep.run("cpn.delta-from-del" + nstr(N), "delta = dz_a del^a, deltabar = dzb^a delb_a", [&]() -> std::optional<std::string> {
        for (const auto& w : words) {
            NCPoly f(w), hol, anti;
            for (int a = 1; a <= N; ++a) {
                hol += NCPoly(dz(a)) * apply_derivative(P.derivs, del(a), f);
                anti += NCPoly(dzb(a)) * apply_derivative(P.derivs, delb(a), f);
            }
            NCPoly e1 = P.forms.normal_form(hol) - graded_derivation(Derivation::Holomorphic, f, P.forms);
            NCPoly e2 = P.forms.normal_form(anti) - graded_derivation(Derivation::AntiHolomorphic, f, P.forms);
            if (!e1.is_zero()) return "delta on " + to_string(w) + ": " + e1.str();
            if (!e2.is_zero()) return "deltabar on " + to_string(w) + ": " + e2.str();
        }
        return std::nullopt;
    });
    rep.run("cpn.delta-squared" + nstr(N), "delta^2 = deltabar^2 = d^2 = 0", [&]() -> std::optional<std::string> {
        for (const auto& w : words)
            for (auto which : {Derivation::Holomorphic, Derivation::AntiHolomorphic, Derivation::Total}) {
                NCPoly once = graded_derivation(which, NCPoly(w), P.forms);
                if (!graded_derivation(which, once, P.forms).is_zero()) return "on " + to_string(w);
            }
        return std::nullopt;
    });
    return rep;
}

Report check_projective_q_symmetry(const ProjectiveAlgebra& P) {
    Report rep("cpn-q-symmetry");
    rep.run("cpn.q-symmetry" + nstr(P.N), "q -> 1/q, z_a -> q^{1-2a} zb^a, zb^a -> q z_a, del^a -> q^{2a-1} delb_a, delb_a -> del^a / q",
            [&]() -> std::optional<std::string> {
                for (const auto* rels : {&P.function_relations, &P.derivative_relations})
                    for (const auto& r : *rels) {
                        NCPoly c = P.derivs.normal_form(apply_q_symmetry(r.relation));
                        if (!c.is_zero()) return "image of " + r.name + " leaves " + c.str();
                    }
                return std::nullopt;
            });
    return rep;
}

}  // namespace cpq

namespace cpq {

OneForms one_form_rep(const RewriteSystem& sys, Gen a, Gen a_inv, const QRat& r, const QRat& s) {
    if (r.is_zero() || s.is_zero() || r == s) throw PreconditionViolated("one-form representation needs r != s, both nonzero");
    const NCPoly ap(a);
    if (!sys.normal_form(sys.star(ap) - ap).is_zero()) throw PreconditionViolated(to_string(a) + " is not real");
    for (Gen h : sys.alphabet()) {
        const bool coord = h.kind == Kind::Z || h.kind == Kind::X;
        const bool diff = h.kind == Kind::Dz || h.kind == Kind::Xi;
        if (!coord && !diff) continue;
        const QRat& c = coord ? r : s;
        if (!sys.normal_form(ap * NCPoly(h) - c * (NCPoly(h) * ap)).is_zero())
            throw PreconditionViolated(to_string(a) + " does not q-commute with " + to_string(h) + " by " + c.str());
    }
    const QRat lam = lambda_const();
    OneForms f;
    f.eta = sys.normal_form(graded_derivation(Derivation::Holomorphic, ap, sys) * NCPoly(a_inv)) * (lam / (1 - s / r));
    f.etabar = sys.normal_form(graded_derivation(Derivation::AntiHolomorphic, ap, sys) * NCPoly(a_inv)) * (lam / (1 - r / s));
    f.Xi = f.eta + f.etabar;
    return f;
}

OneForms projective_one_forms(const ProjectiveAlgebra& P) {
    return one_form_rep(P.forms, rho(P.N), rhoinv(P.N), QRat::q_pow(-2), QRat(1));
}

NCPoly kahler_form(const ProjectiveAlgebra& P) {
    return graded_derivation(Derivation::AntiHolomorphic, projective_one_forms(P).eta, P.forms);
}

MetricPair kahler_metric(int N) {
    const QRat q = QRat::q(), qi = q.inv();
    MetricPair m;
    m.upper.assign(N, std::vector<NCPoly>(N));
    m.lower.assign(N, std::vector<NCPoly>(N));
    const NCPoly r(rho(N)), rinv2 = rho_power(N, -2);
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            NCPoly inner = -(q * q) * w2(zb(a), z(b));
            NCPoly lower = w2(zb(a), z(b));
            if (a == b) {
                inner += r;
                lower += 1;
            }
            m.upper[a - 1][b - 1] = qi * (rinv2 * inner);
            m.lower[a - 1][b - 1] = q * (r * lower);
        }
    return m;
}

namespace {

std::vector<NCPoly> one_form_test_set(int N) {
    std::vector<NCPoly> out;
    const auto letters = form_letters(N);
    for (Gen g : letters) out.push_back(g);
    for (Gen g : letters)
        for (Gen h : letters) out.push_back(w2(g, h));
    return out;
}

std::optional<std::string> equal_nf(const RewriteSystem& s, const std::string& what, const NCPoly& a, const NCPoly& b) {
    NCPoly d = s.normal_form(a - b);
    if (d.is_zero()) return std::nullopt;
    return what + ": difference " + d.str();
}

}  // namespace

Report check_one_form_identities(const ProjectiveAlgebra& P) {
    Report rep("cpn-one-forms");
    const std::string n = nstr(P.N);
    const RewriteSystem& F = P.forms;
    const QRat lam = lambda_const();
    OneForms of;
    rep.run("cpn.one-forms.eta" + n, "eta = -q^-1 delta(rho) rho^-1, etabar = q deltabar(rho) rho^-1",
            [&]() -> std::optional<std::string> {
                of = projective_one_forms(P);
                const NCPoly ri(rhoinv(P.N)), rv(rho(P.N));
                if (auto w = equal_nf(F, "eta", of.eta,
                                      -QRat::q_pow(-1) * (graded_derivation(Derivation::Holomorphic, rv, F) * ri)))
                    return w;
                return equal_nf(F, "etabar", of.etabar,
                                QRat::q() * (graded_derivation(Derivation::AntiHolomorphic, rv, F) * ri));
            });
    const auto tests = one_form_test_set(P.N);
    auto d = [&](Derivation w, const NCPoly& p) { return graded_derivation(w, p, F); };
    rep.run("cpn.one-forms.bracket" + n, "lambda delta f = [eta, f], lambda deltabar f = [etabar, f], lambda d f = [Xi, f]",
            [&]() -> std::optional<std::string> {
                for (const auto& f : tests) {
                    if (auto w = equal_nf(F, "delta " + f.str(), lam * d(Derivation::Holomorphic, f), graded_commutator(of.eta, f)))
                        return w;
                    if (auto w = equal_nf(F, "deltabar " + f.str(), lam * d(Derivation::AntiHolomorphic, f),
                                          graded_commutator(of.etabar, f)))
                        return w;
                    if (auto w = equal_nf(F, "d " + f.str(), lam * d(Derivation::Total, f), graded_commutator(of.Xi, f)))
                        return w;
                }
                return std::nullopt;
            });
    rep.run("cpn.one-forms.nilpotent" + n, "eta^2 = etabar^2 = 0", [&]() -> std::optional<std::string> {
        if (auto w = equal_nf(F, "eta^2", of.eta * of.eta, NCPoly())) return w;
        return equal_nf(F, "etabar^2", of.etabar * of.etabar, NCPoly());
    });
    rep.run("cpn.one-forms.dXi" + n, "lambda d Xi = [Xi, Xi]_+ = 2 Xi^2", [&] {
        return equal_nf(F, "d Xi", lam * d(Derivation::Total, of.Xi), QRat(2) * (of.Xi * of.Xi));
    });
    rep.run("cpn.one-forms.K" + n, "K = delta etabar = deltabar eta = (1/2) d Xi", [&]() -> std::optional<std::string> {
        const NCPoly K = d(Derivation::AntiHolomorphic, of.eta);
        if (auto w = equal_nf(F, "delta etabar", d(Derivation::Holomorphic, of.etabar), K)) return w;
        return equal_nf(F, "d Xi / 2", d(Derivation::Total, of.Xi) * QRat(BigRat(1, 2)), K);
    });
    rep.run("cpn.one-forms.star" + n, "eta* = -etabar, Xi* = -Xi", [&]() -> std::optional<std::string> {
        if (auto w = equal_nf(F, "eta*", F.star(of.eta), -of.etabar)) return w;
        return equal_nf(F, "Xi*", F.star(of.Xi), -of.Xi);
    });
    return rep;
}

Report check_kahler(const ProjectiveAlgebra& P) {
    Report rep("cpn-kahler");
    const int N = P.N;
    const std::string n = nstr(N);
    const RewriteSystem& F = P.forms;
    NCPoly K;
    rep.run("cpn.kahler.metric-form" + n, "K = deltabar eta = dz_a g^{a bbar} dzb^b", [&]() -> std::optional<std::string> {
        K = kahler_form(P);
        const auto g = kahler_metric(N);
        NCPoly sum;
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) sum += NCPoly(dz(a)) * g.upper[a - 1][b - 1] * NCPoly(dzb(b));
        return equal_nf(F, "K", K, sum);
    });
    rep.run("cpn.kahler.closed" + n, "dK = 0", [&] {
        return equal_nf(F, "dK", graded_derivation(Derivation::Total, K, F), NCPoly());
    });
    rep.run("cpn.kahler.real" + n, "K* = K", [&] { return equal_nf(F, "K*", F.star(K), K); });
    rep.run("cpn.kahler.central" + n, "K z_a = z_a K, K dz_a = dz_a K", [&]() -> std::optional<std::string> {
        for (Gen g : form_letters(N))
            if (auto w = equal_nf(F, "[K, " + to_string(g) + "]", K * NCPoly(g), NCPoly(g) * K)) return w;
        return std::nullopt;
    });
    rep.run("cpn.kahler.inverse" + n, "g_{bbar c} g^{c abar} = g^{a cbar} g_{cbar b} = delta_ab", [&]() -> std::optional<std::string> {
        const auto g = kahler_metric(N);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                NCPoly l, r;
                for (int c = 0; c < N; ++c) {
                    l += g.lower[b][c] * g.upper[c][a];
                    r += g.upper[a][c] * g.lower[c][b];
                }
                const NCPoly want = a == b ? NCPoly(1) : NCPoly();
                if (auto w = equal_nf(F, "lower*upper " + std::to_string(a + 1) + std::to_string(b + 1), l, want)) return w;
                if (auto w = equal_nf(F, "upper*lower " + std::to_string(a + 1) + std::to_string(b + 1), r, want)) return w;
            }
        return std::nullopt;
    });
    return rep;
}

VolumeElement volume_element(const ProjectiveAlgebra& P) {
    const int N = P.N;
    const RewriteSystem& F = P.forms;
    NCPoly dv = rho_power(N, -(N + 1));
    for (int a = N; a >= 1; --a) dv = dv * NCPoly(dzb(a));
    for (int a = 1; a <= N; ++a) dv = dv * NCPoly(dz(a));
    const NCPoly K = kahler_form(P);
    NCPoly KN(1);
    for (int k = 0; k < N; ++k) KN = F.normal_form(KN * K);
    if (KN.is_zero()) throw DegenerateTopForm("K^N normal-forms to 0");
    const NCPoly dvn = F.normal_form(dv);
    for (auto it = dvn.terms().rbegin(); it != dvn.terms().rend(); ++it) {
        const QRat c = KN.coeff(it->first);
        if (c.is_zero()) continue;
        const QRat ratio = c / it->second;
        if (!F.normal_form(KN - ratio * dvn).is_zero()) break;
        return {dv, ratio};
    }
    throw DegenerateTopForm("K^N is not proportional to dv_z: " + KN.str());
}

Report check_volume(const ProjectiveAlgebra& P) {
    Report rep("cpn-volume");
    rep.run("cpn.volume" + nstr(P.N), "K^N = c dv_z, dv_z = rho^-(N+1) dzb^N ... dzb^1 dz_1 ... dz_N",
            [&]() -> std::optional<std::string> {
                auto v = volume_element(P);
                BigRat c1 = v.proportionality.at_one();
                if (c1 == 0) return "c(1) = 0, c(q) = " + v.proportionality.str();
                return std::nullopt;
            });
    return rep;
}

}  // namespace cpq
