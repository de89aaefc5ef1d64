#include "cpq/cqspace.hpp"

#include "cpq/errors.hpp"

namespace cpq {

using namespace gen;

namespace {

std::string tag(const char* name, int i, int j) {
    return std::string(name) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

NCPoly w2(Gen a, Gen b, const QRat& c = 1) { return NCPoly::word({a, b}, c); }

Gen letter_star(Gen g) {
    switch (g.kind) {
        case Kind::X: return xb(g.i);
        case Kind::XBar: return x(g.i);
        case Kind::Xi: return xib(g.i);
        case Kind::XiBar: return xi(g.i);
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

constexpr std::int64_t kX = 1000, kXb = 2000, kL = 3000, kLInv = 3100, kX0Inv = 1500, kXb0Inv = 1999,
                       kXi = 4000, kXib = 5000, kDb = 6000, kD = 7000;

void add_function_letters(RewriteSystem& s, int N) {
    for (int i = 0; i <= N; ++i) s.add_generator(x(i), kX + (N - i));
    for (int i = 0; i <= N; ++i) s.add_generator(xb(i), kXb + i);
    for (int i = 0; i <= N; ++i) {
        s.set_star(x(i), xb(i));
        s.set_star(xb(i), x(i));
    }
}

std::vector<NCPoly> bare(const std::vector<NamedRelation>& rs) {
    std::vector<NCPoly> out;
    for (const auto& r : rs) out.push_back(r.relation);
    return out;
}

bool is_derivative(Gen h) { return h.kind == Kind::Dx || h.kind == Kind::DxBar; }
bool is_form(Gen h) { return parity(h) == 1; }

std::vector<CommutationFact> inferred_facts(const RewriteSystem& s, const NCPoly& g, Gen skip,
                                            bool (*inhomogeneous)(Gen)) {
    std::vector<CommutationFact> facts;
    for (Gen h : s.alphabet()) {
        if (h == skip) continue;
        facts.push_back({h, infer_commutation(s, g, h), inhomogeneous(h)});
    }
    return facts;
}

NCPoly L_value(int N) {
    NCPoly v;
    for (int i = 0; i <= N; ++i) v += w2(x(i), xb(i));
    return v;
}

}  // namespace

std::vector<NamedRelation> ambient_function_relations(int N, const IndexedMatrix& R) {
    const QRat q = QRat::q(), qi = q.inv();
    const IndexedMatrix Ri = rhat_inverse(R);
    std::vector<NamedRelation> out;
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
            NCPoly xx = w2(x(i), x(j)), xbx = w2(xb(i), x(j)), xbxb = w2(xb(i), xb(j));
            for (int k = 0; k <= N; ++k)
                for (int l = 0; l <= N; ++l) {
                    xx -= w2(x(k), x(l), qi * R.at(k, l, i, j));
                    xbx -= w2(x(k), xb(l), q * Ri.at(i, k, j, l));
                    xbxb -= w2(xb(k), xb(l), qi * R.at(j, i, l, k));
                }
            out.push_back({tag("xx", i, j), xx});
            out.push_back({tag("xbx", i, j), xbx});
            out.push_back({tag("xbxb", i, j), xbxb});
        }
    return out;
}

std::vector<NamedRelation> ambient_form_relations(int N, const IndexedMatrix& R) {
    const QRat q = QRat::q();
    const IndexedMatrix Ri = rhat_inverse(R);
    std::vector<NamedRelation> out;
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
            NCPoly xxi = w2(x(i), xi(j)), xbxi = w2(xb(i), xi(j)), xixi = w2(xi(i), xi(j)),
                   xibxi = w2(xib(i), xi(j));
            for (int k = 0; k <= N; ++k)
                for (int l = 0; l <= N; ++l) {
                    xxi -= w2(xi(k), x(l), q * R.at(k, l, i, j));
                    xbxi -= w2(xi(k), xb(l), q * Ri.at(i, k, j, l));
                    xixi += w2(xi(k), xi(l), q * R.at(k, l, i, j));
                    xibxi += w2(xi(k), xib(l), q * Ri.at(i, k, j, l));
                }
            for (auto& [name, rel] : std::vector<NamedRelation>{
                     {tag("xxi", i, j), xxi}, {tag("xbxi", i, j), xbxi}, {tag("xixi", i, j), xixi},
                     {tag("xibxi", i, j), xibxi}}) {
                out.push_back({name, rel});
                out.push_back({"*" + name, free_star(rel)});
            }
        }
    return out;
}

std::vector<NamedRelation> ambient_derivative_relations(int N, const IndexedMatrix& R) {
    const QRat q = QRat::q(), qi = q.inv();
    const IndexedMatrix Ri = rhat_inverse(R);
    const IndexedMatrix Phi = build_phi(R);
    std::vector<NamedRelation> out;
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
            const NCPoly delta = i == j ? NCPoly(1) : NCPoly();
            NCPoly dx = w2(D(i), x(j)) - delta, dxb = w2(D(i), xb(j)), dbxb = w2(Db(i), xb(j)) - delta,
                   dbx = w2(Db(i), x(j)), dd = w2(D(i), D(j)), ddb = w2(D(i), Db(j)), dbdb = w2(Db(i), Db(j));
            for (int k = 0; k <= N; ++k)
                for (int l = 0; l <= N; ++l) {
                    dx -= w2(x(k), D(l), q * R.at(i, k, j, l));
                    dxb -= w2(xb(k), D(l), q * Ri.at(j, i, l, k));
                    dbxb -= w2(xb(k), Db(l), qi * Ri.at(l, j, k, i));
                    dbx -= w2(x(k), Db(l), qi * Phi.at(l, k, j, i));
                    dd -= w2(D(k), D(l), qi * R.at(j, i, l, k));
                    ddb -= w2(Db(k), D(l), qi * Phi.at(k, i, l, j));
                    dbdb -= w2(Db(k), Db(l), qi * R.at(k, l, i, j));
                }
            out.push_back({tag("Dx", i, j), dx});
            out.push_back({tag("Dxb", i, j), dxb});
            out.push_back({tag("Dbxb", i, j), dbxb});
            out.push_back({tag("Dbx", i, j), dbx});
            out.push_back({tag("DD", i, j), dd});
            out.push_back({tag("DDb", i, j), ddb});
            out.push_back({tag("DbDb", i, j), dbdb});
        }
    return out;
}

NCPoly L_power(int n) {
    NCPoly p(1);
    for (int k = 0; k < std::abs(n); ++k) p = p * NCPoly(n > 0 ? L() : Linv());
    return p;
}

void set_derivative_star(AmbientAlgebra& A, int n) {
    const int N = A.N;
    for (int i = 0; i <= N; ++i) {
        const int ip = N - i + 1;
        A.derivs.set_star(D(i), -QRat::q_pow(-2 * ip) * (L_power(n) * NCPoly(Db(i)) * L_power(-n)));
        A.derivs.set_star(Db(i), -QRat::q_pow(2 * ip) * (L_power(n) * NCPoly(D(i)) * L_power(-n)));
    }
    A.star_power = n;
    A.derivs.clear_cache();
}

AmbientAlgebra build_ambient(int N) {
    if (N < 1) throw PreconditionViolated("ambient space needs N >= 1");
    AmbientAlgebra A;
    A.N = N;
    A.R = build_rhat(N + 1, 0);
    A.function_relations = ambient_function_relations(N, A.R);
    A.form_relations = ambient_form_relations(N, A.R);
    A.derivative_relations = ambient_derivative_relations(N, A.R);

    RewriteSystem& F = A.forms;
    F = RewriteSystem("ambient-forms-N" + std::to_string(N));
    add_function_letters(F, N);
    for (int i = 0; i <= N; ++i) F.add_generator(xi(i), kXi + (N - i));
    for (int i = 0; i <= N; ++i) F.add_generator(xib(i), kXib + i);
    for (int i = 0; i <= N; ++i) {
        F.set_star(xi(i), xib(i));
        F.set_star(xib(i), xi(i));
    }
    F.orient_relations(bare(A.function_relations));
    F.orient_relations(bare(A.form_relations));

    RewriteSystem& Dv = A.derivs;
    Dv = RewriteSystem("ambient-derivatives-N" + std::to_string(N));
    add_function_letters(Dv, N);
    for (int i = 0; i <= N; ++i) Dv.add_generator(Db(i), kDb + (N - i));
    for (int i = 0; i <= N; ++i) Dv.add_generator(D(i), kD + i);
    Dv.orient_relations(bare(A.function_relations));
    Dv.orient_relations(bare(A.derivative_relations));

    const NCPoly Lv = L_value(N);
    for (RewriteSystem* s : {&F, &Dv}) {
        // L is central in the function sector and q-commutes with forms;
        // against derivatives the exchange has a function remainder.
        adjoin_element(*s, L(), Lv, kL, inferred_facts(*s, Lv, L(), is_derivative), NCPoly(L()));
        localize(*s, L(), Linv(), kLInv, inferred_facts(*s, NCPoly(L()), L(), is_derivative));
    }
    // x_0 xb^0 is the leading word of L's value; eliminating it makes the
    // letter L and its expansion share one normal form. The forms system keeps
    // both (with x_0 inverted the rule would force a one-letter left side), so
    // zero tests there expand L first.
    eliminate_value(Dv, L());

    localize(F, x(0), x0inv(), kX0Inv, inferred_facts(F, NCPoly(x(0)), x(0), is_form));
    localize(F, xb(0), xb0inv(), kXb0Inv, inferred_facts(F, NCPoly(xb(0)), xb(0), is_form));
    F.set_star(x0inv(), xb0inv());
    F.set_star(xb0inv(), x0inv());
    set_derivative_star(A, 0);
    return A;
}

Report check_relation_reproduction(const AmbientAlgebra& A) {
    Report rep("ambient-relations");
    const std::string n = ".N" + std::to_string(A.N);
    auto run = [&](const std::string& id, const std::vector<NamedRelation>& rels, const RewriteSystem& s) {
        rep.run(id + n, "displayed relation lhs - rhs reduces to 0", [&]() -> std::optional<std::string> {
            for (const auto& r : rels) {
                NCPoly rest = s.normal_form(r.relation);
                if (!rest.is_zero()) return r.name + " leaves " + rest.str();
            }
            return std::nullopt;
        });
    };
    run("ambient.relations.functions", A.function_relations, A.forms);
    run("ambient.relations.forms", A.form_relations, A.forms);
    run("ambient.relations.derivatives", A.derivative_relations, A.derivs);
    run("ambient.relations.functions-in-derivative-system", A.function_relations, A.derivs);
    return rep;
}

Report check_L_central(const AmbientAlgebra& A) {
    Report rep("ambient-L");
    const std::string n = ".N" + std::to_string(A.N);
    const RewriteSystem& F = A.forms;
    const NCPoly Lv = L_value(A.N);
    rep.run("ambient.L-central" + n, "L x_i = x_i L, L xb^i = xb^i L", [&]() -> std::optional<std::string> {
        for (int i = 0; i <= A.N; ++i)
            for (Gen g : {x(i), xb(i)}) {
                NCPoly c = F.normal_form(Lv * NCPoly(g) - NCPoly(g) * Lv);
                if (!c.is_zero()) return "[L, " + to_string(g) + "] = " + c.str();
            }
        return std::nullopt;
    });
    rep.run("ambient.L-real" + n, "L* = L", [&]() -> std::optional<std::string> {
        NCPoly c = F.normal_form(F.star(Lv) - Lv);
        if (c.is_zero()) return std::nullopt;
        return "L* - L = " + c.str();
    });
    rep.run("ambient.L-xi" + n, "L xi_i = q^2 xi_i L", [&]() -> std::optional<std::string> {
        for (int i = 0; i <= A.N; ++i) {
            NCPoly c = F.normal_form(Lv * NCPoly(xi(i)) - QRat::q_pow(2) * (NCPoly(xi(i)) * Lv));
            if (!c.is_zero()) return "i=" + std::to_string(i) + ": " + c.str();
        }
        return std::nullopt;
    });
    return rep;
}

namespace {

std::vector<Word> words_upto(const std::vector<Gen>& letters, int max_len) {
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
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

// D-free part of NF(d * f): the derivative of f along d.
NCPoly apply_derivative(const RewriteSystem& s, Gen d, const NCPoly& f) {
    NCPoly full = s.normal_form(NCPoly(d) * f);
    NCPoly out;
    for (const auto& [w, c] : full.terms()) {
        bool free = true;
        for (Gen g : w) free = free && g.kind != Kind::Dx && g.kind != Kind::DxBar;
        if (free) out.add_term(w, c);
    }
    return out;
}

}  // namespace

Report check_derivative_calculus(const AmbientAlgebra& A, int max_len) {
    Report rep("ambient-calculus");
    const std::string n = ".N" + std::to_string(A.N);
    const RewriteSystem& F = A.forms;
    std::vector<Gen> letters;
    for (int i = 0; i <= A.N; ++i) letters.push_back(x(i));
    for (int i = 0; i <= A.N; ++i) letters.push_back(xb(i));
    const auto words = words_upto(letters, max_len);
    auto d = [&](Derivation which, const NCPoly& p) { return graded_derivation(which, p, F); };

    rep.run("ambient.delta-squared" + n, "delta^2 = deltabar^2 = 0", [&]() -> std::optional<std::string> {
        for (const auto& w : words) {
            NCPoly f(w);
            NCPoly a = d(Derivation::Holomorphic, d(Derivation::Holomorphic, f));
            NCPoly b = d(Derivation::AntiHolomorphic, d(Derivation::AntiHolomorphic, f));
            NCPoly c = d(Derivation::Total, d(Derivation::Total, f));
            if (!a.is_zero() || !b.is_zero() || !c.is_zero()) return "on " + to_string(w);
        }
        return std::nullopt;
    });
    rep.run("ambient.deltabar-x" + n, "deltabar x_j = x_j deltabar", [&]() -> std::optional<std::string> {
        for (const auto& w : words)
            for (int j = 0; j <= A.N; ++j) {
                NCPoly lhs = d(Derivation::AntiHolomorphic, NCPoly(x(j)) * NCPoly(w));
                NCPoly rhs = F.normal_form(NCPoly(x(j)) * d(Derivation::AntiHolomorphic, NCPoly(w)));
                if (!(lhs == rhs)) return "x_" + std::to_string(j) + " on " + to_string(w);
            }
        return std::nullopt;
    });
    rep.run("ambient.delta-from-D" + n, "delta f = xi_i (D^i f), deltabar f = xib^i (Db_i f)",
            [&]() -> std::optional<std::string> {
                for (const auto& w : words) {
                    NCPoly f(w), hol, anti;
                    for (int i = 0; i <= A.N; ++i) {
                        hol += NCPoly(xi(i)) * apply_derivative(A.derivs, D(i), f);
                        anti += NCPoly(xib(i)) * apply_derivative(A.derivs, Db(i), f);
                    }
                    NCPoly a = F.normal_form(F.expand(hol)) - d(Derivation::Holomorphic, f);
                    NCPoly b = F.normal_form(F.expand(anti)) - d(Derivation::AntiHolomorphic, f);
                    if (!a.is_zero()) return "delta on " + to_string(w) + ": " + a.str();
                    if (!b.is_zero()) return "deltabar on " + to_string(w) + ": " + b.str();
                }
                return std::nullopt;
            });
    return rep;
}

Report check_involution_family(AmbientAlgebra A, int n) {
    Report rep("ambient-involution");
    const std::string tagn = ".N" + std::to_string(A.N) + ".n" + std::to_string(n);
    set_derivative_star(A, n);
    const RewriteSystem S = A.derivs;
    std::vector<NCPoly> tests;
    for (int i = 0; i <= A.N; ++i) {
        tests.push_back(D(i));
        tests.push_back(Db(i));
        for (int j = 0; j <= A.N; ++j) {
            tests.push_back(w2(D(i), x(j)));
            tests.push_back(w2(D(i), Db(j)));
        }
    }
    rep.run("ambient.star-twice" + tagn, "(D^i)** = D^i", [&]() -> std::optional<std::string> {
        for (const auto& t : tests) {
            NCPoly c = S.normal_form(S.star(S.star(t)) - t);
            if (!c.is_zero()) return "on " + t.str() + ": " + c.str();
        }
        return std::nullopt;
    });
    rep.run("ambient.star-closure" + tagn, "(D^i)* = -q^{-2i'} L^n Db_i L^-n preserves the relations",
            [&]() -> std::optional<std::string> {
                for (const auto& r : A.derivative_relations) {
                    NCPoly c = S.normal_form(S.star(r.relation));
                    if (!c.is_zero()) return "star of " + r.name + " leaves " + c.str();
                }
                return std::nullopt;
            });
    set_derivative_star(A, n + 1);
    const RewriteSystem S1 = A.derivs;
    rep.run("ambient.star-conjugation" + tagn, "*_{n+1}(a) = L *_n(a) L^-1", [&]() -> std::optional<std::string> {
        for (const auto& t : tests) {
            NCPoly lhs = S1.normal_form(S1.star(t));
            NCPoly rhs = S.normal_form(NCPoly(L()) * S.star(t) * NCPoly(Linv()));
            if (!(lhs == rhs)) return "on " + t.str();
        }
        return std::nullopt;
    });
    return rep;
}

Report check_ambient_q_symmetry(const AmbientAlgebra& A) {
    Report rep("ambient-q-symmetry");
    const std::string n = ".N" + std::to_string(A.N);
    rep.run("ambient.q-symmetry" + n, "q -> 1/q, x_i -> q^{-2i} xb^i, xb^i -> x_i, D^i -> q^{2i} Db_i, Db_i -> D^i",
            [&]() -> std::optional<std::string> {
                for (const auto* rels : {&A.function_relations, &A.derivative_relations})
                    for (const auto& r : *rels) {
                        NCPoly c = A.derivs.normal_form(apply_q_symmetry(r.relation));
                        if (!c.is_zero()) return "image of " + r.name + " leaves " + c.str();
                    }
                return std::nullopt;
            });
    return rep;
}

}  // namespace cpq
