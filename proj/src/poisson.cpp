#include "cpq/poisson.hpp"

#include <bit>
#include <random>

#include "cpq/calculus.hpp"
#include "cpq/errors.hpp"

namespace cpq {

using namespace gen;

namespace {

// Sign of moving the odd letters of b past those of a: parity of pairs i in a, j in b with i > j.
int merge_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    for (std::uint32_t bits = b; bits; bits &= bits - 1) {
        const int j = std::countr_zero(bits);
        swaps += std::popcount(a >> (j + 1));
    }
    return swaps % 2 ? -1 : 1;
}

int letter_slot(int N, Gen g) {
    if (g.copy != 0) throw UnsupportedGenerator("copy-labelled letter " + to_string(g));
    switch (g.kind) {
        case Kind::Z:
        case Kind::Dz: return g.i - 1;
        case Kind::ZBar:
        case Kind::DzBar: return N + g.i - 1;
        default: throw UnsupportedGenerator("no classical image for " + to_string(g));
    }
}

}  // namespace

ClassicalExpr::ClassicalExpr(int N) : N_(N), den_(N, 0) {}

ClassicalExpr::ClassicalExpr(int N, const BigRat& c) : ClassicalExpr(N) {
    add_term({std::vector<int>(2 * N, 0), 0}, c);
}

ClassicalExpr ClassicalExpr::letter(int N, Gen g) {
    ClassicalExpr e(N);
    if (g.kind == Kind::Rho) return rho(N, g.i);
    if (g.kind == Kind::RhoInv) return ClassicalExpr(N, BigRat(1)).divided_by_rho(g.i, 1);
    const int s = letter_slot(N, g);
    Key k{std::vector<int>(2 * N, 0), 0};
    if (g.kind == Kind::Z || g.kind == Kind::ZBar) k.first[s] = 1;
    else k.second = 1u << s;
    e.add_term(k, 1);
    return e;
}

ClassicalExpr ClassicalExpr::rho(int N, int r) {
    ClassicalExpr e(N, BigRat(1));
    for (int c = 1; c <= r; ++c) e += letter(N, z(c)) * letter(N, zb(c));
    return e;
}

void ClassicalExpr::add_term(const Key& k, const BigRat& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

ClassicalExpr ClassicalExpr::operator-() const {
    ClassicalExpr r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

ClassicalExpr ClassicalExpr::with_denominator(const std::vector<int>& den) const {
    ClassicalExpr r = *this;
    for (int a = 0; a < N_; ++a)
        for (int k = den_[a]; k < den[a]; ++k) r = r * rho(N_, a + 1);
    r.den_ = den;
    return r;
}

ClassicalExpr& ClassicalExpr::operator+=(const ClassicalExpr& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    std::vector<int> den(N_);
    for (int a = 0; a < N_; ++a) den[a] = std::max(den_[a], o.den_[a]);
    *this = with_denominator(den);
    const ClassicalExpr b = o.with_denominator(den);
    for (const auto& [k, c] : b.terms_) add_term(k, c);
    return *this;
}

ClassicalExpr& ClassicalExpr::operator-=(const ClassicalExpr& o) { return *this += -o; }

ClassicalExpr operator*(const ClassicalExpr& a, const ClassicalExpr& b) {
    ClassicalExpr r(a.N_);
    for (int k = 0; k < a.N_; ++k) r.den_[k] = a.den_[k] + b.den_[k];
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            if (ka.second & kb.second) continue;
            ClassicalExpr::Key k{ka.first, ka.second | kb.second};
            for (std::size_t v = 0; v < k.first.size(); ++v) k.first[v] += kb.first[v];
            r.add_term(k, ca * cb * merge_sign(ka.second, kb.second));
        }
    return r;
}

ClassicalExpr operator*(const BigRat& c, const ClassicalExpr& a) {
    ClassicalExpr r(a.N_);
    r.den_ = a.den_;
    for (const auto& [k, v] : a.terms_) r.add_term(k, c * v);
    return r;
}

ClassicalExpr ClassicalExpr::divided_by_rho(int r, int k) const {
    ClassicalExpr e = *this;
    e.den_.at(r - 1) += k;
    return e;
}

ClassicalExpr ClassicalExpr::d() const {
    ClassicalExpr out(N_);
    out.den_ = den_;
    for (const auto& [k, c] : terms_)
        for (int v = 0; v < 2 * N_; ++v) {
            const int e = k.first[v];
            if (e == 0 || (k.second >> v) & 1u) continue;
            Key nk = k;
            nk.first[v] -= 1;
            nk.second |= 1u << v;
            const int sign = std::popcount(k.second & ((1u << v) - 1)) % 2 ? -1 : 1;
            out.add_term(nk, c * e * sign);
        }
    // d rho_r^-m = -m rho_r^-m-1 d rho_r, placed on the left
    for (int r = 1; r <= N_; ++r) {
        const int m = den_[r - 1];
        if (m == 0) continue;
        out += BigRat(-m) * (rho(N_, r).d() * divided_by_rho(r, 1));
    }
    return out;
}

ClassicalExpr ClassicalExpr::partial(Gen v) const {
    const int s = letter_slot(N_, v);
    if (v.kind != Kind::Z && v.kind != Kind::ZBar) throw UnsupportedGenerator("partial in odd letter");
    ClassicalExpr out(N_);
    out.den_ = den_;
    for (const auto& [k, c] : terms_) {
        if (k.first[s] == 0) continue;
        Key nk = k;
        nk.first[s] -= 1;
        out.add_term(nk, c * k.first[s]);
    }
    for (int r = 1; r <= N_; ++r) {
        const int m = den_[r - 1];
        if (m == 0 || v.i > r) continue;
        const ClassicalExpr drho = letter(N_, v.kind == Kind::Z ? zb(v.i) : z(v.i));
        out += BigRat(-m) * (drho * divided_by_rho(r, 1));
    }
    return out;
}

ClassicalExpr ClassicalExpr::star() const {
    ClassicalExpr out(N_);
    out.den_ = den_;
    auto conj = [&](int s) { return s < N_ ? s + N_ : s - N_; };
    for (const auto& [k, c] : terms_) {
        Key nk{std::vector<int>(2 * N_), 0};
        for (int s = 0; s < 2 * N_; ++s) nk.first[conj(s)] = k.first[s];
        // (o_1 ... o_k)* = o_k* ... o_1*, then sort
        std::vector<int> seq;
        for (int s = 2 * N_ - 1; s >= 0; --s)
            if ((k.second >> s) & 1u) seq.push_back(conj(s));
        int inv = 0;
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t j = i + 1; j < seq.size(); ++j) inv += seq[i] > seq[j];
        for (int s : seq) nk.second |= 1u << s;
        out.add_term(nk, inv % 2 ? -c : c);
    }
    return out;
}

int ClassicalExpr::degree() const {
    int deg = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const int d = std::popcount(k.second);
        if (first) deg = d;
        else if (d != deg) return -1;
        first = false;
    }
    return deg;
}

std::string ClassicalExpr::str() const {
    if (terms_.empty()) return "0";
    auto name = [&](int s, bool odd) {
        const int a = s < N_ ? s + 1 : s - N_ + 1;
        return std::string(odd ? "d" : "") + (s < N_ ? "z" : "zb") + "[" + std::to_string(a) + "]";
    };
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string m;
        for (int s = 0; s < 2 * N_; ++s)
            for (int e = 0; e < k.first[s]; ++e) m += (m.empty() ? "" : "*") + name(s, false);
        for (int s = 0; s < 2 * N_; ++s)
            if ((k.second >> s) & 1u) m += (m.empty() ? "" : "*") + name(s, true);
        std::string cs = rat_str(c);
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        if (c < 0) cs = rat_str(-c);
        if (m.empty()) out += cs;
        else out += (cs == "1" ? "" : cs + "*") + m;
    }
    std::string den;
    for (int r = 0; r < N_; ++r)
        if (den_[r]) den += (den.empty() ? "" : "*") + std::string("rho[") + std::to_string(r + 1) + "]^" + std::to_string(den_[r]);
    return den.empty() ? out : "(" + out + ")/(" + den + ")";
}

ClassicalExpr classical_limit(const NCPoly& p, int N) {
    ClassicalExpr out(N);
    for (const auto& [w, c] : p.terms()) {
        ClassicalExpr t(N, c.at_one());
        for (Gen g : w) t = t * ClassicalExpr::letter(N, g);
        out += t;
    }
    return out;
}

namespace {

const RewriteSystem& system_for(const NCPoly& p, const ProjectiveAlgebra& P) {
    bool forms = true, functions = true;
    for (const auto& [w, c] : p.terms())
        for (Gen g : w) {
            forms = forms && P.forms.has_generator(g);
            functions = functions && P.functions.has_generator(g);
        }
    if (forms) return P.forms;
    if (functions) return P.functions;
    throw UnsupportedGenerator("no CP system holds every letter of " + p.str());
}

int definite_parity(const NCPoly& p) {
    int par = -1;
    for (const auto& [w, c] : p.terms()) {
        const int x = parity(w);
        if (par >= 0 && x != par) throw PreconditionViolated("no definite form degree: " + p.str());
        par = x;
    }
    return par < 0 ? 0 : par;
}

}  // namespace

ClassicalExpr poisson_bracket(const NCPoly& f, const NCPoly& g, const ProjectiveAlgebra& P) {
    const RewriteSystem& S = system_for(f * g, P);
    const int sign = (definite_parity(f) * definite_parity(g)) % 2 ? -1 : 1;
    const NCPoly c = S.normal_form(f * g - QRat(sign) * (g * f));
    ClassicalExpr out(P.N);
    for (const auto& [w, coeff] : c.terms()) {
        ClassicalExpr t(P.N, limit_div_q_minus_1(coeff));
        for (Gen x : w) t = t * ClassicalExpr::letter(P.N, x);
        out += t;
    }
    return out;
}

FunctionBracket::FunctionBracket(const ProjectiveAlgebra& P) : N_(P.N) {
    for (int a = 1; a <= N_; ++a) coords_.push_back(z(a));
    for (int a = 1; a <= N_; ++a) coords_.push_back(zb(a));
    for (Gen u : coords_) {
        table_.emplace_back();
        for (Gen v : coords_) table_.back().push_back(poisson_bracket(NCPoly(u), NCPoly(v), P));
    }
}

ClassicalExpr FunctionBracket::operator()(const ClassicalExpr& F, const ClassicalExpr& G) const {
    ClassicalExpr out(N_);
    std::vector<ClassicalExpr> dF, dG;
    for (Gen u : coords_) {
        dF.push_back(F.partial(u));
        dG.push_back(G.partial(u));
    }
    for (std::size_t u = 0; u < coords_.size(); ++u) {
        if (dF[u].is_zero()) continue;
        for (std::size_t v = 0; v < coords_.size(); ++v)
            if (!dG[v].is_zero() && !table_[u][v].is_zero()) out += dF[u] * dG[v] * table_[u][v];
    }
    return out;
}

namespace {

std::string nstr(int N) { return "." + std::to_string(N); }

std::optional<std::string> compare(const std::string& what, const ClassicalExpr& got, const ClassicalExpr& want) {
    if (got == want) return std::nullopt;
    return what + ": got " + got.str() + ", want " + want.str();
}

std::vector<Gen> form_generators(int N) {
    std::vector<Gen> out;
    for (int a = 1; a <= N; ++a) out.insert(out.end(), {z(a), zb(a), dz(a), dzb(a)});
    return out;
}

}  // namespace

Report check_poisson_table(const ProjectiveAlgebra& P) {
    Report rep("poisson-table");
    const int N = P.N;
    const std::string n = nstr(N);
    auto C = [&](Gen g) { return ClassicalExpr::letter(N, g); };
    auto br = [&](Gen f, Gen g) { return poisson_bracket(NCPoly(f), NCPoly(g), P); };
    auto idx = [](int a, int b) { return " a=" + std::to_string(a) + " b=" + std::to_string(b); };

    rep.run("poisson.table.zz" + n, "(z_a, z_b) = z_a z_b, a < b", [&]() -> std::optional<std::string> {
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b)
                if (auto w = compare("(z,z)" + idx(a, b), br(z(a), z(b)), C(z(a)) * C(z(b)))) return w;
        return std::nullopt;
    });
    rep.run("poisson.table.zzb" + n, "(z_a, zb^b) = z_a zb^b (a != b), 2(1 + sum_{c<=a} z_c zb^c) (a = b)",
            [&]() -> std::optional<std::string> {
                for (int a = 1; a <= N; ++a)
                    for (int b = 1; b <= N; ++b) {
                        ClassicalExpr want = a == b ? BigRat(2) * ClassicalExpr::rho(N, a) : C(z(a)) * C(zb(b));
                        if (auto w = compare("(z,zb)" + idx(a, b), br(z(a), zb(b)), want)) return w;
                    }
                return std::nullopt;
            });
    rep.run("poisson.table.zdz" + n, "(z_a, dz_b) = z_a dz_b + 2 z_b dz_a (a<b), 2 z_a dz_a (a=b), z_a dz_b (a>b)",
            [&]() -> std::optional<std::string> {
                for (int a = 1; a <= N; ++a)
                    for (int b = 1; b <= N; ++b) {
                        ClassicalExpr want = a == b ? BigRat(2) * (C(z(a)) * C(dz(a))) : C(z(a)) * C(dz(b));
                        if (a < b) want += BigRat(2) * (C(z(b)) * C(dz(a)));
                        if (auto w = compare("(z,dz)" + idx(a, b), br(z(a), dz(b)), want)) return w;
                    }
                return std::nullopt;
            });
    rep.run("poisson.table.zbdz" + n, "(zb^a, dz_b) = -zb^a dz_b (a != b), -2 sum_{c<=a} zb^c dz_c (a = b)",
            [&]() -> std::optional<std::string> {
                for (int a = 1; a <= N; ++a)
                    for (int b = 1; b <= N; ++b) {
                        ClassicalExpr want(N);
                        if (a != b) want = -(C(zb(a)) * C(dz(b)));
                        else
                            for (int c = 1; c <= a; ++c) want -= BigRat(2) * (C(zb(c)) * C(dz(c)));
                        if (auto w = compare("(zb,dz)" + idx(a, b), br(zb(a), dz(b)), want)) return w;
                    }
                return std::nullopt;
            });
    rep.run("poisson.table.star" + n, "(f, g)* = (g*, f*)", [&]() -> std::optional<std::string> {
        const auto gens = form_generators(N);
        for (Gen f : gens)
            for (Gen g : gens) {
                const NCPoly fs = P.forms.star(NCPoly(f)), gs = P.forms.star(NCPoly(g));
                if (auto w = compare("(" + to_string(f) + "," + to_string(g) + ")*", br(f, g).star(),
                                     poisson_bracket(gs, fs, P)))
                    return w;
            }
        return std::nullopt;
    });
    rep.run("poisson.classical-limit" + n, "f g -+ g f vanishes at q = 1 for every pair of letters",
            [&]() -> std::optional<std::string> {
                for (Gen f : P.forms.alphabet())
                    for (Gen g : P.forms.alphabet()) br(f, g);
                for (Gen f : P.functions.alphabet())
                    for (Gen g : P.functions.alphabet()) br(f, g);
                return std::nullopt;
            });
    return rep;
}

Report check_poisson_structure(const ProjectiveAlgebra& P, std::uint64_t seed) {
    Report rep("poisson-structure");
    const int N = P.N;
    const std::string n = nstr(N);
    const RewriteSystem& F = P.forms;
    const auto gens = form_generators(N);

    // random words of length 1..2 plus every pair of letters
    std::vector<std::pair<NCPoly, NCPoly>> pairs;
    for (Gen f : gens)
        for (Gen g : gens) pairs.emplace_back(NCPoly(f), NCPoly(g));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1), len(1, 2);
    auto random_word = [&] {
        Word w;
        for (int k = len(rng); k > 0; --k) w.push_back(gens[pick(rng)]);
        return NCPoly(w);
    };
    for (int k = 0; k < 40; ++k) pairs.emplace_back(random_word(), random_word());

    rep.run("poisson.antisymmetry" + n, "(f, g) = (-1)^{mn+1} (g, f)", [&]() -> std::optional<std::string> {
        for (const auto& [f, g] : pairs) {
            const int s = (definite_parity(f) * definite_parity(g)) % 2 ? 1 : -1;
            if (auto w = compare("(" + f.str() + "," + g.str() + ")", poisson_bracket(f, g, P),
                                 BigRat(s) * poisson_bracket(g, f, P)))
                return w;
        }
        return std::nullopt;
    });
    rep.run("poisson.d-leibniz" + n, "d(f, g) = (df, g) + (-1)^m (f, dg)", [&]() -> std::optional<std::string> {
        for (const auto& [f, g] : pairs) {
            const NCPoly df = graded_derivation(Derivation::Total, f, F), dg = graded_derivation(Derivation::Total, g, F);
            ClassicalExpr rhs = poisson_bracket(df, g, P);
            const ClassicalExpr fdg = poisson_bracket(f, dg, P);
            rhs += definite_parity(f) % 2 ? -fdg : fdg;
            if (auto w = compare("d(" + f.str() + "," + g.str() + ")", poisson_bracket(f, g, P).d(), rhs)) return w;
        }
        return std::nullopt;
    });

    const OneForms of = projective_one_forms(P);
    rep.run("poisson.eta" + n, "2 delta f = (eta, f), 2 deltabar f = (etabar, f), 2 df = (Xi, f)",
            [&]() -> std::optional<std::string> {
                const std::pair<Derivation, const NCPoly*> cases[] = {
                    {Derivation::Holomorphic, &of.eta}, {Derivation::AntiHolomorphic, &of.etabar}, {Derivation::Total, &of.Xi}};
                for (Gen f : gens)
                    for (const auto& [which, form] : cases) {
                        const ClassicalExpr want = BigRat(2) * classical_limit(graded_derivation(which, NCPoly(f), F), N);
                        if (auto w = compare("(" + form->str() + ", " + to_string(f) + ")", poisson_bracket(*form, NCPoly(f), P), want))
                            return w;
                    }
                return std::nullopt;
            });
    rep.run("poisson.Xi-squared" + n, "Xi^2 = 0 at q = 1", [&]() -> std::optional<std::string> {
        const NCPoly sq = F.normal_form(of.Xi * of.Xi);
        for (const auto& [w, c] : sq.terms())
            if (c.at_one() != 0) return "coefficient of " + to_string(w) + " is " + c.str();
        return std::nullopt;
    });
    rep.run("poisson.K" + n, "(K, f) = (K, df) = 0", [&]() -> std::optional<std::string> {
        const NCPoly K = kahler_form(P);
        for (Gen f : gens) {
            if (auto w = compare("(K," + to_string(f) + ")", poisson_bracket(K, NCPoly(f), P), ClassicalExpr(N))) return w;
            const NCPoly df = graded_derivation(Derivation::Total, NCPoly(f), F);
            if (auto w = compare("(K,d" + to_string(f) + ")", poisson_bracket(K, df, P), ClassicalExpr(N))) return w;
        }
        return std::nullopt;
    });

    // commutative monomials of degree <= 2 in the coordinates
    std::vector<Gen> coords;
    for (int a = 1; a <= N; ++a) coords.insert(coords.end(), {z(a), zb(a)});
    std::vector<NCPoly> monos{NCPoly(1)};
    for (std::size_t i = 0; i < coords.size(); ++i) {
        monos.emplace_back(coords[i]);
        for (std::size_t j = i; j < coords.size(); ++j) monos.push_back(NCPoly::word({coords[i], coords[j]}));
    }
    const FunctionBracket fb(P);
    rep.run("poisson.biderivation" + n, "(f, g) from the coordinate bivector equals the commutator limit",
            [&]() -> std::optional<std::string> {
                for (const auto& f : monos)
                    for (const auto& g : monos)
                        if (auto w = compare("(" + f.str() + "," + g.str() + ")", fb(classical_limit(f, N), classical_limit(g, N)),
                                             poisson_bracket(f, g, P)))
                            return w;
                return std::nullopt;
            });
    rep.run("poisson.jacobi" + n, "(f, (g, h)) + (g, (h, f)) + (h, (f, g)) = 0", [&]() -> std::optional<std::string> {
        std::vector<ClassicalExpr> cl;
        for (const auto& m : monos) cl.push_back(classical_limit(m, N));
        for (std::size_t i = 0; i < cl.size(); ++i)
            for (std::size_t j = i + 1; j < cl.size(); ++j)
                for (std::size_t k = j + 1; k < cl.size(); ++k) {
                    ClassicalExpr s = fb(cl[i], fb(cl[j], cl[k]));
                    s += fb(cl[j], fb(cl[k], cl[i]));
                    s += fb(cl[k], fb(cl[i], cl[j]));
                    if (!s.is_zero())
                        return "(" + monos[i].str() + ", " + monos[j].str() + ", " + monos[k].str() + "): " + s.str();
                }
        return std::nullopt;
    });
    return rep;
}

}  // namespace cpq
