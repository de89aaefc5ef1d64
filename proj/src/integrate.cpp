#include "cpq/integrate.hpp"

#include <random>

#include "cpq/errors.hpp"

namespace cpq {

using namespace gen;

namespace {

bool is_coordinate(Gen g) { return g.kind == Kind::Z || g.kind == Kind::ZBar; }

// Net z minus zb count per index; zero everywhere iff balanced.
std::vector<int> weight(const Word& w, int N) {
    std::vector<int> c(N + 1, 0);
    for (Gen g : w) {
        if (g.kind == Kind::Z) ++c[g.i];
        else if (g.kind == Kind::ZBar) --c[g.i];
    }
    return c;
}

bool balanced(const Word& w, int N) {
    for (int v : weight(w, N))
        if (v != 0) return false;
    return true;
}

NCPoly rho_or_one(int r) { return r == 0 ? NCPoly(1) : NCPoly(rho(r)); }

NCPoly rho_monomial(const std::vector<int>& e) {
    NCPoly m(1);
    for (std::size_t a = 0; a < e.size(); ++a) m = m * rho_power(static_cast<int>(a) + 1, e[a]);
    return m;
}

}  // namespace

RhoReduction reduce_to_rho(const NCPoly& p, const ProjectiveAlgebra& P) {
    const RewriteSystem& F = P.functions;
    RhoReduction out;
    NCPoly work = F.normal_form(p);
    while (!work.is_zero()) {
        NCPoly next;
        for (const auto& [w, c] : work.terms()) {
            std::size_t last_z = w.size();
            bool has_coord = false;
            for (std::size_t k = 0; k < w.size(); ++k) {
                if (!is_coordinate(w[k])) continue;
                has_coord = true;
                if (w[k].kind == Kind::Z) last_z = k;
            }
            if (!has_coord) {
                out.rho_part.add_term(w, c);
                continue;
            }
            if (!balanced(w, P.N)) {
                out.unbalanced.add_term(w, c);
                continue;
            }
            // normal order puts the lowest-index z directly before the matching zb
            if (last_z + 1 >= w.size() || w[last_z + 1].kind != Kind::ZBar || w[last_z + 1].i != w[last_z].i)
                throw PreconditionViolated("balanced word not in z...zb order: " + to_string(w));
            const int a = w[last_z].i;
            Word head(w.begin(), w.begin() + static_cast<long>(last_z));
            Word tail(w.begin() + static_cast<long>(last_z) + 2, w.end());
            next += NCPoly(head, c) * (NCPoly(rho(a)) - rho_or_one(a - 1)) * NCPoly(tail);
        }
        work = F.normal_form(next);
    }
    return out;
}

std::vector<int> rho_exponents(const Word& w, int N) {
    std::vector<int> e(N, 0);
    for (Gen g : w) {
        if (g.kind == Kind::Rho) ++e.at(g.i - 1);
        else if (g.kind == Kind::RhoInv) --e.at(g.i - 1);
        else throw PreconditionViolated("not a rho word: " + to_string(w));
    }
    return e;
}

bool rho_admissible(const std::vector<int>& e) {
    int I = 0;
    for (int a = static_cast<int>(e.size()); a >= 1; --a) {
        I -= e[a - 1];
        if (I + a <= 0) return false;
    }
    return true;
}

QRat rho_integral(const std::vector<int>& e) {
    QRat v(1);
    int I = 0;
    for (int a = static_cast<int>(e.size()); a >= 1; --a) {
        I -= e[a - 1];
        if (I + a <= 0)
            throw Divergent("I_" + std::to_string(a) + " + " + std::to_string(a) + " = " + std::to_string(I + a) +
                            " <= 0");
        v *= qint(a) / qint(I + a);
    }
    return v;
}

QRat integrate(const NCPoly& p, const ProjectiveAlgebra& P) {
    QRat v;
    const RhoReduction red = reduce_to_rho(p, P);
    for (const auto& [w, c] : red.rho_part.terms()) v += c * rho_integral(rho_exponents(w, P.N));
    return v;
}

QRat integrate(const NCPoly& p, int N) { return integrate(p, build_projective(N)); }

NCPoly dilate(const NCPoly& f) {
    return f.substitute([](Gen g) -> NCPoly {
        if (g.kind == Kind::Z) return NCPoly(g) * QRat::q_pow(2 * g.i);
        if (g.kind == Kind::ZBar) return NCPoly(g) * QRat::q_pow(-2 * g.i);
        return NCPoly(g);
    });
}

namespace {

std::string tuple_str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

// All tuples in [-m, m]^N.
std::vector<std::vector<int>> tuples(int N, int m) {
    std::vector<std::vector<int>> out{{}};
    for (int a = 0; a < N; ++a) {
        std::vector<std::vector<int>> grown;
        for (const auto& t : out)
            for (int v = -m; v <= m; ++v) {
                auto u = t;
                u.push_back(v);
                grown.push_back(u);
            }
        out = std::move(grown);
    }
    return out;
}

}  // namespace

Report check_recursion(const ProjectiveAlgebra& P, int maxexp) {
    Report rep("integrate-recursion");
    const int N = P.N;
    const std::string n = "." + std::to_string(N);
    // i_a = -e_a throughout, following the quoted formulas
    auto value = [](const std::vector<int>& i) {
        std::vector<int> e;
        for (int v : i) e.push_back(-v);
        return rho_integral(e);
    };
    auto admissible = [](const std::vector<int>& i) {
        std::vector<int> e;
        for (int v : i) e.push_back(-v);
        return rho_admissible(e);
    };
    const auto all = tuples(N, maxexp);

    rep.run("integrate.recursion" + n, "<..rho_{a-1}^{-i_{a-1}+1} rho_a^{-i_a}..>[I_a+a] = <..rho_{a-1}^{-i_{a-1}} rho_a^{-i_a+1}..>[I_a+a-1]",
            [&]() -> std::optional<std::string> {
                for (const auto& i : all)
                    for (int a = 1; a <= N; ++a) {
                        auto lhs_i = i, rhs_i = i;
                        if (a > 1) lhs_i[a - 2] -= 1;
                        rhs_i[a - 1] -= 1;
                        if (!admissible(lhs_i) || !admissible(rhs_i)) continue;
                        int I = 0;
                        for (int b = a; b <= N; ++b) I += i[b - 1];
                        QRat l = value(lhs_i) * qint(I + a), r = value(rhs_i) * qint(I + a - 1);
                        if (!(l == r)) return "i=" + tuple_str(i) + " a=" + std::to_string(a) + ": " + l.str() + " vs " + r.str();
                    }
                return std::nullopt;
            });

    rep.run("integrate.reduction" + n, "<rho_1^{-i_1}..rho_a^{-i_a}> = <rho_1^{-i_1}..rho_{a-1}^{-i_{a-1}-i_a}> [a]/[I_a+a]",
            [&]() -> std::optional<std::string> {
                for (const auto& i : all) {
                    if (!admissible(i)) continue;
                    for (int a = 1; a <= N; ++a) {
                        // the tuple truncated to length a, zeros beyond
                        std::vector<int> head(N, 0);
                        for (int b = 1; b <= a; ++b) head[b - 1] = i[b - 1];
                        if (!admissible(head)) continue;
                        std::vector<int> shorter = head;
                        shorter[a - 1] = 0;
                        if (a > 1) shorter[a - 2] += head[a - 1];
                        QRat want = a > 1 ? value(shorter) : QRat(1);
                        want *= qint(a) / qint(head[a - 1] + a);
                        if (!(value(head) == want)) return "i=" + tuple_str(head) + " a=" + std::to_string(a);
                    }
                }
                return std::nullopt;
            });

    rep.run("integrate.positivity" + n, "<rho_1^{-i_1}..rho_N^{-i_N}> > 0 for q > 0 when I_a + a > 0",
            [&]() -> std::optional<std::string> {
                const BigRat samples[] = {BigRat(1, 3), BigRat(1), BigRat(5, 2)};
                for (const auto& i : all) {
                    if (!admissible(i)) continue;
                    const QRat v = value(i);
                    for (const auto& s : samples)
                        if (v.eval(s) <= 0) return "i=" + tuple_str(i) + " q=" + rat_str(s);
                }
                return std::nullopt;
            });

    rep.run("integrate.divergent" + n, "I_a + a <= 0 raises Divergent", [&]() -> std::optional<std::string> {
        for (const auto& i : all) {
            if (admissible(i)) continue;
            try {
                value(i);
                return "no error for i=" + tuple_str(i);
            } catch (const Divergent&) {
            }
        }
        return std::nullopt;
    });

    // The derivation itself: zb^a M z_a = q^{2I_a} M zb^a z_a in the algebra,
    // M zb^a z_a = M (q^-2 rho_a - rho_{a-1}), and <zb^a M z_a> = q^{-2a} <M z_a zb^a>.
    const int m = std::min(maxexp, 2);
    const auto small = tuples(N, m);
    const RewriteSystem& F = P.functions;
    rep.run("integrate.rhoz-commute" + n, "zb^a M z_a = q^{2 I_a} M zb^a z_a", [&]() -> std::optional<std::string> {
        for (const auto& i : small)
            for (int a = 1; a <= N; ++a) {
                std::vector<int> e;
                for (int v : i) e.push_back(-v);
                const NCPoly M = rho_monomial(e);
                int I = 0;
                for (int b = a; b <= N; ++b) I += i[b - 1];
                NCPoly d = F.normal_form(NCPoly(zb(a)) * M * NCPoly(z(a)) -
                                         QRat::q_pow(2 * I) * (M * NCPoly::word({zb(a), z(a)})));
                if (!d.is_zero()) return "i=" + tuple_str(i) + " a=" + std::to_string(a) + ": " + d.str();
            }
        return std::nullopt;
    });
    rep.run("integrate.roro" + n, "zb^a z_a = q^-2 rho_a - rho_{a-1}", [&]() -> std::optional<std::string> {
        for (int a = 1; a <= N; ++a) {
            NCPoly want = QRat::q_pow(-2) * NCPoly(rho(a)) - rho_or_one(a - 1);
            NCPoly d = F.normal_form(F.expand(NCPoly::word({zb(a), z(a)}) - want));
            if (!d.is_zero()) return "a=" + std::to_string(a) + ": " + d.str();
        }
        return std::nullopt;
    });
    rep.run("integrate.rederived" + n, "<zb^a M z_a> = q^{-2a} <M z_a zb^a>", [&]() -> std::optional<std::string> {
        int compared = 0;
        for (const auto& i : small)
            for (int a = 1; a <= N; ++a) {
                std::vector<int> e;
                for (int v : i) e.push_back(-v);
                const NCPoly M = rho_monomial(e);
                QRat l, r;
                try {
                    l = integrate(NCPoly(zb(a)) * M * NCPoly(z(a)), P);
                    r = QRat::q_pow(-2 * a) * integrate(M * NCPoly::word({z(a), zb(a)}), P);
                } catch (const Divergent&) {
                    continue;
                }
                ++compared;
                if (!(l == r)) return "i=" + tuple_str(i) + " a=" + std::to_string(a) + ": " + l.str() + " vs " + r.str();
            }
        if (compared == 0) return "no integrable case";
        return std::nullopt;
    });
    return rep;
}

Report check_dilation_identity(const ProjectiveAlgebra& P, int samples, std::uint64_t seed) {
    Report rep("integrate-dilation");
    const int N = P.N;
    rep.run("integrate.dilation." + std::to_string(N), "<f g> = <g f(Dz, D^-1 zb)>, D = diag(q^{2a})",
            [&]() -> std::optional<std::string> {
                std::mt19937_64 rng(seed);
                std::vector<Gen> letters;
                for (int a = 1; a <= N; ++a) {
                    letters.push_back(z(a));
                    letters.push_back(zb(a));
                }
                std::uniform_int_distribution<int> len(0, 3), pick(0, static_cast<int>(letters.size()) - 1),
                    rpow(-3, 1), ridx(1, N);
                auto random_element = [&] {
                    Word w;
                    for (int k = len(rng); k > 0; --k) w.push_back(letters[pick(rng)]);
                    return NCPoly(w) * rho_power(ridx(rng), rpow(rng));
                };
                int done = 0, attempts = 0;
                while (done < samples) {
                    if (++attempts > 50 * samples) return "only " + std::to_string(done) + " integrable pairs";
                    const NCPoly f = random_element(), g = random_element() * rho_power(N, -3);
                    QRat l, r;
                    try {
                        l = integrate(f * g, P);
                        r = integrate(g * dilate(f), P);
                    } catch (const Divergent&) {
                        continue;
                    }
                    ++done;
                    if (!(l == r)) return "f=" + f.str() + " g=" + g.str() + ": " + l.str() + " vs " + r.str();
                }
                return std::nullopt;
            });
    return rep;
}

Report check_torus_vanishing(const ProjectiveAlgebra& P, int max_degree) {
    Report rep("integrate-torus");
    const int N = P.N;
    rep.run("integrate.torus." + std::to_string(N), "<z_1^{i_1} zb^{j_1} ... > = 0 unless i_a = j_a",
            [&]() -> std::optional<std::string> {
                std::vector<Gen> letters;
                for (int a = 1; a <= N; ++a) {
                    letters.push_back(z(a));
                    letters.push_back(zb(a));
                }
                std::vector<Word> layer{{}};
                for (int d = 1; d <= max_degree; ++d) {
                    std::vector<Word> grown;
                    for (const auto& w : layer)
                        for (Gen g : letters) {
                            Word u = w;
                            u.push_back(g);
                            grown.push_back(u);
                        }
                    layer = std::move(grown);
                    for (const auto& w : layer) {
                        if (balanced(w, N)) continue;
                        auto red = reduce_to_rho(NCPoly(w), P);
                        if (!red.rho_part.is_zero()) return to_string(w) + " reduces to " + red.rho_part.str();
                        if (!integrate(NCPoly(w), P).is_zero()) return to_string(w);
                    }
                }
                return std::nullopt;
            });
    return rep;
}

}  // namespace cpq
