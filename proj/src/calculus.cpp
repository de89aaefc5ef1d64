#include "cpq/calculus.hpp"

#include "cpq/errors.hpp"

#include <random>

namespace cpq {

NCPoly commutation_remainder(const RewriteSystem& sys, const NCPoly& g, Gen h, const QRat& c) {
    const NCPoly hp(h);
    return sys.normal_form(g * hp - c * (hp * g));
}

QRat infer_commutation(const RewriteSystem& sys, const NCPoly& g, Gen h) {
    const NCPoly hp(h);
    NCPoly gh = sys.normal_form(g * hp);
    NCPoly hg = sys.normal_form(hp * g);
    // largest word present on both sides fixes the ratio
    for (auto it = hg.terms().rbegin(); it != hg.terms().rend(); ++it) {
        const QRat a = gh.coeff(it->first);
        if (!a.is_zero()) return a / it->second;
    }
    throw CertificateViolation("no q-commutation between " + g.str() + " and " + to_string(h));
}

namespace {

void require_unit(const QRat& c, Gen h) {
    if (c.is_zero()) throw NonUnitCoefficient("zero commutation coefficient against " + to_string(h));
}

NCPoly checked_remainder(const RewriteSystem& sys, const NCPoly& g, const CommutationFact& f) {
    require_unit(f.c, f.h);
    NCPoly w = commutation_remainder(sys, g, f.h, f.c);
    if (!f.inhomogeneous && !w.is_zero())
        throw CertificateViolation("g*" + to_string(f.h) + " - (" + f.c.str() + ")*" + to_string(f.h) +
                                   "*g = " + w.str());
    return w;
}

}  // namespace

void adjoin_element(RewriteSystem& sys, Gen g, const NCPoly& value, std::int64_t rank,
                    const std::vector<CommutationFact>& facts, const NCPoly& star_image) {
    std::vector<NCPoly> remainders;
    for (const auto& f : facts) remainders.push_back(checked_remainder(sys, value, f));
    sys.add_generator(g, rank);
    sys.set_value(g, value);
    sys.set_star(g, star_image);
    const NCPoly gp(g);
    for (std::size_t k = 0; k < facts.size(); ++k) {
        const auto& f = facts[k];
        const NCPoly& w = remainders[k];
        if (f.h == g) continue;
        const NCPoly hp(f.h);
        // g h = c h g + w
        if (sys.rank(g) > sys.rank(f.h))
            sys.add_rule(g, f.h, f.c * (hp * gp) + w, false);
        else
            sys.add_rule(f.h, g, f.c.inv() * (gp * hp) - f.c.inv() * w, false);
    }
    sys.clear_cache();
}

void localize(RewriteSystem& sys, Gen g, Gen ginv, std::int64_t rank, const std::vector<CommutationFact>& facts) {
    const NCPoly gp(g);
    std::vector<NCPoly> remainders;
    for (const auto& f : facts) remainders.push_back(checked_remainder(sys, gp, f));
    sys.add_generator(ginv, rank);
    if (sys.has_star(g)) {
        // (g^-1)* = (g*)^-1 when g* is a letter with a known inverse
        const NCPoly s = sys.star(gp);
        if (s == gp) sys.set_star(ginv, NCPoly(ginv));
    }
    const NCPoly ip(ginv);
    sys.add_rule(g, ginv, NCPoly(1), false);
    sys.add_rule(ginv, g, NCPoly(1), false);
    for (std::size_t k = 0; k < facts.size(); ++k) {
        const auto& f = facts[k];
        if (f.h == g || f.h == ginv) continue;
        const NCPoly hp(f.h);
        const NCPoly w = ip * remainders[k] * ip;
        // g h = c h g + w  =>  h g^-1 = c g^-1 h + g^-1 w g^-1
        if (sys.rank(ginv) > sys.rank(f.h))
            sys.add_rule(ginv, f.h, f.c.inv() * (hp * ip) - f.c.inv() * w, false);
        else
            sys.add_rule(f.h, ginv, f.c * (ip * hp) + w, false);
    }
    sys.clear_cache();
}

void eliminate_value(RewriteSystem& sys, Gen g) {
    const auto v = sys.value(g);
    if (!v) throw UnsupportedGenerator(to_string(g) + " has no value");
    const NCPoly nv = sys.normal_form(*v);
    const Word lead = sys.leading_word(nv);
    if (lead.size() != 2 || sys.find_rule(lead[0], lead[1]))
        throw OrientationFailure("leading word of the value of " + to_string(g) + " is " + to_string(lead));
    const QRat c = nv.coeff(lead);
    NCPoly rest = nv - NCPoly(lead, c);
    sys.add_rule(lead[0], lead[1], (NCPoly(g) - rest) * c.inv());
    sys.clear_cache();
}

NCPoly derivation_on_letter(Derivation which, Gen g, const RewriteSystem& sys) {
    const bool hol = which != Derivation::AntiHolomorphic;
    const bool anti = which != Derivation::Holomorphic;
    switch (g.kind) {
        case Kind::X: return hol ? NCPoly(gen::xi(g.i)) : NCPoly();
        case Kind::XBar: return anti ? NCPoly(gen::xib(g.i)) : NCPoly();
        case Kind::Z: return hol ? NCPoly(gen::dz(g.i, g.copy)) : NCPoly();
        case Kind::ZBar: return anti ? NCPoly(gen::dzb(g.i, g.copy)) : NCPoly();
        case Kind::Xi:
        case Kind::XiBar:
        case Kind::Dz:
        case Kind::DzBar: return NCPoly();
        default: break;
    }
    if (auto v = sys.value(g)) return graded_derivation(which, *v, sys);
    if (is_inverse_kind(g.kind) && g.kind != Kind::LHalfInv) {
        const Gen base{inverse_kind(g.kind), g.i, g.j, g.copy};
        const NCPoly ip(g);
        return -(ip * derivation_on_letter(which, base, sys) * ip);
    }
    throw UnsupportedGenerator("no derivation rule for " + to_string(g));
}

NCPoly graded_derivation(Derivation which, const NCPoly& p, const RewriteSystem& sys) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        int sign_parity = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            NCPoly dg = derivation_on_letter(which, w[k], sys);
            if (!dg.is_zero()) {
                NCPoly pre(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)), sign_parity % 2 ? -c : c);
                NCPoly post(Word(w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end()));
                out += pre * dg * post;
            }
            sign_parity += parity(w[k]);
        }
    }
    return sys.normal_form(out);
}

NCPoly q_symmetry_letter(Gen g) {
    switch (g.kind) {
        case Kind::X: return NCPoly(gen::xb(g.i)) * QRat::q_pow(-2 * g.i);
        case Kind::XBar: return NCPoly(gen::x(g.i));
        case Kind::Dx: return NCPoly(gen::Db(g.i)) * QRat::q_pow(2 * g.i);
        case Kind::DxBar: return NCPoly(gen::D(g.i));
        // the projective map is the one induced by z_a = x_0^-1 x_a; it carries
        // an extra q on z and zb (and 1/q on the derivatives) so that the
        // constant terms of the zb z and del z relations are preserved
        case Kind::Z: return NCPoly(gen::zb(g.i, g.copy)) * QRat::q_pow(1 - 2 * g.i);
        case Kind::ZBar: return NCPoly(gen::z(g.i, g.copy)) * QRat::q();
        case Kind::Del: return NCPoly(gen::delb(g.i)) * QRat::q_pow(2 * g.i - 1);
        case Kind::DelBar: return NCPoly(gen::del(g.i)) * QRat::q_pow(-1);
        default: throw UnsupportedGenerator("q-symmetry is not defined on " + to_string(g));
    }
}

NCPoly apply_q_symmetry(const NCPoly& p) {
    return p.map_coeffs([](const QRat& c) { return c.q_inverted(); }).substitute(q_symmetry_letter);
}

std::vector<NCPoly> rule_relations(const RewriteSystem& sys) {
    std::vector<NCPoly> out;
    for (const auto& r : sys.rules()) out.push_back(NCPoly::word({r.lhs_first, r.lhs_second}) - r.rhs);
    return out;
}

Report check_system_hygiene(const RewriteSystem& sys, bool with_star, bool with_q_symmetry) {
    Report rep(sys.name());
    const std::string p = sys.name() + ".";
    rep.run(p + "orientation", "every inversion pair has a rule", [&]() -> std::optional<std::string> {
        auto u = sys.ungoverned_inversions();
        if (u.empty()) return std::nullopt;
        return "ungoverned " + to_string(u.front().first) + " " + to_string(u.front().second) + " (" +
               std::to_string(u.size()) + " pairs)";
    });
    rep.run(p + "confluence", "overlaps resolve", [&]() -> std::optional<std::string> {
        auto f = local_confluence_failures(sys, 1);
        if (f.empty()) return std::nullopt;
        return "overlap " + to_string(f.front().overlap) + ": " + f.front().left_path.str() + " vs " +
               f.front().right_path.str();
    });
    if (with_star)
        rep.run(p + "star-closure", "(rel)* = 0", [&]() -> std::optional<std::string> {
            for (const auto& r : rule_relations(sys)) {
                NCPoly s = sys.normal_form(sys.star(r));
                if (!s.is_zero()) return "star of " + r.str() + " leaves " + s.str();
            }
            return std::nullopt;
        });
    if (with_q_symmetry)
        rep.run(p + "q-symmetry", "q -> 1/q, x_i -> q^{-2i} xb^i, xb^i -> x_i", [&]() -> std::optional<std::string> {
            for (const auto& r : rule_relations(sys)) {
                NCPoly s = sys.normal_form(apply_q_symmetry(r));
                if (!s.is_zero()) return "image of " + r.str() + " leaves " + s.str();
            }
            return std::nullopt;
        });
    return rep;
}

Report check_normal_form_properties(const RewriteSystem& sys, int samples, int max_len, std::uint64_t seed) {
    Report rep(sys.name());
    const std::string p = sys.name() + ".";
    std::mt19937_64 rng(seed);
    const auto letters = sys.alphabet();
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::uniform_int_distribution<int> len(0, max_len), nterms(1, 4), coef(-3, 3), qexp(-2, 2);
    auto scalar = [&]() -> QRat {
        int c = 0;
        while (c == 0) c = coef(rng);
        return QRat(c) * QRat::q_pow(qexp(rng));
    };
    auto random_poly = [&] {
        NCPoly out;
        for (int t = nterms(rng); t > 0; --t) {
            Word w;
            for (int k = len(rng); k > 0; --k) w.push_back(letters[pick(rng)]);
            out += NCPoly(w, scalar());
        }
        return out;
    };
    std::vector<NCPoly> a(static_cast<std::size_t>(samples)), b(a.size()), na(a.size()), nb(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        a[k] = random_poly();
        b[k] = random_poly();
        na[k] = sys.normal_form(a[k]);
        nb[k] = sys.normal_form(b[k]);
    }
    rep.run(p + "nf-idempotent", "NF(NF p) = NF p, NF p normal", [&]() -> std::optional<std::string> {
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (!(sys.normal_form(na[k]) == na[k])) return "NF not idempotent on " + a[k].str();
            for (const auto& [w, c] : na[k].terms())
                if (!sys.is_normal(w)) return "reducible word " + to_string(w) + " in NF of " + a[k].str();
        }
        return std::nullopt;
    });
    rep.run(p + "nf-linear", "NF(c p + d r) = c NF p + d NF r", [&]() -> std::optional<std::string> {
        for (std::size_t k = 0; k < a.size(); ++k) {
            const QRat c = scalar(), d = scalar();
            if (!(sys.normal_form(c * a[k] + d * b[k]) == c * na[k] + d * nb[k])) return "NF not linear on " + a[k].str() + ", " + b[k].str();
        }
        return std::nullopt;
    });
    return rep;
}

}  // namespace cpq
