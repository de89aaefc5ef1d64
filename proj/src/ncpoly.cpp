#include "cpq/ncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "cpq/errors.hpp"

namespace cpq {

int parity(Gen g) {
    switch (g.kind) {
        case Kind::Xi:
        case Kind::XiBar:
        case Kind::Dz:
        case Kind::DzBar:
            return 1;
        default:
            return 0;
    }
}

bool is_inverse_kind(Kind k) {
    switch (k) {
        case Kind::X0Inv:
        case Kind::XBar0Inv:
        case Kind::LInv:
        case Kind::LHalfInv:
        case Kind::RhoInv:
        case Kind::TInv:
        case Kind::AuxInv:
            return true;
        default:
            return false;
    }
}

Kind inverse_kind(Kind k) {
    switch (k) {
        case Kind::L: return Kind::LInv;
        case Kind::LInv: return Kind::L;
        case Kind::LHalf: return Kind::LHalfInv;
        case Kind::LHalfInv: return Kind::LHalf;
        case Kind::Rho: return Kind::RhoInv;
        case Kind::RhoInv: return Kind::Rho;
        case Kind::Aux: return Kind::AuxInv;
        case Kind::AuxInv: return Kind::Aux;
        case Kind::X0Inv: return Kind::X;
        case Kind::XBar0Inv: return Kind::XBar;
        default:
            throw UnsupportedGenerator("generator kind has no formal inverse");
    }
}

namespace {

std::string idx1(const char* name, int i) { return std::string(name) + "[" + std::to_string(i) + "]"; }

std::string idx_copy(const char* name, const Gen& g) {
    std::string s = std::string(name) + "[" + std::to_string(g.i);
    if (g.copy != 0) s += ",A=" + std::to_string(g.copy);
    return s + "]";
}

}  // namespace

std::string to_string(Gen g) {
    switch (g.kind) {
        case Kind::X: return idx_copy("x", g);
        case Kind::XBar: return idx_copy("xb", g);
        case Kind::Xi: return idx1("xi", g.i);
        case Kind::XiBar: return idx1("xib", g.i);
        case Kind::Dx: return idx1("D", g.i);
        case Kind::DxBar: return idx1("Db", g.i);
        case Kind::X0Inv: return idx_copy("x", g) + "^-1";
        case Kind::XBar0Inv: return idx_copy("xb", g) + "^-1";
        case Kind::L: return "L";
        case Kind::LInv: return "L^-1";
        case Kind::LHalf: return "Lh";
        case Kind::LHalfInv: return "Lh^-1";
        case Kind::Z: return idx_copy("z", g);
        case Kind::ZBar: return idx_copy("zb", g);
        case Kind::Dz: return idx_copy("dz", g);
        case Kind::DzBar: return idx_copy("dzb", g);
        case Kind::Del: return idx1("del", g.i);
        case Kind::DelBar: return idx1("delb", g.i);
        case Kind::Rho: return idx1("rho", g.i);
        case Kind::RhoInv: return idx1("rho", g.i) + "^-1";
        case Kind::T: return "T[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
        case Kind::TInv: return "Tinv[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
        case Kind::Aux: return idx1("w", g.i);
        case Kind::AuxInv: return idx1("w", g.i) + "^-1";
    }
    return "?";
}

int parity(const Word& w) {
    int p = 0;
    for (auto g : w) p += parity(g);
    return p;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += "*";
        s += to_string(w[k]);
    }
    return s;
}

bool WordLess::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].code() != b[k].code()) return a[k].code() < b[k].code();
    return false;
}

// ---------------------------------------------------------------- NCPoly

NCPoly::NCPoly(long c) {
    if (c != 0) terms_.emplace(Word{}, QRat(c));
}

NCPoly::NCPoly(const QRat& c) {
    if (!c.is_zero()) terms_.emplace(Word{}, c);
}

NCPoly::NCPoly(Gen g) { terms_.emplace(Word{g}, QRat(1)); }

NCPoly::NCPoly(const Word& w, const QRat& c) {
    if (!c.is_zero()) terms_.emplace(w, c);
}

QRat NCPoly::constant_term() const { return coeff(Word{}); }

QRat NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QRat() : it->second;
}

void NCPoly::add_term(const Word& w, const QRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const QRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

NCPoly NCPoly::pow(int k) const {
    NCPoly r = 1;
    for (int n = 0; n < k; ++n) r = r * *this;
    return r;
}

NCPoly NCPoly::map_coeffs(const std::function<QRat(const QRat&)>& f) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.add_term(w, f(c));
    return r;
}

NCPoly NCPoly::substitute(const std::function<NCPoly(Gen)>& f) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
        NCPoly t = c;
        for (auto g : w) t = t * f(g);
        r += t;
    }
    return r;
}

int NCPoly::max_parity() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, parity(w));
    return m;
}

bool NCPoly::is_homogeneous_form() const {
    int p = -1;
    for (const auto& [w, c] : terms_) {
        if (p < 0) p = parity(w);
        else if (p != parity(w)) return false;
    }
    return true;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string t;
        const bool neg = !c.needs_parens() && c.num().lead() < 0;
        QRat a = neg ? -c : c;
        if (w.empty()) {
            t = a.needs_parens() ? "(" + a.str() + ")" : a.str();
        } else if (a.is_one()) {
            t = to_string(w);
        } else {
            t = (a.needs_parens() ? "(" + a.str() + ")" : a.str()) + "*" + to_string(w);
        }
        if (first) out = (neg ? "-" : "") + t;
        else out += (neg ? " - " : " + ") + t;
        first = false;
    }
    return out;
}

NCPoly graded_commutator(const NCPoly& a, const NCPoly& b) {
    const int s = (a.max_parity() * b.max_parity()) % 2 == 1 ? -1 : 1;
    return a * b - QRat(s) * (b * a);
}

}  // namespace cpq
