#include "cpq/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "cpq/errors.hpp"

namespace cpq {

namespace {

bool scalar(const NCPoly& p) { return p.is_zero() || (p.size() == 1 && p.terms().begin()->first.empty()); }

class Parser {
public:
    Parser(const std::string& s, const ParseContext& c) : s_(s), ctx_(c) {}

    NCPoly run() {
        NCPoly p = expr();
        skip();
        if (pos_ != s_.size()) throw SyntaxError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return p;
    }

private:
    const std::string& s_;
    ParseContext ctx_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void need(char c) {
        if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
    bool digit_next() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError("expected an integer", pos_);
        if (pos_ - start > 9) throw SyntaxError("integer too long", start);
        return std::stol(s_.substr(start, pos_ - start));
    }

    NCPoly expr() {
        NCPoly p = term();
        for (;;) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }

    NCPoly term() {
        NCPoly p = unary();
        for (;;) {
            if (eat('*')) {
                p = p * unary();
            } else if (skip(), pos_ < s_.size() && s_[pos_] == '/') {
                const std::size_t at = pos_++;
                NCPoly d = unary();
                if (!scalar(d)) throw SyntaxError("division by a non-scalar", at);
                if (d.is_zero()) throw SyntaxError("division by zero", at);
                p = p * d.constant_term().inv();
            } else {
                return p;
            }
        }
    }

    NCPoly unary() {
        if (eat('-')) return -unary();
        return power();
    }

    NCPoly power() {
        std::optional<Gen> letter;
        NCPoly base = atom(letter);
        if (!eat('^')) return base;
        const std::size_t at = pos_;
        const bool neg = eat('-');
        const int k = static_cast<int>(integer());
        if (!neg) return base.pow(k);
        if (scalar(base)) {
            if (base.is_zero()) throw SyntaxError("zero to a negative power", at);
            return NCPoly(base.constant_term().inv()).pow(k);
        }
        if (!letter) throw SyntaxError("negative power of a compound expression", at);
        return NCPoly(invert(*letter, at)).pow(k);
    }

    Gen invert(Gen g, std::size_t at) {
        switch (g.kind) {
            case Kind::X:
                if (g.i == 0) return Gen{Kind::X0Inv, 0, 0, g.copy};
                break;
            case Kind::XBar:
                if (g.i == 0) return Gen{Kind::XBar0Inv, 0, 0, g.copy};
                break;
            case Kind::L: return gen::Linv();
            case Kind::LHalf: return gen::Lhalfinv();
            case Kind::Rho: return gen::rhoinv(g.i);
            case Kind::Aux: return gen::auxinv(g.i);
            default: break;
        }
        throw SyntaxError(to_string(g) + " has no inverse", at);
    }

    void range(const std::string& name, long v, long lo, long hi) {
        if (ctx_.N < 0) return;
        if (v < lo || v > hi)
            throw IndexOutOfRange(name + " index " + std::to_string(v) + " outside " + std::to_string(lo) + ".." +
                                  std::to_string(hi));
    }

    NCPoly atom(std::optional<Gen>& letter) {
        skip();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        if (eat('(')) {
            NCPoly p = expr();
            need(')');
            return p;
        }
        if (digit_next()) return NCPoly(integer());
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        if (name.empty()) throw SyntaxError("unexpected '" + std::string(1, s_[start]) + "'", start);
        if (name == "q") return NCPoly(QRat::q());
        if (name == "lambda") return NCPoly(lambda_const());

        std::vector<long> idx;
        long copy = 0;
        if (eat('[')) {
            for (;;) {
                skip();
                if (pos_ < s_.size() && s_[pos_] == 'A') {
                    ++pos_;
                    need('=');
                    const std::size_t at = pos_;
                    copy = integer();
                    if (copy < 1 || copy > 255) throw SyntaxError("copy label out of range", at);
                    if (ctx_.copies >= 0 && copy > ctx_.copies)
                        throw IndexOutOfRange("copy " + std::to_string(copy) + " beyond " + std::to_string(ctx_.copies));
                    need(']');
                    break;
                }
                idx.push_back(integer());
                if (idx.back() > 255) throw SyntaxError("index too large", pos_);
                if (eat(']')) break;
                need(',');
            }
        }
        auto arity = [&](std::size_t k) {
            if (idx.size() != k)
                throw SyntaxError(name + " takes " + std::to_string(k) + " index" + (k == 1 ? "" : "es"), start);
        };
        auto no_copy = [&] {
            if (copy != 0) throw SyntaxError(name + " takes no copy label", start);
        };
        const int N = ctx_.N;
        auto u8 = [](long v) { return static_cast<std::uint8_t>(v); };
        Gen g;
        if (name == "x" || name == "xb") {
            arity(1);
            range(name, idx[0], 0, N);
            g = Gen{name == "x" ? Kind::X : Kind::XBar, u8(idx[0]), 0, u8(copy)};
        } else if (name == "z" || name == "zb" || name == "dz" || name == "dzb") {
            arity(1);
            range(name, idx[0], 1, N);
            const Kind k = name == "z" ? Kind::Z : name == "zb" ? Kind::ZBar : name == "dz" ? Kind::Dz : Kind::DzBar;
            g = Gen{k, u8(idx[0]), 0, u8(copy)};
        } else if (name == "xi" || name == "xib" || name == "D" || name == "Db") {
            arity(1);
            no_copy();
            range(name, idx[0], 0, N);
            const Kind k = name == "xi" ? Kind::Xi : name == "xib" ? Kind::XiBar : name == "D" ? Kind::Dx : Kind::DxBar;
            g = Gen{k, u8(idx[0])};
        } else if (name == "del" || name == "delb") {
            arity(1);
            no_copy();
            range(name, idx[0], 1, N);
            g = name == "del" ? gen::del(static_cast<int>(idx[0])) : gen::delb(static_cast<int>(idx[0]));
        } else if (name == "rho") {
            no_copy();
            if (idx.empty()) {
                if (N < 1) throw PreconditionViolated("bare rho needs N");
                idx.push_back(N);
            }
            arity(1);
            range(name, idx[0], 1, N);
            g = gen::rho(static_cast<int>(idx[0]));
        } else if (name == "T" || name == "Tinv") {
            arity(2);
            no_copy();
            range(name, idx[0], 0, N);
            range(name, idx[1], 0, N);
            g = Gen{name == "T" ? Kind::T : Kind::TInv, u8(idx[0]), u8(idx[1])};
        } else if (name == "w") {
            arity(1);
            no_copy();
            g = gen::aux(static_cast<int>(idx[0]));
        } else if (name == "L" || name == "Lh") {
            arity(0);
            no_copy();
            g = name == "L" ? gen::L() : gen::Lhalf();
        } else {
            throw UnknownGenerator("unknown generator '" + name + "' at position " + std::to_string(start));
        }
        letter = g;
        return NCPoly(g);
    }
};

}  // namespace

NCPoly parse_expr(const std::string& src, const ParseContext& ctx) { return Parser(src, ctx).run(); }

}  // namespace cpq
