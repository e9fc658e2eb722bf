#pragma once

// Polynomial expressions over F_{p^k}.
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := var | nat | 'g' ('^' nat)? | '(' expr ')'
//
// Variables are t1 t2 u x1 x2 y1 y2; g is the field generator.

#include <array>
#include <cctype>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pfrob/bipoly.hpp"
#include "pfrob/errors.hpp"
#include "pfrob/ffield.hpp"
#include "pfrob/pseries.hpp"

namespace pfrob {

enum class Var : unsigned { t1, t2, u, x1, x2, y1, y2 };
inline constexpr std::size_t kNumVars = 7;
inline constexpr std::array<std::string_view, kNumVars> kVarNames{"t1", "t2", "u", "x1", "x2", "y1", "y2"};

using VarSet = unsigned;
inline constexpr VarSet var_bit(Var v) { return 1u << static_cast<unsigned>(v); }
inline constexpr VarSet vars(std::initializer_list<Var> l) {
    VarSet s = 0;
    for (Var v : l) s |= var_bit(v);
    return s;
}
inline constexpr VarSet kAllVars = (1u << kNumVars) - 1;

inline constexpr u64 kMaxExponent = u64{1} << 31;

class ParseError : public Error {
  public:
    ParseError(Errc code, std::size_t pos, const std::string &msg)
        : Error(code, msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

struct Expr {
    enum class Kind { Sum, Product, Power, Variable, Scalar, Generator, Neg };
    Kind kind = Kind::Scalar;
    std::vector<Expr> children;
    std::vector<bool> negated; // Sum: per child
    Var var = Var::t1;
    u64 scalar = 0; // reduced mod p
    u64 exponent = 1;
};

namespace detail {

class ExprParser {
  public:
    ExprParser(std::string_view src, const FieldCtx &ctx, VarSet allowed) : s_(src), ctx_(ctx), allowed_(allowed) {}

    Expr parse() {
        Expr e = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(Errc::SyntaxError, i_, msg); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    Expr expr() {
        Expr sum;
        sum.kind = Expr::Kind::Sum;
        bool neg = accept('-');
        for (;;) {
            sum.children.push_back(term());
            sum.negated.push_back(neg);
            if (accept('+'))
                neg = false;
            else if (accept('-'))
                neg = true;
            else
                break;
        }
        if (sum.children.size() == 1 && !sum.negated[0]) return std::move(sum.children[0]);
        return sum;
    }

    Expr term() {
        Expr prod;
        prod.kind = Expr::Kind::Product;
        prod.children.push_back(factor());
        while (accept('*')) prod.children.push_back(factor());
        if (prod.children.size() == 1) return std::move(prod.children[0]);
        return prod;
    }

    Expr factor() {
        Expr a = atom();
        if (accept('^')) {
            Expr pw;
            pw.kind = Expr::Kind::Power;
            pw.exponent = exponent();
            pw.children.push_back(std::move(a));
            return pw;
        }
        return a;
    }

    u64 exponent() {
        skip();
        const std::size_t start = i_;
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected exponent");
        u64 v = 0;
        bool big = false;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + static_cast<u64>(s_[i_++] - '0');
            if (v > kMaxExponent) big = true, v = kMaxExponent + 1;
        }
        if (big) throw ParseError(Errc::ExponentTooLarge, start, "exponent exceeds 2^31");
        return v;
    }

    Expr atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            Expr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expr e;
            e.kind = Expr::Kind::Scalar;
            u64 v = 0;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                v = (v * 10 + static_cast<u64>(s_[i_++] - '0')) % ctx_.p();
            e.scalar = v;
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
            const std::string_view name = s_.substr(start, i_ - start);
            if (name == "g") {
                Expr e;
                e.kind = Expr::Kind::Generator;
                if (accept('^')) e.exponent = exponent();
                return e;
            }
            for (std::size_t v = 0; v < kNumVars; ++v) {
                if (kVarNames[v] != name) continue;
                if (!(allowed_ & (1u << v)))
                    throw ParseError(Errc::UnknownVariable, start, "variable '" + std::string(name) + "' not allowed");
                Expr e;
                e.kind = Expr::Kind::Variable;
                e.var = static_cast<Var>(v);
                return e;
            }
            throw ParseError(Errc::UnknownVariable, start, "unknown variable '" + std::string(name) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t i_ = 0;
    const FieldCtx &ctx_;
    VarSet allowed_;
};

} // namespace detail

inline Expr parse_expr(std::string_view src, const FieldCtx &ctx, VarSet allowed = kAllVars) {
    return detail::ExprParser(src, ctx, allowed).parse();
}

/// Sparse polynomial in the seven parser variables.
class MPoly {
  public:
    using Exps = std::array<u64, kNumVars>;

    explicit MPoly(const FieldCtx &ctx, std::size_t prec = kExact) : ctx_(&ctx), prec_(prec) {}

    static constexpr std::size_t kTermCap = 2'000'000;

    const FieldCtx &ctx() const { return *ctx_; }
    std::size_t precision() const { return prec_; }
    const std::map<Exps, Fq> &terms() const { return terms_; }

    void add_term(const Exps &e, const Fq &c) {
        if (c.is_zero()) return;
        if (prec_ != kExact) {
            u64 deg = 0;
            for (u64 x : e) deg += x;
            if (deg >= prec_) return;
        }
        auto [it, ins] = terms_.try_emplace(e, c);
        if (!ins) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        if (terms_.size() > kTermCap) throw Error(Errc::Overflow, "expansion exceeds the term cap");
    }

    VarSet used_vars() const {
        VarSet s = 0;
        for (const auto &[e, c] : terms_)
            for (std::size_t v = 0; v < kNumVars; ++v)
                if (e[v]) s |= 1u << v;
        return s;
    }

    friend MPoly operator+(const MPoly &a, const MPoly &b) {
        MPoly r = a;
        for (const auto &[e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator*(const MPoly &a, const MPoly &b) {
        MPoly r(*a.ctx_, std::min(a.prec_, b.prec_));
        for (const auto &[ea, ca] : a.terms_)
            for (const auto &[eb, cb] : b.terms_) {
                Exps e{};
                for (std::size_t v = 0; v < kNumVars; ++v) {
                    e[v] = ea[v] + eb[v];
                    if (e[v] < ea[v] || e[v] > (u64{1} << 62)) throw Error(Errc::Overflow, "exponent overflow");
                }
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly negated() const {
        MPoly r(*ctx_, prec_);
        for (const auto &[e, c] : terms_) r.add_term(e, -c);
        return r;
    }
    /// P^{p^r}: coefficients to the p^r-th power, exponents times p^r.
    MPoly frobenius_power(u64 r) const {
        const u64 f = detail::checked_pow(ctx_->p(), r, u64{1} << 62);
        MPoly out(*ctx_, prec_);
        for (const auto &[e, c] : terms_) {
            Exps x{};
            for (std::size_t v = 0; v < kNumVars; ++v) {
                if (e[v] && (f == 0 || e[v] > (u64{1} << 62) / f)) throw Error(Errc::Overflow, "exponent overflow");
                x[v] = e[v] * f;
            }
            out.add_term(x, c.frobenius(r));
        }
        return out;
    }
    MPoly pow(u64 e) const {
        MPoly result(*ctx_, prec_);
        result.add_term(Exps{}, ctx_->one());
        u64 r = 0;
        while (e) {
            const u64 digit = e % ctx_->p();
            e /= ctx_->p();
            if (digit) {
                MPoly base = frobenius_power(r), acc(*ctx_, prec_);
                acc.add_term(Exps{}, ctx_->one());
                for (u64 d = digit; d;) {
                    if (d & 1) acc = acc * base;
                    d >>= 1;
                    if (d) base = base * base;
                }
                result = result * acc;
            }
            ++r;
        }
        return result;
    }

    friend bool operator==(const MPoly &a, const MPoly &b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

  private:
    const FieldCtx *ctx_;
    std::size_t prec_;
    std::map<Exps, Fq> terms_;
};

/// Expands the expression; with a finite precision, terms of total degree
/// >= prec are dropped as they appear.
inline MPoly expand(const Expr &e, const FieldCtx &ctx, std::size_t prec = kExact) {
    MPoly r(ctx, prec);
    switch (e.kind) {
    case Expr::Kind::Scalar:
        r.add_term({}, ctx.elem(e.scalar));
        return r;
    case Expr::Kind::Generator:
        r.add_term({}, ctx.generator().pow(e.exponent));
        return r;
    case Expr::Kind::Variable: {
        MPoly::Exps x{};
        x[static_cast<std::size_t>(e.var)] = 1;
        r.add_term(x, ctx.one());
        return r;
    }
    case Expr::Kind::Neg:
        return expand(e.children[0], ctx, prec).negated();
    case Expr::Kind::Sum:
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            MPoly c = expand(e.children[i], ctx, prec);
            r = r + (e.negated[i] ? c.negated() : c);
        }
        return r;
    case Expr::Kind::Product:
        r.add_term({}, ctx.one());
        for (const auto &c : e.children) r = r * expand(c, ctx, prec);
        return r;
    case Expr::Kind::Power:
        return expand(e.children[0], ctx, prec).pow(e.exponent);
    }
    return r;
}

namespace detail {

inline void require_vars(const MPoly &p, VarSet allowed, const char *target) {
    const VarSet extra = p.used_vars() & ~allowed;
    if (!extra) return;
    std::string names;
    for (std::size_t v = 0; v < kNumVars; ++v)
        if (extra & (1u << v)) names += (names.empty() ? "" : ", ") + std::string(kVarNames[v]);
    throw Error(Errc::VariableArityMismatch, std::string(target) + " cannot hold variable(s) " + names);
}

} // namespace detail

inline TruncSeries2 to_series2(const MPoly &p, std::size_t prec = kExact) {
    detail::require_vars(p, vars({Var::t1, Var::t2}), "two-variable series");
    TruncSeries2 r(p.ctx(), std::min(prec, p.precision()));
    for (const auto &[e, c] : p.terms()) r.add_term(e[0], e[1], c);
    return r;
}

inline TruncSeries1 to_series1(const MPoly &p, std::size_t prec = kExact, Var v = Var::u) {
    detail::require_vars(p, var_bit(v), "one-variable series");
    std::vector<Fq> c;
    const std::size_t lim = std::min(prec, p.precision());
    for (const auto &[e, x] : p.terms()) {
        const u64 d = e[static_cast<std::size_t>(v)];
        if (lim != kExact && d >= lim) continue;
        if (c.size() <= d) c.resize(d + 1, p.ctx().zero());
        c[d] = x;
    }
    return TruncSeries1(p.ctx(), std::move(c), lim);
}

inline UniPoly to_unipoly(const MPoly &p, Var v) { return to_series1(p, kExact, v).to_poly(); }

inline BiPoly to_bipoly(const MPoly &p) {
    detail::require_vars(p, vars({Var::x1, Var::x2}), "curve equation");
    BiPoly r(p.ctx());
    for (const auto &[e, c] : p.terms()) r.add_term(e[3], e[4], c);
    return r;
}

inline TruncSeries2 parse_series2(std::string_view src, const FieldCtx &ctx, std::size_t prec = kExact) {
    return to_series2(expand(parse_expr(src, ctx), ctx, prec), prec);
}
inline TruncSeries1 parse_series1(std::string_view src, const FieldCtx &ctx, std::size_t prec = kExact) {
    return to_series1(expand(parse_expr(src, ctx), ctx, prec), prec);
}
inline BiPoly parse_bipoly(std::string_view src, const FieldCtx &ctx) { return to_bipoly(expand(parse_expr(src, ctx), ctx)); }

// ---- printing

/// Field element as an integer (prime field) or a polynomial in g.
inline std::string format_element(const Fq &a) {
    const FieldCtx &ctx = a.ctx();
    if (a.index() < ctx.p()) return std::to_string(a.index());
    const auto c = a.coords();
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (!c[i]) continue;
        if (!out.empty()) out += " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? "g" : "g^" + std::to_string(i));
        if (mono.empty())
            out += std::to_string(c[i]);
        else
            out += c[i] == 1 ? mono : std::to_string(c[i]) + "*" + mono;
    }
    return "(" + out + ")";
}

inline std::string to_string(const MPoly &p) {
    if (p.terms().empty()) return "0";
    std::vector<std::pair<MPoly::Exps, Fq>> t(p.terms().begin(), p.terms().end());
    std::stable_sort(t.begin(), t.end(), [](const auto &a, const auto &b) {
        u64 da = 0, db = 0;
        for (u64 x : a.first) da += x;
        for (u64 x : b.first) db += x;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    for (const auto &[e, c] : t) {
        std::string mono;
        for (std::size_t v = 0; v < kNumVars; ++v) {
            if (!e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += kVarNames[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        std::string term;
        if (mono.empty())
            term = format_element(c);
        else if (c.is_one())
            term = mono;
        else
            term = format_element(c) + "*" + mono;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

inline MPoly to_mpoly(const TruncSeries2 &s) {
    MPoly r(s.ctx());
    for (const auto &[k, c] : s.terms()) {
        MPoly::Exps e{};
        e[0] = k.first, e[1] = k.second;
        r.add_term(e, c);
    }
    return r;
}
inline MPoly to_mpoly(const TruncSeries1 &s, Var v = Var::u) {
    MPoly r(s.ctx());
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
        MPoly::Exps e{};
        e[static_cast<std::size_t>(v)] = i;
        r.add_term(e, s.coeffs()[i]);
    }
    return r;
}
inline MPoly to_mpoly(const BiPoly &f) {
    MPoly r(f.ctx());
    for (const auto &[k, c] : f.terms()) {
        MPoly::Exps e{};
        e[3] = k.first, e[4] = k.second;
        r.add_term(e, c);
    }
    return r;
}

inline std::string to_string(const TruncSeries2 &s) { return to_string(to_mpoly(s)); }
inline std::string to_string(const TruncSeries1 &s, Var v = Var::u) { return to_string(to_mpoly(s, v)); }
inline std::string to_string(const BiPoly &f) { return to_string(to_mpoly(f)); }

} // namespace pfrob
