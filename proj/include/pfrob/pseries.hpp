#pragma once

// Truncated power series over F_q in one variable u and two variables t1, t2.
//
// Precision is always explicit: a series with precision N knows every
// coefficient of degree < N (total degree for two variables). kExact marks a
// polynomial whose stored coefficients are the whole series.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfrob/errors.hpp"
#include "pfrob/ffield.hpp"

namespace pfrob {

inline constexpr std::size_t kExact = std::numeric_limits<std::size_t>::max();

inline std::size_t sat_add(std::size_t a, std::size_t b) {
    if (a == kExact || b == kExact || a > kExact - b) return kExact;
    return a + b;
}

inline std::size_t sat_mul(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) return 0;
    if (a == kExact || b == kExact || a > kExact / b) return kExact;
    return a * b;
}

enum class Axis { One = 1, Two = 2 };

inline Axis axis_from_int(int a) {
    if (a == 1) return Axis::One;
    if (a == 2) return Axis::Two;
    throw Error(Errc::InvalidArgument, "axis must be 1 or 2");
}

inline Axis other_axis(Axis a) { return a == Axis::One ? Axis::Two : Axis::One; }

/// Result of a valuation query: an exact value, or "at least bound" when the
/// series vanishes below its precision. A bound of kExact means identically 0.
class Valuation {
  public:
    static Valuation finite(std::size_t v) { return Valuation(true, v); }
    static Valuation at_least(std::size_t bound) { return Valuation(false, bound); }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_ && v_ == kExact; }
    bool is_indeterminate() const { return !finite_ && v_ != kExact; }
    std::size_t value() const {
        if (!finite_) throw Error(Errc::PrecisionUnderflow, "valuation is indeterminate at precision " + bound_str());
        return v_;
    }
    /// Exact value or the precision it is known to reach.
    std::size_t lower_bound() const { return v_; }

    friend bool operator==(const Valuation &a, const Valuation &b) { return a.finite_ == b.finite_ && a.v_ == b.v_; }

  private:
    Valuation(bool f, std::size_t v) : finite_(f), v_(v) {}
    std::string bound_str() const { return v_ == kExact ? "inf" : std::to_string(v_); }

    bool finite_;
    std::size_t v_;
};

class TruncSeries1 {
  public:
    explicit TruncSeries1(const FieldCtx &ctx, std::size_t prec = kExact) : ctx_(&ctx), prec_(prec) {}
    TruncSeries1(const FieldCtx &ctx, std::vector<Fq> coeffs, std::size_t prec) : ctx_(&ctx), prec_(prec), c_(std::move(coeffs)) {
        normalize();
    }

    static TruncSeries1 variable(const FieldCtx &ctx, std::size_t prec = kExact) {
        return TruncSeries1(ctx, {ctx.zero(), ctx.one()}, prec);
    }
    static TruncSeries1 constant(const Fq &c, std::size_t prec = kExact) { return TruncSeries1(c.ctx(), {c}, prec); }
    static TruncSeries1 from_poly(const UniPoly &f, std::size_t prec = kExact) {
        return TruncSeries1(f.ctx(), f.coeffs(), prec);
    }

    const FieldCtx &ctx() const { return *ctx_; }
    std::size_t precision() const { return prec_; }
    bool is_exact() const { return prec_ == kExact; }
    const std::vector<Fq> &coeffs() const { return c_; }
    /// Number of stored coefficients (trailing zeros dropped).
    std::size_t size() const { return c_.size(); }

    Fq coeff(std::size_t i) const {
        if (i >= prec_) throw Error(Errc::PrecisionUnderflow, "coefficient beyond precision");
        return i < c_.size() ? c_[i] : ctx_->zero();
    }

    Valuation valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return Valuation::finite(i);
        return Valuation::at_least(prec_);
    }

    TruncSeries1 truncated(std::size_t n) const {
        if (n >= prec_) return *this;
        std::vector<Fq> v(c_.begin(), c_.begin() + static_cast<long>(std::min(n, c_.size())));
        return TruncSeries1(*ctx_, std::move(v), n);
    }

    TruncSeries1 scaled(const Fq &s) const {
        std::vector<Fq> v(c_);
        for (auto &c : v) c = c * s;
        return TruncSeries1(*ctx_, std::move(v), prec_);
    }

    friend TruncSeries1 operator+(const TruncSeries1 &a, const TruncSeries1 &b) { return a.combine(b, false); }
    friend TruncSeries1 operator-(const TruncSeries1 &a, const TruncSeries1 &b) { return a.combine(b, true); }
    friend TruncSeries1 operator*(const TruncSeries1 &a, const TruncSeries1 &b) { return mul(a, b, kExact); }

    /// Product truncated at `limit`. The precision of a product of series with
    /// precisions Pa, Pb and valuations va, vb is min(Pa + vb, Pb + va).
    static TruncSeries1 mul(const TruncSeries1 &a, const TruncSeries1 &b, std::size_t limit) {
        if (a.ctx_ != b.ctx_) throw Error(Errc::FieldMismatch, "series over different fields");
        const std::size_t va = a.valuation().lower_bound(), vb = b.valuation().lower_bound();
        std::size_t prec = std::min({sat_add(a.prec_, vb), sat_add(b.prec_, va), limit});
        if (a.c_.empty() || b.c_.empty()) return TruncSeries1(*a.ctx_, prec);
        std::size_t len = a.c_.size() + b.c_.size() - 1;
        if (prec != kExact) len = std::min(len, prec);
        const FieldCtx &ctx = *a.ctx_;
        std::vector<u64> acc(len, 0);
        const bool a_sparser = a.nnz() <= b.nnz();
        const auto &s = a_sparser ? a.c_ : b.c_;
        const auto &d = a_sparser ? b.c_ : a.c_;
        for (std::size_t i = 0; i < s.size() && i < len; ++i) {
            const u64 si = s[i].index();
            if (!si) continue;
            const std::size_t jmax = std::min(d.size(), len - i);
            for (std::size_t j = 0; j < jmax; ++j) {
                const u64 dj = d[j].index();
                if (dj) acc[i + j] = ctx.add(acc[i + j], ctx.mul(si, dj));
            }
        }
        std::vector<Fq> v;
        v.reserve(len);
        for (u64 x : acc) v.emplace_back(ctx, x);
        return TruncSeries1(ctx, std::move(v), prec);
    }

    /// s^{p^r}: in characteristic p this only spreads and Frobenius-twists the
    /// coefficients, and multiplies the precision by p^r.
    TruncSeries1 frobenius_power(u64 r, std::size_t limit = kExact) const {
        const u64 e = detail::checked_pow(ctx_->p(), r, u64{1} << 40);
        if (e == 0) throw Error(Errc::Overflow, "p^r too large");
        std::size_t prec = std::min(sat_mul(prec_, static_cast<std::size_t>(e)), limit);
        std::vector<Fq> v;
        if (!c_.empty()) {
            std::size_t len = sat_add(sat_mul(c_.size() - 1, static_cast<std::size_t>(e)), 1);
            if (prec != kExact) len = std::min(len, prec);
            v.assign(len, ctx_->zero());
            for (std::size_t i = 0; i < c_.size(); ++i) {
                const std::size_t pos = i * static_cast<std::size_t>(e);
                if (pos >= len) break;
                v[pos] = c_[i].frobenius(r);
            }
        }
        return TruncSeries1(*ctx_, std::move(v), prec);
    }

    /// s^e truncated at `limit`, using base-p digits of e and frobenius_power.
    TruncSeries1 pow(u64 e, std::size_t limit = kExact) const {
        TruncSeries1 result = TruncSeries1::constant(ctx_->one()).truncated(limit);
        const u64 p = ctx_->p();
        u64 r = 0;
        while (e) {
            const u64 digit = e % p;
            e /= p;
            if (digit) {
                TruncSeries1 base = frobenius_power(r, limit);
                u64 d = digit;
                TruncSeries1 acc = TruncSeries1::constant(ctx_->one()).truncated(limit);
                while (d) {
                    if (d & 1) acc = mul(acc, base, limit);
                    d >>= 1;
                    if (d) base = mul(base, base, limit);
                }
                result = mul(result, acc, limit);
            }
            ++r;
        }
        return result;
    }

    /// Multiplicative inverse of a unit, computed to min(precision, limit).
    TruncSeries1 inverse(std::size_t limit) const {
        if (c_.empty() || c_[0].is_zero()) throw Error(Errc::InvalidArgument, "series is not a unit");
        const std::size_t prec = std::min(prec_, limit);
        if (prec == kExact) throw Error(Errc::InvalidArgument, "inverse needs a finite precision");
        const Fq a0i = c_[0].inv();
        std::vector<Fq> b(prec, ctx_->zero());
        b[0] = a0i;
        for (std::size_t n = 1; n < prec; ++n) {
            Fq s = ctx_->zero();
            for (std::size_t i = 1; i <= n && i < c_.size(); ++i)
                if (!c_[i].is_zero()) s = s + c_[i] * b[n - i];
            b[n] = -(s * a0i);
        }
        return TruncSeries1(*ctx_, std::move(b), prec);
    }

    /// Evaluation of an exact series (a polynomial) at a field element.
    Fq evaluate(const Fq &x) const {
        if (!is_exact()) throw Error(Errc::PrecisionUnderflow, "cannot evaluate a truncated series");
        Fq acc = ctx_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly to_poly() const { return UniPoly(*ctx_, c_); }

    friend bool operator==(const TruncSeries1 &a, const TruncSeries1 &b) {
        return a.ctx_ == b.ctx_ && a.prec_ == b.prec_ && a.c_ == b.c_;
    }

  private:
    TruncSeries1 combine(const TruncSeries1 &b, bool subtract) const {
        if (ctx_ != b.ctx_) throw Error(Errc::FieldMismatch, "series over different fields");
        const std::size_t prec = std::min(prec_, b.prec_);
        std::size_t len = std::max(c_.size(), b.c_.size());
        if (prec != kExact) len = std::min(len, prec);
        std::vector<Fq> v(len, ctx_->zero());
        for (std::size_t i = 0; i < len; ++i) {
            const Fq x = i < c_.size() ? c_[i] : ctx_->zero();
            const Fq y = i < b.c_.size() ? b.c_[i] : ctx_->zero();
            v[i] = subtract ? x - y : x + y;
        }
        return TruncSeries1(*ctx_, std::move(v), prec);
    }

    std::size_t nnz() const {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Fq &c) { return !c.is_zero(); }));
    }

    void normalize() {
        if (prec_ != kExact && c_.size() > prec_) c_.resize(prec_);
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        for (auto &c : c_)
            if (!c.ctx_ptr()) c = ctx_->zero();
    }

    const FieldCtx *ctx_;
    std::size_t prec_;
    std::vector<Fq> c_;
};

inline Valuation valuation(const TruncSeries1 &s) { return s.valuation(); }

/// Sparse series in t1, t2 truncated at total degree.
class TruncSeries2 {
  public:
    using Key = std::pair<u64, u64>;

    explicit TruncSeries2(const FieldCtx &ctx, std::size_t prec = kExact) : ctx_(&ctx), prec_(prec) {}

    static TruncSeries2 t1(const FieldCtx &ctx) {
        TruncSeries2 s(ctx);
        s.add_term(1, 0, ctx.one());
        return s;
    }
    static TruncSeries2 t2(const FieldCtx &ctx) {
        TruncSeries2 s(ctx);
        s.add_term(0, 1, ctx.one());
        return s;
    }
    static TruncSeries2 constant(const Fq &c) {
        TruncSeries2 s(c.ctx());
        s.add_term(0, 0, c);
        return s;
    }

    const FieldCtx &ctx() const { return *ctx_; }
    std::size_t precision() const { return prec_; }
    bool is_exact() const { return prec_ == kExact; }
    const std::map<Key, Fq> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c*t1^i*t2^j; terms at or beyond the precision are dropped.
    void add_term(u64 i, u64 j, const Fq &c) {
        if (c.is_zero()) return;
        if (prec_ != kExact && sat_add(i, j) >= prec_) return;
        auto [it, inserted] = terms_.try_emplace({i, j}, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Fq coeff(u64 i, u64 j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? ctx_->zero() : it->second;
    }
    Fq constant_term() const { return coeff(0, 0); }

    u64 total_degree() const {
        u64 d = 0;
        for (const auto &[k, c] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }
    u64 degree_in(Axis a) const {
        u64 d = 0;
        for (const auto &[k, c] : terms_) d = std::max(d, a == Axis::One ? k.first : k.second);
        return d;
    }
    /// Lowest total degree of a nonzero term.
    std::optional<u64> order() const {
        std::optional<u64> best;
        for (const auto &[k, c] : terms_)
            if (!best || k.first + k.second < *best) best = k.first + k.second;
        return best;
    }

    TruncSeries2 truncated(std::size_t n) const {
        TruncSeries2 r(*ctx_, std::min(prec_, n));
        for (const auto &[k, c] : terms_) r.add_term(k.first, k.second, c);
        return r;
    }

    TruncSeries2 scaled(const Fq &s) const {
        TruncSeries2 r(*ctx_, prec_);
        for (const auto &[k, c] : terms_) r.add_term(k.first, k.second, c * s);
        return r;
    }

    friend TruncSeries2 operator+(const TruncSeries2 &a, const TruncSeries2 &b) {
        check_same(a, b);
        TruncSeries2 r(*a.ctx_, std::min(a.prec_, b.prec_));
        for (const auto &[k, c] : a.terms_) r.add_term(k.first, k.second, c);
        for (const auto &[k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend TruncSeries2 operator-(const TruncSeries2 &a, const TruncSeries2 &b) {
        check_same(a, b);
        TruncSeries2 r(*a.ctx_, std::min(a.prec_, b.prec_));
        for (const auto &[k, c] : a.terms_) r.add_term(k.first, k.second, c);
        for (const auto &[k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    /// Products keep the smaller precision.
    friend TruncSeries2 operator*(const TruncSeries2 &a, const TruncSeries2 &b) {
        check_same(a, b);
        TruncSeries2 r(*a.ctx_, std::min(a.prec_, b.prec_));
        for (const auto &[ka, ca] : a.terms_)
            for (const auto &[kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    friend bool operator==(const TruncSeries2 &a, const TruncSeries2 &b) {
        return a.ctx_ == b.ctx_ && a.prec_ == b.prec_ && a.terms_ == b.terms_;
    }

    TruncSeries2 pow(u64 e) const {
        TruncSeries2 r = constant(ctx_->one()).truncated(prec_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    /// f(0, t2) as a series in t2.
    TruncSeries1 restrict_t1_zero() const { return restrict_axis(Axis::One); }
    /// f(t1, 0) as a series in t1.
    TruncSeries1 restrict_t2_zero() const { return restrict_axis(Axis::Two); }

    TruncSeries2 partial(Axis a) const {
        const std::size_t prec = prec_ == kExact ? kExact : (prec_ == 0 ? 0 : prec_ - 1);
        TruncSeries2 r(*ctx_, prec);
        for (const auto &[k, c] : terms_) {
            const u64 e = a == Axis::One ? k.first : k.second;
            if (e == 0) continue;
            const Fq f = c * ctx_->from_integer(static_cast<long long>(e % ctx_->p()));
            if (a == Axis::One)
                r.add_term(k.first - 1, k.second, f);
            else
                r.add_term(k.first, k.second - 1, f);
        }
        return r;
    }

    /// Coefficientwise p^n-th power, f^{(p^n)}.
    TruncSeries2 coeff_frobenius(u64 n) const {
        TruncSeries2 r(*ctx_, prec_);
        for (const auto &[k, c] : terms_) r.add_term(k.first, k.second, c.frobenius(n));
        return r;
    }

    Fq evaluate(const Fq &a, const Fq &b) const {
        if (!is_exact()) throw Error(Errc::PrecisionUnderflow, "cannot evaluate a truncated series");
        Fq acc = ctx_->zero();
        for (const auto &[k, c] : terms_) acc = acc + c * a.pow(k.first) * b.pow(k.second);
        return acc;
    }

  private:
    static void check_same(const TruncSeries2 &a, const TruncSeries2 &b) {
        if (a.ctx_ != b.ctx_) throw Error(Errc::FieldMismatch, "series over different fields");
    }

    TruncSeries1 restrict_axis(Axis zero_axis) const {
        std::vector<Fq> v;
        for (const auto &[k, c] : terms_) {
            const u64 z = zero_axis == Axis::One ? k.first : k.second;
            const u64 e = zero_axis == Axis::One ? k.second : k.first;
            if (z != 0) continue;
            if (v.size() <= e) v.resize(e + 1, ctx_->zero());
            v[e] = c;
        }
        return TruncSeries1(*ctx_, std::move(v), prec_);
    }

    const FieldCtx *ctx_;
    std::size_t prec_;
    std::map<Key, Fq> terms_;
};

/// A parametrized branch u -> (alpha1(u), alpha2(u)) through the origin.
class BranchParam {
  public:
    using Relift = std::function<BranchParam(std::size_t)>;

    BranchParam(TruncSeries1 a1, TruncSeries1 a2, Relift relift = {})
        : a1_(std::move(a1)), a2_(std::move(a2)), relift_(std::move(relift)) {
        if (&a1_.ctx() != &a2_.ctx()) throw Error(Errc::FieldMismatch, "branch components over different fields");
        for (const auto *a : {&a1_, &a2_})
            if (a->precision() > 0 && !a->coeff(0).is_zero())
                throw Error(Errc::InvalidArgument, "branch must pass through the origin");
        if (a1_.valuation().is_infinite() && a2_.valuation().is_infinite())
            throw Error(Errc::InvalidArgument, "branch is constant");
    }

    const FieldCtx &ctx() const { return a1_.ctx(); }
    const TruncSeries1 &alpha(Axis a) const { return a == Axis::One ? a1_ : a2_; }
    const TruncSeries1 &alpha1() const { return a1_; }
    const TruncSeries1 &alpha2() const { return a2_; }
    Valuation k1() const { return a1_.valuation(); }
    Valuation k2() const { return a2_.valuation(); }
    std::size_t precision() const { return std::min(a1_.precision(), a2_.precision()); }
    bool is_exact() const { return a1_.is_exact() && a2_.is_exact(); }
    bool can_relift() const { return static_cast<bool>(relift_); }

    /// The same branch known to at least `n` terms when a relift is available.
    BranchParam at_precision(std::size_t n) const {
        if (precision() >= n || !relift_) return *this;
        return relift_(n);
    }

  private:
    TruncSeries1 a1_, a2_;
    Relift relift_;
};

/// f(alpha1(u), alpha2(u)) computed below `working` with sound precision.
inline TruncSeries1 substitute_branch(const TruncSeries2 &f, const BranchParam &beta, std::size_t working = kExact) {
    if (&f.ctx() != &beta.ctx()) throw Error(Errc::FieldMismatch, "germ and branch over different fields");
    const FieldCtx &ctx = f.ctx();
    const TruncSeries1 a1 = beta.alpha1().truncated(working), a2 = beta.alpha2().truncated(working);
    const std::size_t k1 = a1.valuation().lower_bound(), k2 = a2.valuation().lower_bound();
    std::size_t prec = working;
    if (!f.is_exact()) prec = std::min(prec, sat_mul(f.precision(), std::min(k1, k2)));
    prec = std::min({prec, a1.precision() == kExact ? kExact : sat_add(a1.precision(), 0),
                     a2.precision() == kExact ? kExact : a2.precision()});
    if (prec == 0) throw Error(Errc::PrecisionUnderflow, "substitution has no known coefficients");

    std::map<u64, TruncSeries1> pow1, pow2;
    auto power = [&](std::map<u64, TruncSeries1> &cache, const TruncSeries1 &a, u64 e) -> const TruncSeries1 & {
        auto it = cache.find(e);
        if (it == cache.end()) it = cache.emplace(e, a.pow(e, prec)).first;
        return it->second;
    };

    TruncSeries1 result(ctx, prec);
    for (const auto &[key, c] : f.terms()) {
        const auto [i, j] = key;
        const std::size_t lb = sat_add(sat_mul(static_cast<std::size_t>(i), k1), sat_mul(static_cast<std::size_t>(j), k2));
        if (lb == kExact || (prec != kExact && lb >= prec)) continue;
        const TruncSeries1 &p1 = power(pow1, a1, i);
        const TruncSeries1 &p2 = power(pow2, a2, j);
        result = result + TruncSeries1::mul(p1, p2, prec).scaled(c);
    }
    return result.truncated(prec);
}

/// t_axis -> t_axis^{p^n}. Precision is kept: the unknown region i + j >= N
/// maps into total degree >= N.
inline TruncSeries2 partial_frobenius_pullback(const TruncSeries2 &f, Axis axis, u64 n) {
    const u64 e = detail::checked_pow(f.ctx().p(), n, u64{1} << 40);
    if (e == 0) throw Error(Errc::Overflow, "p^n too large");
    TruncSeries2 r(f.ctx(), f.precision());
    for (const auto &[k, c] : f.terms()) {
        if (axis == Axis::One)
            r.add_term(k.first * e, k.second, c);
        else
            r.add_term(k.first, k.second * e, c);
    }
    return r;
}

/// e = val_{t2} f(0, t2) and d = val_{t1} f(t1, 0).
struct AxisDecomposition {
    Valuation e;
    Valuation d;
};

inline AxisDecomposition axis_decompose(const TruncSeries2 &f) {
    if (f.precision() > 0 && !f.constant_term().is_zero()) throw Error(Errc::OriginNotOnCurve, "f(0,0) != 0");
    return {f.restrict_t1_zero().valuation(), f.restrict_t2_zero().valuation()};
}

/// Smooth branch of g = 0 as a graph over the free axis: the free coordinate
/// is u and the solved one is found by u-adic Newton iteration.
inline BranchParam hensel_parametrize(const TruncSeries2 &g, Axis solve_axis, std::size_t n) {
    const FieldCtx &ctx = g.ctx();
    if (g.precision() > 0 && !g.constant_term().is_zero()) throw Error(Errc::OriginNotOnCurve, "g(0,0) != 0");
    const Fq lin = solve_axis == Axis::One ? g.coeff(1, 0) : g.coeff(0, 1);
    if (lin.is_zero()) throw Error(Errc::NotSmoothAlongAxis, "partial derivative vanishes at the origin");
    if (n == 0 || n == kExact) throw Error(Errc::InvalidArgument, "hensel precision must be finite and positive");

    const std::size_t target = std::min(n, g.precision());
    const TruncSeries2 dg = g.partial(solve_axis);
    const TruncSeries1 u = TruncSeries1::variable(ctx);
    auto orient = [&](const TruncSeries1 &alpha) {
        return solve_axis == Axis::Two ? BranchParam(u, alpha) : BranchParam(alpha, u);
    };

    TruncSeries1 alpha(ctx, std::vector<Fq>{}, kExact);
    std::size_t m = 1;
    while (m < target) {
        m = std::min(2 * m, target);
        const BranchParam cur = orient(alpha);
        const TruncSeries1 r = substitute_branch(g, cur, m);
        const TruncSeries1 d = substitute_branch(dg, cur, m);
        const TruncSeries1 step = TruncSeries1::mul(r, d.inverse(m), m);
        const TruncSeries1 next = (alpha.truncated(m) - step);
        alpha = TruncSeries1(ctx, next.coeffs(), kExact);
    }
    // a polynomial lift that solves g exactly needs no truncation
    if (g.is_exact() && alpha.coeffs().size() * std::max<std::size_t>(g.total_degree(), 1) <= 4096 &&
        substitute_branch(g, orient(alpha)).valuation().is_infinite())
        return orient(alpha);
    TruncSeries1 result(ctx, alpha.coeffs(), target);
    const TruncSeries2 g_copy = g;
    BranchParam::Relift relift = [g_copy, solve_axis](std::size_t more) { return hensel_parametrize(g_copy, solve_axis, more); };
    return solve_axis == Axis::Two ? BranchParam(u, result, relift) : BranchParam(result, u, relift);
}

} // namespace pfrob
