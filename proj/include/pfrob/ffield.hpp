#pragma once

// Exact arithmetic in F_{p^k} and univariate polynomials over it.
//
// Elements are stored as an index  sum_i c_i p^i  of their coordinates in the
// power basis of F_p[x]/(modulus). Index 0 is zero, index 1 is one. Fields with
// k > 1 and q <= 2^20 carry exp/log/Zech tables; larger fields fall back to
// coordinate arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfrob/errors.hpp"

namespace pfrob {

using u64 = std::uint64_t;

namespace detail {

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline u64 powmod(u64 a, u64 e, u64 m) {
    unsigned __int128 r = 1 % m, b = a % m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<u64>(r);
}

/// Saturating p^e; returns 0 when the result would exceed `limit`.
inline u64 checked_pow(u64 p, u64 e, u64 limit = (u64{1} << 62)) {
    u64 r = 1;
    for (u64 i = 0; i < e; ++i) {
        if (r > limit / p) return 0;
        r *= p;
    }
    return r;
}

// Dense polynomials over F_p (low degree first) used while the field itself is
// still being constructed.
using PPoly = std::vector<u64>;

inline void ptrim(PPoly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PPoly pmod(PPoly a, const PPoly &f, u64 p) {
    ptrim(a);
    const std::size_t df = f.size() - 1;
    const u64 inv_lead = powmod(f.back(), p - 2, p);
    while (a.size() >= f.size()) {
        const u64 c = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t j = 0; j <= df; ++j)
            a[shift + j] = (a[shift + j] + (p - c) * f[j]) % p;
        ptrim(a);
    }
    return a;
}

inline PPoly pmulmod(const PPoly &a, const PPoly &b, const PPoly &f, u64 p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return pmod(std::move(r), f, p);
}

inline PPoly pgcd(PPoly a, PPoly b, u64 p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: f of degree k is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= k/2.
inline bool is_irreducible(const PPoly &f, u64 p) {
    const std::size_t k = f.size() - 1;
    if (k <= 1) return k == 1;
    PPoly xp = {0, 1};
    for (std::size_t i = 1; i <= k / 2; ++i) {
        PPoly acc = {1}, base = xp;
        u64 e = p;
        while (e) {
            if (e & 1) acc = pmulmod(acc, base, f, p);
            base = pmulmod(base, base, f, p);
            e >>= 1;
        }
        xp = acc;
        PPoly t = xp;
        t.resize(std::max<std::size_t>(t.size(), 2), 0);
        t[1] = (t[1] + p - 1) % p;
        PPoly g = pgcd(t, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace detail

class Fq;

/// Immutable description of F_{p^k}. Obtain instances through make_field().
class FieldCtx {
  public:
    FieldCtx(u64 p, unsigned k, std::vector<u64> modulus)
        : p_(p), k_(k), q_(detail::checked_pow(p, k)), modulus_(std::move(modulus)) {
        if (k_ > 1 && q_ <= kTableLimit) build_tables();
        if (k_ == 1) {
            generator_ = smallest_primitive_root();
        } else {
            generator_ = p_; // class of x
        }
    }

    static constexpr u64 kTableLimit = u64{1} << 20;

    u64 p() const { return p_; }
    unsigned k() const { return k_; }
    u64 q() const { return q_; }
    /// Monic modulus, coefficients c_0..c_k.
    const std::vector<u64> &modulus() const { return modulus_; }
    bool has_tables() const { return !exp_.empty(); }
    u64 generator_index() const { return generator_; }

    u64 add(u64 a, u64 b) const {
        if (k_ == 1) {
            u64 s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (has_tables()) {
            if (a == 0) return b;
            if (b == 0) return a;
            const u64 la = log_[a], lb = log_[b];
            const u64 d = lb >= la ? lb - la : lb + (q_ - 1) - la;
            const std::uint32_t z = zech_[d];
            if (z == kNoLog) return 0;
            u64 e = la + z;
            if (e >= q_ - 1) e -= q_ - 1;
            return exp_[e];
        }
        return digit_add(a, b, false);
    }

    u64 neg(u64 a) const {
        if (a == 0) return 0;
        if (k_ == 1) return p_ - a;
        if (has_tables()) {
            if (p_ == 2) return a;
            u64 e = log_[a] + (q_ - 1) / 2;
            if (e >= q_ - 1) e -= q_ - 1;
            return exp_[e];
        }
        return digit_add(0, a, true);
    }

    u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }

    u64 mul(u64 a, u64 b) const {
        if (a == 0 || b == 0) return 0;
        if (k_ == 1) return a * b % p_;
        if (has_tables()) {
            u64 e = u64{log_[a]} + log_[b];
            if (e >= q_ - 1) e -= q_ - 1;
            return exp_[e];
        }
        return slow_mul(a, b);
    }

    u64 inv(u64 a) const {
        if (a == 0) throw Error(Errc::InvalidArgument, "inverse of zero");
        if (k_ == 1) return detail::powmod(a, p_ - 2, p_);
        if (has_tables()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
        return pow(a, q_ - 2);
    }

    u64 pow(u64 a, u64 e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        if (k_ == 1) return detail::powmod(a, e, p_);
        if (has_tables()) {
            const u64 n = q_ - 1;
            const unsigned __int128 t = static_cast<unsigned __int128>(log_[a]) * (e % n);
            return exp_[static_cast<u64>(t % n)];
        }
        u64 r = 1, b = a;
        while (e) {
            if (e & 1) r = slow_mul(r, b);
            b = slow_mul(b, b);
            e >>= 1;
        }
        return r;
    }

    /// a^{p^n}.
    u64 frob(u64 a, u64 n) const {
        const u64 r = n % k_;
        if (r == 0 || a == 0) return a;
        return pow(a, detail::checked_pow(p_, r));
    }

    std::vector<u64> coords(u64 a) const {
        std::vector<u64> c(k_, 0);
        for (unsigned i = 0; i < k_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }

    u64 from_coords(std::span<const u64> c) const {
        if (c.size() > k_) throw Error(Errc::InvalidArgument, "too many coordinates for F_q");
        u64 v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= p_) throw Error(Errc::InvalidArgument, "coordinate outside [0,p)");
            v = v * p_ + c[i];
        }
        return v;
    }

    u64 from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<u64>(r);
    }

    /// Degree of the element over F_p.
    unsigned degree_of(u64 a) const {
        for (unsigned d = 1; d <= k_; ++d)
            if (k_ % d == 0 && frob(a, d) == a) return d;
        return k_;
    }

    Fq zero() const;
    Fq one() const;
    Fq elem(u64 index) const;
    Fq from_integer(long long v) const;
    Fq generator() const;

  private:
    static constexpr std::uint32_t kNoLog = 0xffffffffu;

    u64 digit_add(u64 a, u64 b, bool negate_b) const {
        u64 r = 0, scale = 1;
        for (unsigned i = 0; i < k_; ++i) {
            const u64 da = a % p_, db = b % p_;
            a /= p_;
            b /= p_;
            u64 d = negate_b ? (da + p_ - db) % p_ : (da + db) % p_;
            r += d * scale;
            scale *= p_;
        }
        return r;
    }

    u64 slow_mul(u64 a, u64 b) const {
        const auto ca = coords(a), cb = coords(b);
        std::vector<u64> prod(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i) {
            if (!ca[i]) continue;
            for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        }
        for (std::size_t i = prod.size(); i-- > k_;) {
            const u64 c = prod[i];
            if (!c) continue;
            for (unsigned j = 0; j < k_; ++j)
                prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
            prod[i] = 0;
        }
        prod.resize(k_);
        return from_coords(prod);
    }

    u64 slow_pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        const u64 n = q_ - 1;
        const auto factors = detail::prime_factors(n);
        u64 g = 0;
        for (u64 c = 2; c < q_; ++c) {
            bool primitive = true;
            for (u64 r : factors)
                if (slow_pow(c, n / r) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                g = c;
                break;
            }
        }
        if (g == 0) throw Error(Errc::InternalMismatch, "no primitive element found");
        exp_.resize(n);
        log_.assign(q_, kNoLog);
        u64 x = 1;
        for (u64 i = 0; i < n; ++i) {
            exp_[i] = static_cast<std::uint32_t>(x);
            log_[x] = static_cast<std::uint32_t>(i);
            x = slow_mul(x, g);
        }
        zech_.resize(n);
        for (u64 i = 0; i < n; ++i) {
            const u64 s = digit_add(1, exp_[i], false);
            zech_[i] = s == 0 ? kNoLog : log_[s];
        }
    }

    u64 smallest_primitive_root() const {
        if (p_ == 2) return 1;
        const auto factors = detail::prime_factors(p_ - 1);
        for (u64 c = 2; c < p_; ++c) {
            bool ok = true;
            for (u64 r : factors)
                if (detail::powmod(c, (p_ - 1) / r, p_) == 1) {
                    ok = false;
                    break;
                }
            if (ok) return c;
        }
        return 1;
    }

    u64 p_;
    unsigned k_;
    u64 q_;
    std::vector<u64> modulus_;
    std::vector<std::uint32_t> exp_, log_, zech_;
    u64 generator_ = 1;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Element of F_{p^k}. A default-constructed element is zero and adopts the
/// field of whatever it is combined with.
class Fq {
  public:
    Fq() = default;
    Fq(const FieldCtx &ctx, u64 index) : ctx_(&ctx), v_(index) {}

    const FieldCtx *ctx_ptr() const { return ctx_; }
    const FieldCtx &ctx() const {
        if (!ctx_) throw Error(Errc::FieldMismatch, "element without field");
        return *ctx_;
    }
    u64 index() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    std::vector<u64> coords() const { return ctx().coords(v_); }

    Fq pow(u64 e) const { return Fq(ctx(), ctx().pow(v_, e)); }
    Fq inv() const { return Fq(ctx(), ctx().inv(v_)); }
    Fq frobenius(u64 n) const { return ctx_ ? Fq(*ctx_, ctx_->frob(v_, n)) : *this; }
    unsigned degree() const { return ctx_ ? ctx_->degree_of(v_) : 1; }

    friend Fq operator+(const Fq &a, const Fq &b) {
        const FieldCtx *c = common(a, b);
        return c ? Fq(*c, c->add(a.v_, b.v_)) : Fq();
    }
    friend Fq operator-(const Fq &a, const Fq &b) {
        const FieldCtx *c = common(a, b);
        return c ? Fq(*c, c->sub(a.v_, b.v_)) : Fq();
    }
    friend Fq operator*(const Fq &a, const Fq &b) {
        const FieldCtx *c = common(a, b);
        return c ? Fq(*c, c->mul(a.v_, b.v_)) : Fq();
    }
    friend Fq operator/(const Fq &a, const Fq &b) {
        const FieldCtx *c = common(a, b);
        if (!c) throw Error(Errc::InvalidArgument, "division by zero");
        return Fq(*c, c->mul(a.v_, c->inv(b.v_)));
    }
    Fq operator-() const { return ctx_ ? Fq(*ctx_, ctx_->neg(v_)) : *this; }
    Fq &operator+=(const Fq &o) { return *this = *this + o; }
    Fq &operator-=(const Fq &o) { return *this = *this - o; }
    Fq &operator*=(const Fq &o) { return *this = *this * o; }

    friend bool operator==(const Fq &a, const Fq &b) {
        if (a.v_ != b.v_) return false;
        return a.v_ == 0 || !a.ctx_ || !b.ctx_ || a.ctx_ == b.ctx_;
    }
    friend bool operator<(const Fq &a, const Fq &b) { return a.v_ < b.v_; }

  private:
    static const FieldCtx *common(const Fq &a, const Fq &b) {
        if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_)
            throw Error(Errc::FieldMismatch, "operands live in different fields");
        return a.ctx_ ? a.ctx_ : b.ctx_;
    }

    const FieldCtx *ctx_ = nullptr;
    u64 v_ = 0;
};

inline Fq FieldCtx::zero() const { return Fq(*this, 0); }
inline Fq FieldCtx::one() const { return Fq(*this, 1); }
inline Fq FieldCtx::elem(u64 index) const {
    if (index >= q_) throw Error(Errc::InvalidArgument, "element index out of range");
    return Fq(*this, index);
}
inline Fq FieldCtx::from_integer(long long v) const { return Fq(*this, from_int(v)); }
inline Fq FieldCtx::generator() const { return Fq(*this, generator_); }

/// F_{p^k} with the lexicographically smallest monic irreducible modulus
/// (non-leading coefficients read as base-p digits, c_0 least significant).
/// Contexts are cached; the returned pointer stays valid for the process.
inline FieldPtr make_field(u64 p, unsigned k) {
    if (!detail::is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (p > 1000) throw Error(Errc::InvalidArgument, "p must be at most 1000");
    if (k < 1 || k > 12) throw Error(Errc::DegreeOutOfRange, "extension degree must be in [1,12]");
    if (detail::checked_pow(p, k) == 0) throw Error(Errc::FieldTooLarge, "p^k exceeds 2^62");

    static std::mutex mu;
    static std::map<std::pair<u64, unsigned>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;

    std::vector<u64> modulus;
    if (k == 1) {
        modulus = {0, 1};
    } else {
        const u64 count = detail::checked_pow(p, k);
        for (u64 n = 0; n < count; ++n) {
            detail::PPoly f(k + 1, 0);
            u64 t = n;
            for (unsigned i = 0; i < k; ++i) {
                f[i] = t % p;
                t /= p;
            }
            f[k] = 1;
            if (f[0] == 0) continue;
            if (detail::is_irreducible(f, p)) {
                modulus = f;
                break;
            }
        }
    }
    auto ctx = std::make_shared<const FieldCtx>(p, k, std::move(modulus));
    cache.emplace(std::make_pair(p, k), ctx);
    return ctx;
}

/// a^{p^n}.
inline Fq frobenius(const Fq &a, u64 n) { return a.frobenius(n); }

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(const FieldCtx &ctx) : ctx_(&ctx) {}
    UniPoly(const FieldCtx &ctx, std::vector<Fq> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Fq &c) { return UniPoly(c.ctx(), {c}); }
    static UniPoly monomial(const Fq &c, std::size_t deg) {
        std::vector<Fq> v(deg + 1, c.ctx().zero());
        v[deg] = c;
        return UniPoly(c.ctx(), std::move(v));
    }
    static UniPoly x(const FieldCtx &ctx) { return monomial(ctx.one(), 1); }
    /// Builds from small integers, lowest degree first.
    static UniPoly from_ints(const FieldCtx &ctx, std::initializer_list<long long> coeffs) {
        std::vector<Fq> v;
        for (long long c : coeffs) v.push_back(ctx.from_integer(c));
        return UniPoly(ctx, std::move(v));
    }

    const FieldCtx &ctx() const {
        if (!ctx_) throw Error(Errc::FieldMismatch, "polynomial without field");
        return *ctx_;
    }
    const FieldCtx *ctx_ptr() const { return ctx_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Fq> &coeffs() const { return c_; }
    Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ctx().zero(); }
    Fq lead() const { return c_.empty() ? ctx().zero() : c_.back(); }

    Fq operator()(const Fq &x) const {
        Fq acc = ctx().zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        std::vector<Fq> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * ctx().from_integer(static_cast<long long>(i % ctx().p())));
        return UniPoly(ctx(), std::move(d));
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        const Fq li = lead().inv();
        std::vector<Fq> v(c_);
        for (auto &c : v) c = c * li;
        return UniPoly(ctx(), std::move(v));
    }

    UniPoly scaled(const Fq &s) const {
        std::vector<Fq> v(c_);
        for (auto &c : v) c = c * s;
        return UniPoly(ctx(), std::move(v));
    }

    friend UniPoly operator+(const UniPoly &a, const UniPoly &b) {
        const FieldCtx &ctx = pick(a, b);
        std::vector<Fq> v(std::max(a.c_.size(), b.c_.size()), ctx.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
        return UniPoly(ctx, std::move(v));
    }
    friend UniPoly operator-(const UniPoly &a, const UniPoly &b) {
        const FieldCtx &ctx = pick(a, b);
        std::vector<Fq> v(std::max(a.c_.size(), b.c_.size()), ctx.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] - b.c_[i];
        return UniPoly(ctx, std::move(v));
    }
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b) {
        const FieldCtx &ctx = pick(a, b);
        if (a.is_zero() || b.is_zero()) return UniPoly(ctx);
        const UniPoly &sparse = a.nonzeros() <= b.nonzeros() ? a : b;
        const UniPoly &dense = &sparse == &a ? b : a;
        std::vector<Fq> v(a.c_.size() + b.c_.size() - 1, ctx.zero());
        for (std::size_t i = 0; i < sparse.c_.size(); ++i) {
            if (sparse.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < dense.c_.size(); ++j)
                if (!dense.c_[j].is_zero()) v[i + j] = v[i + j] + sparse.c_[i] * dense.c_[j];
        }
        return UniPoly(ctx, std::move(v));
    }
    friend bool operator==(const UniPoly &a, const UniPoly &b) { return a.c_ == b.c_; }

    static std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b) {
        if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
        const FieldCtx &ctx = b.ctx();
        if (a.degree() < b.degree()) return {UniPoly(ctx), a};
        std::vector<Fq> r = a.c_;
        for (auto &c : r)
            if (!c.ctx_ptr()) c = ctx.zero();
        std::vector<Fq> qv(a.c_.size() - b.c_.size() + 1, ctx.zero());
        const Fq li = b.lead().inv();
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t i = r.size(); i-- > db;) {
            if (r[i].is_zero()) continue;
            const Fq c = r[i] * li;
            qv[i - db] = c;
            for (std::size_t j = 0; j <= db; ++j)
                if (!b.c_[j].is_zero()) r[i - db + j] = r[i - db + j] - c * b.c_[j];
        }
        r.resize(db);
        return {UniPoly(ctx, std::move(qv)), UniPoly(ctx, std::move(r))};
    }
    friend UniPoly operator/(const UniPoly &a, const UniPoly &b) { return divmod(a, b).first; }
    friend UniPoly operator%(const UniPoly &a, const UniPoly &b) { return divmod(a, b).second; }

    /// Monic gcd; gcd(0,0) = 0.
    friend UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    UniPoly pow(u64 e) const {
        UniPoly r = UniPoly::constant(ctx().one()), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    /// Coefficientwise p^n-th power.
    UniPoly frobenius_coeffs(u64 n) const {
        std::vector<Fq> v(c_);
        for (auto &c : v) c = c.frobenius(n);
        return UniPoly(ctx(), std::move(v));
    }

  private:
    static const FieldCtx &pick(const UniPoly &a, const UniPoly &b) {
        if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_) throw Error(Errc::FieldMismatch, "polynomials over different fields");
        return a.ctx_ ? *a.ctx_ : b.ctx();
    }
    std::size_t nonzeros() const {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Fq &c) { return !c.is_zero(); }));
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        for (auto &c : c_)
            if (!c.ctx_ptr()) c = Fq(*ctx_, 0);
    }

    const FieldCtx *ctx_ = nullptr;
    std::vector<Fq> c_;
};

/// Homomorphism F_{p^a} -> F_{p^b} for a | b, sending the class of x to the
/// smallest-index root of the source modulus in the target.
class FieldEmbedding {
  public:
    FieldEmbedding(const FieldCtx &from, const FieldCtx &to) : from_(&from), to_(&to) {
        if (from.p() != to.p() || to.k() % from.k() != 0)
            throw Error(Errc::FieldMismatch, "no embedding F_" + std::to_string(from.q()) + " -> F_" + std::to_string(to.q()));
        if (from.k() == 1) return;
        std::vector<Fq> mod;
        for (u64 c : from.modulus()) mod.push_back(to.from_integer(static_cast<long long>(c)));
        const UniPoly f(to, mod);
        for (u64 i = 0; i < to.q(); ++i) {
            const Fq x = to.elem(i);
            if (f(x).is_zero()) {
                powers_.push_back(to.one());
                for (unsigned j = 1; j < from.k(); ++j) powers_.push_back(powers_.back() * x);
                return;
            }
        }
        throw Error(Errc::InternalMismatch, "modulus has no root in target field");
    }

    const FieldCtx &source() const { return *from_; }
    const FieldCtx &target() const { return *to_; }

    Fq operator()(const Fq &a) const {
        if (a.ctx_ptr() && a.ctx_ptr() != from_) throw Error(Errc::FieldMismatch, "embedding applied to foreign element");
        if (from_->k() == 1) return to_->elem(a.index());
        const auto c = from_->coords(a.index());
        Fq acc = to_->zero();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i]) acc = acc + powers_[i] * to_->from_integer(static_cast<long long>(c[i]));
        return acc;
    }

    UniPoly operator()(const UniPoly &f) const {
        std::vector<Fq> v;
        v.reserve(f.coeffs().size());
        for (const auto &c : f.coeffs()) v.push_back((*this)(c));
        return UniPoly(*to_, std::move(v));
    }

  private:
    const FieldCtx *from_;
    const FieldCtx *to_;
    std::vector<Fq> powers_;
};

/// Cached embedding between two registry fields.
inline const FieldEmbedding &embedding(const FieldCtx &from, const FieldCtx &to) {
    static std::mutex mu;
    static std::map<std::pair<const FieldCtx *, const FieldCtx *>, std::unique_ptr<FieldEmbedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[{&from, &to}];
    if (!slot) slot = std::make_unique<FieldEmbedding>(from, to);
    return *slot;
}

struct RootMult {
    Fq root;
    unsigned multiplicity;
};

inline constexpr u64 kRootSearchBudget = u64{1} << 24;

/// All roots of f in F_{p^m} with multiplicity, by exhaustive evaluation and
/// repeated division. Roots are reported in index order.
inline std::vector<RootMult> roots_in_extension(const UniPoly &f, unsigned m) {
    if (f.is_zero()) throw Error(Errc::InvalidArgument, "roots of the zero polynomial");
    const FieldCtx &src = f.ctx();
    const u64 size = detail::checked_pow(src.p(), m);
    if (m == 0 || size == 0 || size > kRootSearchBudget)
        throw Error(Errc::BudgetExceeded, "F_{p^m} exceeds the enumeration budget");
    if (m % src.k() != 0) throw Error(Errc::FieldMismatch, "coefficient field is not contained in F_{p^m}");
    const FieldPtr big = make_field(src.p(), m);
    UniPoly g = &src == big.get() ? f : embedding(src, *big)(f);
    std::vector<RootMult> out;
    for (u64 i = 0; i < big->q() && g.degree() > 0; ++i) {
        const Fq x = big->elem(i);
        if (!g(x).is_zero()) continue;
        const UniPoly lin(*big, {-x, big->one()});
        unsigned mult = 0;
        while (g.degree() > 0) {
            auto [quo, rem] = UniPoly::divmod(g, lin);
            if (!rem.is_zero()) break;
            g = std::move(quo);
            ++mult;
        }
        out.push_back({x, mult});
    }
    return out;
}

/// Number of distinct roots of f in an algebraic closure (degree of its
/// radical), via repeated separable-part extraction and p-th roots.
inline std::size_t distinct_root_count(const UniPoly &f) {
    if (f.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial has infinitely many roots");
    if (f.degree() <= 0) return 0;
    const FieldCtx &ctx = f.ctx();
    const UniPoly d = f.derivative();
    if (d.is_zero()) {
        // f(x) = h(x^p) = (h^{(1/p)}(x))^p
        std::vector<Fq> root;
        for (long i = 0; i <= f.degree(); i += static_cast<long>(ctx.p()))
            root.push_back(f.coeff(static_cast<std::size_t>(i)).frobenius(ctx.k() - 1));
        return distinct_root_count(UniPoly(ctx, std::move(root)));
    }
    const UniPoly w = f / gcd(f, d); // product of factors with multiplicity prime to p
    UniPoly rest = f;
    for (;;) {
        UniPoly t = gcd(rest, w);
        if (t.degree() <= 0) break;
        rest = rest / t;
    }
    return static_cast<std::size_t>(w.degree()) + distinct_root_count(rest);
}

} // namespace pfrob
