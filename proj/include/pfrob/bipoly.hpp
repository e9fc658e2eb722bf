#pragma once

// Sparse polynomials in x1, x2 over F_q.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "pfrob/errors.hpp"
#include "pfrob/ffield.hpp"
#include "pfrob/pseries.hpp"

namespace pfrob {

class BiPoly {
  public:
    using Key = std::pair<u64, u64>;

    explicit BiPoly(const FieldCtx &ctx) : ctx_(&ctx) {}

    static BiPoly x1(const FieldCtx &ctx) {
        BiPoly r(ctx);
        r.add_term(1, 0, ctx.one());
        return r;
    }
    static BiPoly x2(const FieldCtx &ctx) {
        BiPoly r(ctx);
        r.add_term(0, 1, ctx.one());
        return r;
    }
    static BiPoly constant(const Fq &c) {
        BiPoly r(c.ctx());
        r.add_term(0, 0, c);
        return r;
    }

    const FieldCtx &ctx() const { return *ctx_; }
    const std::map<Key, Fq> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(u64 i, u64 j, const Fq &c) {
        if (c.is_zero()) return;
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

    u64 deg_x1() const {
        u64 d = 0;
        for (const auto &[k, c] : terms_) d = std::max(d, k.first);
        return d;
    }
    u64 deg_x2() const {
        u64 d = 0;
        for (const auto &[k, c] : terms_) d = std::max(d, k.second);
        return d;
    }
    u64 total_degree() const {
        u64 d = 0;
        for (const auto &[k, c] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }

    friend BiPoly operator+(const BiPoly &a, const BiPoly &b) {
        BiPoly r = a;
        for (const auto &[k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly &a, const BiPoly &b) {
        BiPoly r = a;
        for (const auto &[k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend BiPoly operator*(const BiPoly &a, const BiPoly &b) {
        BiPoly r(*a.ctx_);
        for (const auto &[ka, ca] : a.terms_)
            for (const auto &[kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    friend bool operator==(const BiPoly &a, const BiPoly &b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

    BiPoly scaled(const Fq &s) const {
        BiPoly r(*ctx_);
        for (const auto &[k, c] : terms_) r.add_term(k.first, k.second, c * s);
        return r;
    }

    /// F(a, b); a and b may live in a common extension of the coefficient field.
    Fq operator()(const Fq &a, const Fq &b) const {
        if (&a.ctx() == ctx_ && &b.ctx() == ctx_) {
            Fq acc = ctx_->zero();
            for (const auto &[k, c] : terms_) acc = acc + c * a.pow(k.first) * b.pow(k.second);
            return acc;
        }
        // evaluate in the larger of the two fields
        const FieldCtx &big = a.ctx().k() >= b.ctx().k() ? a.ctx() : b.ctx();
        const Fq ea = &a.ctx() == &big ? a : embedding(a.ctx(), big)(a);
        const Fq eb = &b.ctx() == &big ? b : embedding(b.ctx(), big)(b);
        return at_x1(ea)(eb);
    }

    /// Multiplies exponents of x_axis by e.
    BiPoly pullback(Axis axis, u64 e) const {
        BiPoly r(*ctx_);
        for (const auto &[k, c] : terms_) {
            if (axis == Axis::One)
                r.add_term(k.first * e, k.second, c);
            else
                r.add_term(k.first, k.second * e, c);
        }
        return r;
    }

    /// F(a, x2) as a polynomial in x2; a may live in an extension of the
    /// coefficient field.
    UniPoly at_x1(const Fq &a) const { return restrict(Axis::One, a); }
    /// F(x1, b) as a polynomial in x1.
    UniPoly at_x2(const Fq &b) const { return restrict(Axis::Two, b); }

    /// Coefficients as polynomials in x1, indexed by the x2 exponent.
    std::vector<UniPoly> x2_coefficients() const {
        std::vector<std::vector<Fq>> rows(deg_x2() + 1);
        for (const auto &[k, c] : terms_) {
            auto &row = rows[k.second];
            if (row.size() <= k.first) row.resize(k.first + 1, ctx_->zero());
            row[k.first] = c;
        }
        std::vector<UniPoly> out;
        for (auto &r : rows) out.emplace_back(*ctx_, std::move(r));
        return out;
    }

    /// Image under a field embedding.
    BiPoly mapped(const FieldEmbedding &emb) const {
        BiPoly r(emb.target());
        for (const auto &[k, c] : terms_) r.add_term(k.first, k.second, emb(c));
        return r;
    }

    /// F(a + t1, b + t2) as an exact two-variable series.
    TruncSeries2 translated(const Fq &a, const Fq &b) const {
        const FieldCtx &ctx = a.ctx();
        if (&ctx != ctx_) throw Error(Errc::FieldMismatch, "translation point in a different field");
        TruncSeries2 r(ctx);
        std::map<u64, std::vector<Fq>> pa, pb; // (a + t)^i coefficients
        auto expand = [&](std::map<u64, std::vector<Fq>> &cache, const Fq &s, u64 i) -> const std::vector<Fq> & {
            auto it = cache.find(i);
            if (it != cache.end()) return it->second;
            const UniPoly lin(ctx, {s, ctx.one()});
            return cache.emplace(i, lin.pow(i).coeffs()).first->second;
        };
        for (const auto &[k, c] : terms_) {
            const auto &ea = expand(pa, a, k.first);
            const auto &eb = expand(pb, b, k.second);
            for (std::size_t i = 0; i < ea.size(); ++i) {
                if (ea[i].is_zero()) continue;
                for (std::size_t j = 0; j < eb.size(); ++j)
                    if (!eb[j].is_zero()) r.add_term(i, j, c * ea[i] * eb[j]);
            }
        }
        return r;
    }

    /// w^{d} F(1/w, x2) (axis 1) or the analogue for x2, with d the degree in
    /// that variable: the equation in the chart at infinity.
    BiPoly reversed(Axis axis, u64 d) const {
        BiPoly r(*ctx_);
        for (const auto &[k, c] : terms_) {
            if (axis == Axis::One)
                r.add_term(d - k.first, k.second, c);
            else
                r.add_term(k.first, d - k.second, c);
        }
        return r;
    }

  private:
    UniPoly restrict(Axis fixed, const Fq &v) const {
        const FieldCtx &tgt = v.ctx();
        const FieldEmbedding *emb = &tgt == ctx_ ? nullptr : &embedding(*ctx_, tgt);
        std::map<u64, Fq> acc;
        std::map<u64, Fq> powers;
        for (const auto &[k, c] : terms_) {
            const u64 ef = fixed == Axis::One ? k.first : k.second;
            const u64 eo = fixed == Axis::One ? k.second : k.first;
            auto it = powers.find(ef);
            if (it == powers.end()) it = powers.emplace(ef, v.pow(ef)).first;
            const Fq cc = emb ? (*emb)(c) : c;
            auto [slot, ins] = acc.try_emplace(eo, tgt.zero());
            slot->second = slot->second + cc * it->second;
        }
        std::vector<Fq> out;
        if (!acc.empty()) out.assign(acc.rbegin()->first + 1, tgt.zero());
        for (const auto &[e, c] : acc) out[e] = c;
        return UniPoly(tgt, std::move(out));
    }

    const FieldCtx *ctx_;
    std::map<Key, Fq> terms_;
};

} // namespace pfrob
