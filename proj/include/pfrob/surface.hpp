#pragma once

// The product surface P^1 x P^1 over F_q: curves given by affine equations
// F(x1, x2), partial Frobenius pullbacks x_i -> x_i^{q^n}, intersection with
// the lines over supersingular j-invariants, and model heights.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pfrob/bipoly.hpp"
#include "pfrob/errors.hpp"
#include "pfrob/ffield.hpp"
#include "pfrob/localint.hpp"
#include "pfrob/rational.hpp"
#include "pfrob/sslocus.hpp"

namespace pfrob {

class GlobalCurve {
  public:
    explicit GlobalCurve(BiPoly f, u64 twist_exponent = 1) : f_(std::move(f)), twist_(twist_exponent) {
        if (f_.is_zero()) throw Error(Errc::InvalidArgument, "curve equation is zero");
        if (f_.deg_x1() == 0 && f_.deg_x2() == 0) throw Error(Errc::InvalidArgument, "curve equation is constant");
    }

    const BiPoly &poly() const { return f_; }
    const FieldCtx &ctx() const { return f_.ctx(); }
    u64 d1() const { return f_.deg_x1(); }
    u64 d2() const { return f_.deg_x2(); }
    /// q^n of the pullback this curve came from (1 for an input curve).
    u64 twist_exponent() const { return twist_; }

  private:
    BiPoly f_;
    u64 twist_;
};

namespace detail {

inline u64 twist_power(const FieldCtx &ctx, u64 n) {
    const u64 qn = checked_pow(ctx.q(), n);
    if (qn == 0) throw Error(Errc::Overflow, "q^n exceeds 2^62");
    return qn;
}

inline u64 lcm_u(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

} // namespace detail

inline GlobalCurve pullback_global(const GlobalCurve &c, Axis axis, u64 n) {
    const u64 qn = detail::twist_power(c.ctx(), n);
    return GlobalCurve(c.poly().pullback(axis, qn), c.twist_exponent() * qn);
}

/// True when C and D share a component. A factor depending only on x1 shows
/// up in the x2-contents; any other common factor makes gcd_{x2}(C(a,.), D(a,.))
/// nontrivial at every a, while otherwise at most deg Res(x1) values of a
/// (with nonvanishing leading coefficients) give a nontrivial gcd.
inline bool share_component(const GlobalCurve &c, const GlobalCurve &d) {
    if (&c.ctx() != &d.ctx()) throw Error(Errc::FieldMismatch, "curves over different fields");
    const FieldCtx &ctx = c.ctx();
    auto content = [&](const BiPoly &f) {
        UniPoly g(ctx);
        for (const auto &co : f.x2_coefficients()) g = gcd(g, co);
        return g;
    };
    if (gcd(content(c.poly()), content(d.poly())).degree() > 0) return true;
    if (c.d2() == 0 || d.d2() == 0) return false;

    const u64 bez = c.d1() * d.d2() + c.d2() * d.d1();
    const u64 bad = c.d1() + d.d1();
    const u64 need = bez + bad + 2;
    unsigned m = ctx.k();
    while (detail::checked_pow(ctx.p(), m) < need && m + ctx.k() <= 12) m += ctx.k();
    const FieldPtr big = make_field(ctx.p(), m);
    if (big->q() < need) throw Error(Errc::BudgetExceeded, "no extension large enough for the component test");
    const BiPoly cb = c.poly().mapped(embedding(ctx, *big)), db = d.poly().mapped(embedding(ctx, *big));
    u64 good = 0;
    for (u64 i = 0; i < big->q() && good <= bez; ++i) {
        const Fq a = big->elem(i);
        const UniPoly ca = cb.at_x1(a), da = db.at_x1(a);
        if (ca.degree() < static_cast<long>(c.d2()) || da.degree() < static_cast<long>(d.d2())) continue;
        ++good;
        if (gcd(ca, da).degree() == 0) return false;
    }
    return true;
}

/// d1 e2 + d2 e1, the intersection number on P^1 x P^1.
inline u64 global_intersection(const GlobalCurve &c, const GlobalCurve &d) {
    if (share_component(c, d)) throw Error(Errc::CommonComponent, "curves share a component");
    return c.d1() * d.d2() + c.d2() * d.d1();
}

/// Z = Z1 + Z2 with Z1 = {x1 = j}, Z2 = {x2 = j} for j supersingular.
struct NonOrdDivisor {
    SSLocus ss;

    std::size_t size() const { return ss.js.size(); }
    const FieldCtx &field() const { return *ss.field; }
};

inline NonOrdDivisor nonord_divisor(u64 p) { return {ss_bruteforce(p)}; }

struct ZComponent {
    int family = 1; // 1: x1 = s, 2: x2 = s
    Fq s;
    u64 affine = 0;
    u64 at_infinity = 0;
};

struct ZIntersection {
    Axis axis = Axis::One;
    u64 n = 0;
    u64 q = 0;
    u64 qn = 1;
    u64 cz1 = 0, cz2 = 0, total = 0;
    /// q^n (C.Z2) + (C.Z1) for axis 1, q^n (C.Z1) + (C.Z2) for axis 2.
    u64 expected_total = 0;
    u64 base_cz1 = 0, base_cz2 = 0;
    bool pass = false;
    std::vector<ZComponent> components;
};

namespace detail {

// Intersections of pullback(C, axis, n) with every line of Z, computed by
// restricting C through the Frobenius identity C_n(s, x2) = C(s^{q^n}, x2).
inline ZIntersection z_counts(const GlobalCurve &c, const NonOrdDivisor &z, Axis axis, u64 n) {
    const FieldCtx &base = c.ctx();
    if (base.p() != z.field().p()) throw Error(Errc::FieldMismatch, "curve and divisor in different characteristic");
    const u64 qn = twist_power(base, n);
    const FieldPtr big = make_field(base.p(), static_cast<unsigned>(lcm_u(base.k(), 2)));
    const FieldEmbedding &ez = embedding(z.field(), *big);
    const u64 frob_steps = base.k() * n; // s^{q^n} = frob(s, k n)

    ZIntersection r;
    r.axis = axis;
    r.n = n;
    r.q = base.q();
    r.qn = qn;
    const u64 D1 = axis == Axis::One ? qn * c.d1() : c.d1();
    const u64 D2 = axis == Axis::Two ? qn * c.d2() : c.d2();
    for (int family : {1, 2}) {
        for (const Fq &j : z.ss.js) {
            const Fq s = ez(j);
            const bool twisted_here = (family == 1) == (axis == Axis::One);
            const Fq arg = twisted_here ? s.frobenius(frob_steps) : s;
            const UniPoly res = family == 1 ? c.poly().at_x1(arg) : c.poly().at_x2(arg);
            if (res.is_zero()) throw Error(Errc::CommonComponent, "curve contains a component of Z");
            // the other variable is twisted when the line is not on the twisted axis
            const u64 deg = static_cast<u64>(res.degree()) * (twisted_here ? 1 : qn);
            const u64 full = family == 1 ? D2 : D1;
            ZComponent comp{family, j, deg, full - deg};
            (family == 1 ? r.cz1 : r.cz2) += full;
            r.components.push_back(comp);
        }
    }
    r.total = r.cz1 + r.cz2;
    return r;
}

} // namespace detail

inline ZIntersection intersect_with_Z(const GlobalCurve &c, const NonOrdDivisor &z, Axis axis, u64 n) {
    ZIntersection r = detail::z_counts(c, z, axis, n);
    const ZIntersection base = n == 0 ? r : detail::z_counts(c, z, axis, 0);
    r.base_cz1 = base.cz1;
    r.base_cz2 = base.cz2;
    r.expected_total = axis == Axis::One ? r.qn * base.cz2 + base.cz1 : r.qn * base.cz1 + base.cz2;
    r.pass = r.total == r.expected_total;
    return r;
}

struct HeightRecord {
    u64 n = 0;
    Axis axis = Axis::One;
    u64 cz1 = 0, cz2 = 0; // (C.Z1), (C.Z2) of the untwisted curve
    u64 total = 0;        // (C_n . Z)
    Rational h;
    Rational closed_form;
    std::optional<Rational> ratio; // h(n) / h(n-1)
};

inline std::vector<HeightRecord> faltings_height_series(const GlobalCurve &c, const NonOrdDivisor &z, Axis axis,
                                                        u64 n_max) {
    const auto pm1 = static_cast<std::int64_t>(c.ctx().p() - 1);
    std::vector<HeightRecord> out;
    for (u64 n = 0; n <= n_max; ++n) {
        const ZIntersection zi = intersect_with_Z(c, z, axis, n);
        HeightRecord rec;
        rec.n = n;
        rec.axis = axis;
        rec.cz1 = zi.base_cz1;
        rec.cz2 = zi.base_cz2;
        rec.total = zi.total;
        rec.h = Rational(static_cast<std::int64_t>(zi.total), pm1);
        const u64 lead = axis == Axis::One ? zi.base_cz2 : zi.base_cz1;
        const u64 rest = axis == Axis::One ? zi.base_cz1 : zi.base_cz2;
        rec.closed_form = Rational(static_cast<std::int64_t>(zi.qn), 1) * Rational(static_cast<std::int64_t>(lead), pm1) +
                          Rational(static_cast<std::int64_t>(rest), pm1);
        if (!out.empty() && out.back().h.num() != 0) rec.ratio = rec.h / out.back().h;
        out.push_back(rec);
    }
    return out;
}

struct IntersectionPoint {
    std::string chart; // "affine", "x1=inf", "x2=inf", "corner"
    unsigned degree = 1;
    Fq x1, x2; // chart coordinates; 0 stands for the point at infinity
    std::size_t multiplicity = 0;
};

struct BezoutReport {
    u64 expected = 0;
    u64 found = 0;
    bool complete = false;
    unsigned m_reached = 0;
    std::vector<IntersectionPoint> points;
};

class SearchExhausted : public Error {
  public:
    explicit SearchExhausted(BezoutReport r)
        : Error(Errc::FieldSearchExhausted, "found " + std::to_string(r.found) + " of " + std::to_string(r.expected) +
                                                " intersections up to degree " + std::to_string(r.m_reached)),
          report_(std::move(r)) {}
    const BezoutReport &report() const { return report_; }
    u64 deficit() const { return report_.expected - report_.found; }

  private:
    BezoutReport report_;
};

/// Enumerates the points of C n D over F_{p^m} for m = k, 2k, ... <= m_max in
/// all four charts and adds their local multiplicities. Each point is counted
/// at the degree of its field of definition. Every degree up to m_max is
/// searched so that an overcount is detected rather than masked.
inline BezoutReport sum_of_local_mults(const GlobalCurve &c, const GlobalCurve &d, unsigned m_max) {
    const u64 expected = global_intersection(c, d);
    const FieldCtx &base = c.ctx();
    const unsigned k = base.k();
    BezoutReport rep;
    rep.expected = expected;

    const BiPoly c_w1 = c.poly().reversed(Axis::One, c.d1()), d_w1 = d.poly().reversed(Axis::One, d.d1());
    const BiPoly c_w2 = c.poly().reversed(Axis::Two, c.d2()), d_w2 = d.poly().reversed(Axis::Two, d.d2());
    const BiPoly c_ww = c_w1.reversed(Axis::Two, c.d2()), d_ww = d_w1.reversed(Axis::Two, d.d2());

    auto swap_vars = [](const BiPoly &f) {
        BiPoly r(f.ctx());
        for (const auto &[key, v] : f.terms()) r.add_term(key.second, key.first, v);
        return r;
    };

    for (unsigned m = k; m <= m_max; m += k) {
        const FieldPtr F = make_field(base.p(), m);
        const FieldEmbedding &emb = embedding(base, *F);
        rep.m_reached = m;
        auto def_degree = [&](const Fq &a, const Fq &b) {
            return static_cast<unsigned>(detail::lcm_u(detail::lcm_u(k, a.degree()), b.degree()));
        };
        auto add_point = [&](const char *chart, const BiPoly &f, const BiPoly &g, const Fq &a, const Fq &b) {
            const LocalMult lm = local_mult_oracle(f.translated(a, b), g.translated(a, b), 64);
            rep.points.push_back({chart, def_degree(a, b), a, b, lm.value});
            rep.found += lm.value;
        };
        // points with the first chart coordinate equal to a
        auto line_points = [&](const char *chart, const BiPoly &f, const BiPoly &g, const Fq &a) {
            const UniPoly h = gcd(f.at_x1(a), g.at_x1(a));
            if (h.is_zero()) throw Error(Errc::CommonComponent, "curves share a line");
            if (h.degree() <= 0) return;
            for (const auto &rm : roots_in_extension(h, m))
                if (def_degree(a, rm.root) == m) add_point(chart, f, g, a, rm.root);
        };

        const BiPoly ca = c.poly().mapped(emb), da = d.poly().mapped(emb);
        for (u64 i = 0; i < F->q(); ++i) line_points("affine", ca, da, F->elem(i));
        line_points("x1=inf", c_w1.mapped(emb), d_w1.mapped(emb), F->zero());
        const std::size_t before = rep.points.size();
        line_points("x2=inf", swap_vars(c_w2.mapped(emb)), swap_vars(d_w2.mapped(emb)), F->zero());
        for (std::size_t i = before; i < rep.points.size(); ++i) std::swap(rep.points[i].x1, rep.points[i].x2);
        if (m == k) {
            const BiPoly cc = c_ww.mapped(emb), dc = d_ww.mapped(emb);
            const Fq z = F->zero();
            if (cc(z, z).is_zero() && dc(z, z).is_zero()) add_point("corner", cc, dc, z, z);
        }
    }
    rep.complete = rep.found == expected;
    if (rep.found > expected) throw Error(Errc::InternalMismatch, "local multiplicities exceed the intersection number");
    if (!rep.complete) throw SearchExhausted(rep);
    return rep;
}

} // namespace pfrob
