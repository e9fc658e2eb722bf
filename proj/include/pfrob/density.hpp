#pragma once

// Frobenius orbits, the sets S_n, Frobenius-isogenous pairs between two curves
// and a rank test for Zariski density of a pair set in C x D.

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pfrob/bipoly.hpp"
#include "pfrob/errors.hpp"
#include "pfrob/ffield.hpp"
#include "pfrob/linalg.hpp"
#include "pfrob/surface.hpp"

namespace pfrob {

struct SurfacePoint {
    Fq x1, x2;

    friend bool operator==(const SurfacePoint &a, const SurfacePoint &b) { return a.x1 == b.x1 && a.x2 == b.x2; }
    friend bool operator<(const SurfacePoint &a, const SurfacePoint &b) {
        return std::tie(a.x1, a.x2) < std::tie(b.x1, b.x2);
    }
};

struct OrbitData {
    SurfacePoint point;
    unsigned r1 = 1, r2 = 1, r = 1;
};

inline OrbitData frob_orbit(const SurfacePoint &x) {
    OrbitData o{x, x.x1.degree(), x.x2.degree(), 1};
    o.r = static_cast<unsigned>(detail::lcm_u(o.r1, o.r2));
    if (x.x1.frobenius(o.r) != x.x1 || x.x2.frobenius(o.r) != x.x2)
        throw Error(Errc::InternalMismatch, "Frobenius period does not fix the point");
    return o;
}

struct SnCount {
    u64 n = 0;
    std::size_t count = 0;
    std::string method; // "graph" or "enumeration"
};

namespace detail {

// x2 = h(x1) when f = a*x2 + b(x1) with a a nonzero constant.
inline std::optional<UniPoly> graph_over(const BiPoly &f, Axis free) {
    const u64 solved_deg = free == Axis::One ? f.deg_x2() : f.deg_x1();
    if (solved_deg != 1) return std::nullopt;
    Fq lead;
    std::vector<Fq> rest;
    for (const auto &[k, c] : f.terms()) {
        const u64 es = free == Axis::One ? k.second : k.first;
        const u64 ef = free == Axis::One ? k.first : k.second;
        if (es == 1) {
            if (ef != 0) return std::nullopt;
            lead = c;
        } else {
            if (rest.size() <= ef) rest.resize(ef + 1, f.ctx().zero());
            rest[ef] = c;
        }
    }
    const Fq s = -lead.inv();
    for (auto &c : rest) c = c * s;
    return UniPoly(f.ctx(), std::move(rest));
}

// h(x)^e by splitting e into base-p digits; h^{p^r} only moves and twists
// coefficients.
inline UniPoly frob_pow(const UniPoly &h, u64 e) {
    const FieldCtx &ctx = h.ctx();
    UniPoly result = UniPoly::constant(ctx.one());
    u64 r = 0;
    while (e) {
        const u64 digit = e % ctx.p();
        e /= ctx.p();
        if (digit) {
            const u64 step = checked_pow(ctx.p(), r);
            std::vector<Fq> c(static_cast<std::size_t>(std::max<long>(h.degree(), 0)) * step + 1, ctx.zero());
            for (long i = 0; i <= h.degree(); ++i) c[static_cast<std::size_t>(i) * step] = h.coeff(i).frobenius(r);
            result = result * UniPoly(ctx, std::move(c)).pow(digit);
        }
        ++r;
    }
    return result;
}

// F(x, h(x)) (free = 1) or F(h(x), x) (free = 2).
inline UniPoly substitute_graph(const BiPoly &f, const UniPoly &h, Axis free) {
    const FieldCtx &ctx = f.ctx();
    std::map<u64, UniPoly> hp;
    UniPoly acc(ctx);
    for (const auto &[k, c] : f.terms()) {
        const u64 ef = free == Axis::One ? k.first : k.second;
        const u64 es = free == Axis::One ? k.second : k.first;
        auto it = hp.find(es);
        if (it == hp.end()) it = hp.emplace(es, frob_pow(h, es)).first;
        acc = acc + UniPoly::monomial(c, ef) * it->second;
    }
    return acc;
}

} // namespace detail

/// Number of distinct affine points of pullback(C, axis, n) n D.
inline SnCount s_n_count(const GlobalCurve &c, const GlobalCurve &d, Axis axis, u64 n, unsigned m_max) {
    const GlobalCurve cn = pullback_global(c, axis, n);
    auto count_graph = [&](const BiPoly &graph_src, const BiPoly &other, Axis free) -> std::optional<SnCount> {
        auto h = detail::graph_over(graph_src, free);
        if (!h) return std::nullopt;
        const UniPoly u = detail::substitute_graph(other, *h, free);
        if (u.is_zero()) throw Error(Errc::CommonComponent, "pullback and D share a component");
        return SnCount{n, distinct_root_count(u), "graph"};
    };
    for (Axis free : {Axis::One, Axis::Two}) {
        if (auto r = count_graph(d.poly(), cn.poly(), free)) return *r;
        if (auto r = count_graph(cn.poly(), d.poly(), free)) return *r;
    }
    try {
        const BezoutReport rep = sum_of_local_mults(cn, d, m_max);
        std::size_t affine = 0;
        for (const auto &pt : rep.points) affine += pt.chart == "affine";
        return {n, affine, "enumeration"};
    } catch (const SearchExhausted &e) {
        std::size_t affine = 0;
        for (const auto &pt : e.report().points) affine += pt.chart == "affine";
        throw Error(Errc::FieldSearchExhausted, "S_n enumeration incomplete; lower bound " + std::to_string(affine));
    }
}

struct IsogenyPair {
    SurfacePoint x, y;
    unsigned a1 = 0, a2 = 0;
    bool forward = true; // y = (x1^{p^a1}, x2^{p^a2}); otherwise x is the image of y

    friend bool operator<(const IsogenyPair &a, const IsogenyPair &b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); }
};

inline constexpr u64 kPairBudget = u64{1} << 26;

/// Affine points of the curve over F_{p^m}.
inline std::vector<SurfacePoint> curve_points(const GlobalCurve &c, unsigned m) {
    const FieldPtr F = make_field(c.ctx().p(), m);
    const BiPoly f = c.poly().mapped(embedding(c.ctx(), *F));
    std::vector<SurfacePoint> out;
    for (u64 i = 0; i < F->q(); ++i) {
        const Fq a = F->elem(i);
        const UniPoly fa = f.at_x1(a);
        if (fa.is_zero()) {
            for (u64 j = 0; j < F->q(); ++j) out.push_back({a, F->elem(j)});
            continue;
        }
        if (fa.degree() <= 0) continue;
        for (const auto &rm : roots_in_extension(fa, m)) out.push_back({a, rm.root});
    }
    return out;
}

inline std::vector<IsogenyPair> isogenous_pairs(const GlobalCurve &c, const GlobalCurve &d, unsigned m,
                                                unsigned a_max) {
    if (&c.ctx() != &d.ctx()) throw Error(Errc::FieldMismatch, "curves over different fields");
    const u64 pm = detail::checked_pow(c.ctx().p(), m);
    const unsigned __int128 cost =
        static_cast<unsigned __int128>(pm) * pm * (u64{a_max} + 1) * (u64{a_max} + 1);
    if (pm == 0 || cost > kPairBudget) throw Error(Errc::BudgetExceeded, "pair enumeration exceeds the budget");
    if (m % c.ctx().k() != 0) throw Error(Errc::FieldMismatch, "m must be a multiple of the coefficient degree");
    const FieldPtr F = make_field(c.ctx().p(), m);
    const BiPoly cf = c.poly().mapped(embedding(c.ctx(), *F)), df = d.poly().mapped(embedding(c.ctx(), *F));
    const auto cp = curve_points(c, m), dp = curve_points(d, m);

    std::set<IsogenyPair> pairs;
    for (unsigned a1 = 0; a1 <= a_max; ++a1)
        for (unsigned a2 = 0; a2 <= a_max; ++a2) {
            for (const auto &x : cp) {
                const SurfacePoint y{x.x1.frobenius(a1), x.x2.frobenius(a2)};
                if (df(y.x1, y.x2).is_zero()) pairs.insert({x, y, a1, a2, true});
            }
            for (const auto &y : dp) {
                const SurfacePoint x{y.x1.frobenius(a1), y.x2.frobenius(a2)};
                if (cf(x.x1, x.x2).is_zero()) pairs.insert({x, y, a1, a2, false});
            }
        }
    return {pairs.begin(), pairs.end()};
}

using Bound4 = std::array<unsigned, 4>;

struct WitnessTerm {
    std::array<unsigned, 4> exps; // x1, x2, y1, y2
    Fq coeff;
};

struct DensityVerdict {
    bool dense = false;
    Bound4 bound{};
    std::size_t monomials = 0;
    std::size_t pairs = 0;
    std::size_t rank_pairs = 0;
    std::size_t rank_reference = 0;
    std::size_t distinct_x = 0, distinct_y = 0;
    std::vector<WitnessTerm> witness; // a separating hypersurface when not dense
};

namespace detail {

inline std::vector<u64> monomial_row(const Fq &a, const Fq &b, unsigned ba, unsigned bb) {
    std::vector<u64> row;
    row.reserve((ba + 1) * (bb + 1));
    for (unsigned i = 0; i <= ba; ++i)
        for (unsigned j = 0; j <= bb; ++j) row.push_back((a.pow(i) * b.pow(j)).index());
    return row;
}

} // namespace detail

/// Compares the rank of the monomial evaluation matrix on the pairs with its
/// rank on all of C(F) x D(F), which factors as rank(C) * rank(D).
inline DensityVerdict density_rank_test(const std::vector<IsogenyPair> &pairs, const Bound4 &b, const GlobalCurve &c,
                                        const GlobalCurve &d, unsigned m) {
    DensityVerdict v;
    v.bound = b;
    v.monomials = static_cast<std::size_t>(b[0] + 1) * (b[1] + 1) * (b[2] + 1) * (b[3] + 1);
    v.pairs = pairs.size();
    std::set<SurfacePoint> xs, ys;
    for (const auto &pr : pairs) xs.insert(pr.x), ys.insert(pr.y);
    v.distinct_x = xs.size();
    v.distinct_y = ys.size();
    if (pairs.size() < v.monomials)
        throw Error(Errc::InsufficientPairs,
                    std::to_string(pairs.size()) + " pairs for " + std::to_string(v.monomials) + " monomials");

    const FieldPtr F = make_field(c.ctx().p(), m);
    const std::size_t nx = (b[0] + 1) * (b[1] + 1), ny = (b[2] + 1) * (b[3] + 1);
    std::vector<std::vector<u64>> rows;
    for (const auto &pr : pairs) {
        const auto rx = detail::monomial_row(pr.x.x1, pr.x.x2, b[0], b[1]);
        const auto ry = detail::monomial_row(pr.y.x1, pr.y.x2, b[2], b[3]);
        std::vector<u64> row(nx * ny);
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < ny; ++j) row[i * ny + j] = F->mul(rx[i], ry[j]);
        rows.push_back(std::move(row));
    }
    v.rank_pairs = matrix_rank(*F, rows, nx * ny);

    std::vector<std::vector<u64>> ac, bd;
    for (const auto &pt : curve_points(c, m)) ac.push_back(detail::monomial_row(pt.x1, pt.x2, b[0], b[1]));
    for (const auto &pt : curve_points(d, m)) bd.push_back(detail::monomial_row(pt.x1, pt.x2, b[2], b[3]));
    v.rank_reference = matrix_rank(*F, ac, nx) * matrix_rank(*F, bd, ny);
    v.dense = v.rank_pairs == v.rank_reference;
    if (v.dense) return v;

    // a kernel vector of the pair matrix that does not vanish on C x D
    for (const auto &ker : nullspace(*F, rows, nx * ny)) {
        bool separates = false;
        for (std::size_t r = 0; r < ac.size() && !separates; ++r) {
            std::vector<u64> t(ny, 0); // row of A V
            for (std::size_t i = 0; i < nx; ++i)
                if (ac[r][i])
                    for (std::size_t j = 0; j < ny; ++j) t[j] = F->add(t[j], F->mul(ac[r][i], ker[i * ny + j]));
            for (const auto &row : bd) {
                u64 s = 0;
                for (std::size_t j = 0; j < ny; ++j) s = F->add(s, F->mul(t[j], row[j]));
                if (s) {
                    separates = true;
                    break;
                }
            }
        }
        if (!separates) continue;
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < ny; ++j) {
                const u64 cv = ker[i * ny + j];
                if (!cv) continue;
                const auto e0 = static_cast<unsigned>(i / (b[1] + 1)), e1 = static_cast<unsigned>(i % (b[1] + 1));
                const auto e2 = static_cast<unsigned>(j / (b[3] + 1)), e3 = static_cast<unsigned>(j % (b[3] + 1));
                v.witness.push_back({{e0, e1, e2, e3}, F->elem(cv)});
            }
        break;
    }
    return v;
}

} // namespace pfrob
