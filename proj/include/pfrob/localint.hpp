#pragma once

// Local intersection multiplicities at the origin of A^2 over F_q.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pfrob/errors.hpp"
#include "pfrob/linalg.hpp"
#include "pfrob/pseries.hpp"

namespace pfrob {

inline constexpr std::size_t kPrecisionCap = std::size_t{1} << 14;

enum class MultMethod { BranchValuation, LinearAlgebraOracle };

inline const char *to_string(MultMethod m) {
    return m == MultMethod::BranchValuation ? "branch-valuation" : "linear-algebra-oracle";
}

struct LocalMult {
    std::size_t value = 0;
    MultMethod method = MultMethod::BranchValuation;
    std::size_t precision_used = 0;
};

class CurveGerm {
  public:
    explicit CurveGerm(TruncSeries2 f) : f_(std::move(f)) {
        const AxisDecomposition ad = axis_decompose(f_);
        t1_divides_ = !ad.e.is_finite();
        t2_divides_ = !ad.d.is_finite();
    }

    const TruncSeries2 &f() const { return f_; }
    const FieldCtx &ctx() const { return f_.ctx(); }
    bool t1_divides() const { return t1_divides_; }
    bool t2_divides() const { return t2_divides_; }

    void require_transverse() const {
        if (t1_divides_) throw Error(Errc::AxisContainment, "t1 divides f");
        if (t2_divides_) throw Error(Errc::AxisContainment, "t2 divides f");
    }

  private:
    TruncSeries2 f_;
    bool t1_divides_ = false;
    bool t2_divides_ = false;
};

struct BranchOptions {
    std::size_t initial_precision = 32;
    std::size_t cap = kPrecisionCap;
};

namespace detail {

// Degree bound of f(alpha1, alpha2) when everything is a polynomial.
inline std::optional<std::size_t> exact_substitution_degree(const TruncSeries2 &f, const BranchParam &b) {
    if (!f.is_exact() || !b.is_exact()) return std::nullopt;
    const std::size_t d1 = b.alpha1().size(), d2 = b.alpha2().size();
    std::size_t deg = 0;
    for (const auto &[k, c] : f.terms())
        deg = std::max(deg, sat_add(sat_mul(k.first, d1), sat_mul(k.second, d2)));
    return deg;
}

} // namespace detail

/// val_u f(alpha1(u), alpha2(u)), doubling the working precision until the
/// valuation is determined. Valuations up to `cap` are resolved.
inline LocalMult branch_intersection_number(const CurveGerm &germ, const BranchParam &beta, BranchOptions opt = {}) {
    const std::size_t limit = opt.cap + 1;
    std::size_t w = std::min(std::max<std::size_t>(opt.initial_precision, 2), limit);
    for (;;) {
        const BranchParam b = beta.at_precision(w);
        const TruncSeries1 s = substitute_branch(germ.f(), b, w);
        const Valuation v = s.valuation();
        if (v.is_finite()) return {v.value(), MultMethod::BranchValuation, w};
        const bool input_limited = s.precision() < w;
        if (w >= limit || input_limited) {
            if (v.is_infinite()) throw Error(Errc::BranchOnCurve, "branch lies on the curve");
            if (auto deg = detail::exact_substitution_degree(germ.f(), b); deg && *deg <= (std::size_t{1} << 22)) {
                const TruncSeries1 full = substitute_branch(germ.f(), b, *deg + 1);
                if (full.valuation().is_infinite() || full.valuation().is_indeterminate())
                    throw Error(Errc::BranchOnCurve, "branch lies on the curve");
                throw Error(Errc::PrecisionCapExceeded,
                            "valuation " + std::to_string(full.valuation().value()) + " exceeds the precision cap");
            }
            if (input_limited && w < limit)
                throw Error(Errc::PrecisionCapExceeded,
                            "inputs only known to precision " + std::to_string(s.precision()));
            throw Error(Errc::BranchOnCurve, "valuation indeterminate at the precision cap");
        }
        w = std::min(2 * w, limit);
    }
}

/// dim k[[t1,t2]]/(f,g) by stabilization of D(N) = dim k[t]/(f, g, m^N).
inline LocalMult local_mult_oracle(const TruncSeries2 &f, const TruncSeries2 &g, std::size_t n_max = 40) {
    if (&f.ctx() != &g.ctx()) throw Error(Errc::FieldMismatch, "germs over different fields");
    if (!f.is_exact() || !g.is_exact()) throw Error(Errc::InvalidArgument, "oracle needs polynomial germs");
    if (!f.constant_term().is_zero() || !g.constant_term().is_zero())
        throw Error(Errc::OriginNotOnCurve, "germ does not pass through the origin");
    if (f.is_zero() || g.is_zero()) throw Error(Errc::CommonComponent, "zero germ");
    const FieldCtx &ctx = f.ctx();

    // Any quotient of length L has m^L in the ideal, and L <= deg f * deg g
    // when f and g meet properly, so D is constant from that N on.
    const std::size_t bezout = static_cast<std::size_t>(f.total_degree() * g.total_degree());

    auto dim = [&](std::size_t n) -> std::size_t {
        std::vector<std::size_t> offset(n + 1, 0);
        for (std::size_t d = 0; d < n; ++d) offset[d + 1] = offset[d] + d + 1;
        const std::size_t cols = offset[n];
        auto col = [&](u64 i, u64 j) { return offset[i + j] + static_cast<std::size_t>(j); };
        RowEchelon ech(ctx, cols);
        for (const TruncSeries2 *h : {&f, &g}) {
            const std::size_t ord = static_cast<std::size_t>(*h->order());
            for (std::size_t s = 0; s + ord < n; ++s) {
                for (std::size_t b = 0; b <= s; ++b) {
                    const std::size_t a = s - b;
                    std::vector<u64> row(cols, 0);
                    for (const auto &[k, c] : h->terms())
                        if (k.first + k.second + s < n) row[col(k.first + a, k.second + b)] = c.index();
                    ech.insert(std::move(row));
                    if (ech.full()) return 0;
                }
            }
        }
        return cols - ech.rank();
    };

    const std::size_t n_lim = std::min(n_max, bezout + 1);
    std::vector<std::size_t> seq{dim(1)};
    for (std::size_t n = 2; n <= n_lim + 1; ++n) {
        seq.push_back(dim(n));
        if (seq.back() == seq[seq.size() - 2]) return {seq.back(), MultMethod::LinearAlgebraOracle, n};
    }
    if (n_lim == bezout + 1) throw Error(Errc::CommonComponent, "quotient dimension exceeds the Bezout bound");
    if (seq.size() >= 4) {
        const std::size_t s = seq.size();
        const long d1 = static_cast<long>(seq[s - 1]) - static_cast<long>(seq[s - 2]);
        const long d2 = static_cast<long>(seq[s - 2]) - static_cast<long>(seq[s - 3]);
        const long d3 = static_cast<long>(seq[s - 3]) - static_cast<long>(seq[s - 4]);
        if (d1 > 0 && d1 == d2 && d2 == d3) throw Error(Errc::CommonComponent, "quotient dimension grows linearly");
    }
    throw Error(Errc::NotStabilized, "quotient dimension did not stabilize by N = " + std::to_string(n_lim + 1));
}

struct TwistEntry {
    u64 n = 0;
    LocalMult mult;
    std::optional<std::size_t> expected;
    bool pass = true;
};

struct TwistReport {
    Axis axis = Axis::One;
    int case_kind = 1;
    std::size_t e = 0, d = 0;
    std::optional<std::size_t> k1, k2;
    /// Case 1: the stable value e*k2 (axis 1) or d*k1 (axis 2).
    std::optional<std::size_t> stable_value;
    /// Case 1: first n with p^n k_twisted > stable value.
    std::optional<u64> crossover_bound;
    /// Case 1: first listed n from which every later entry equals the stable value.
    std::optional<u64> observed_crossover;
    std::vector<TwistEntry> entries;
    bool pass = true;
};

namespace detail {

inline Valuation branch_valuation(const BranchParam &beta, Axis a, std::size_t cap) {
    std::size_t w = std::max<std::size_t>(beta.precision() == kExact ? 1 : beta.precision(), 32);
    for (;;) {
        const BranchParam b = beta.at_precision(std::min(w, cap));
        const Valuation v = b.alpha(a).valuation();
        if (!v.is_indeterminate() || w >= cap || !b.can_relift()) return v;
        w *= 2;
    }
}

} // namespace detail

inline TwistReport twisted_intersection_sequence(const CurveGerm &germ, const BranchParam &beta, Axis axis,
                                                 std::span<const u64> n_list, BranchOptions opt = {}) {
    germ.require_transverse();
    const AxisDecomposition ad = axis_decompose(germ.f());
    TwistReport rep;
    rep.axis = axis;
    rep.e = ad.e.value();
    rep.d = ad.d.value();
    const Valuation v1 = detail::branch_valuation(beta, Axis::One, opt.cap);
    const Valuation v2 = detail::branch_valuation(beta, Axis::Two, opt.cap);
    if (v1.is_finite()) rep.k1 = v1.value();
    if (v2.is_finite()) rep.k2 = v2.value();

    const Axis other = other_axis(axis);
    const Valuation &v_other = other == Axis::Two ? v2 : v1;
    const Valuation &v_tw = axis == Axis::One ? v1 : v2;
    const std::size_t restrict_val = axis == Axis::One ? rep.e : rep.d; // f on {t_axis = 0}
    const std::size_t twist_val = axis == Axis::One ? rep.d : rep.e;    // f on {t_other = 0}
    const u64 p = germ.ctx().p();

    if (v_other.is_infinite()) {
        rep.case_kind = 2;
        if (!v_tw.is_finite()) throw Error(Errc::InvalidArgument, "branch is constant");
    } else if (v_other.is_finite()) {
        rep.case_kind = 1;
        rep.stable_value = restrict_val * v_other.value();
        if (v_tw.is_finite()) {
            u64 n = 0;
            unsigned __int128 pn = 1;
            while (pn * v_tw.value() <= *rep.stable_value) {
                pn *= p;
                ++n;
            }
            rep.crossover_bound = n;
        } else {
            rep.crossover_bound = 0;
        }
    } else {
        throw Error(Errc::PrecisionCapExceeded, "branch valuation indeterminate at the precision cap");
    }

    for (u64 n : n_list) {
        TwistEntry ent;
        ent.n = n;
        ent.mult = branch_intersection_number(CurveGerm(partial_frobenius_pullback(germ.f(), axis, n)), beta, opt);
        if (rep.case_kind == 2) {
            const u64 pn = detail::checked_pow(p, n);
            ent.expected = static_cast<std::size_t>(twist_val * v_tw.value() * pn);
            ent.pass = ent.mult.value == *ent.expected;
        } else if (n >= *rep.crossover_bound) {
            ent.expected = rep.stable_value;
            ent.pass = ent.mult.value == *ent.expected;
        }
        rep.pass = rep.pass && ent.pass;
        rep.entries.push_back(ent);
    }
    if (rep.case_kind == 1) {
        for (std::size_t i = rep.entries.size(); i-- > 0;) {
            if (rep.entries[i].mult.value != *rep.stable_value) break;
            rep.observed_crossover = rep.entries[i].n;
        }
    }
    return rep;
}

/// Intersection of the twisted germ with Z1 = {t1 = 0} or Z2 = {t2 = 0}.
inline LocalMult axis_intersection_numbers(const CurveGerm &germ, Axis axis_curve, u64 n, Axis twist = Axis::One,
                                           BranchOptions opt = {}) {
    if (axis_curve == Axis::One && germ.t1_divides()) throw Error(Errc::AxisContainment, "t1 divides f");
    if (axis_curve == Axis::Two && germ.t2_divides()) throw Error(Errc::AxisContainment, "t2 divides f");
    const FieldCtx &ctx = germ.ctx();
    const TruncSeries1 u = TruncSeries1::variable(ctx), zero(ctx);
    const BranchParam z = axis_curve == Axis::One ? BranchParam(zero, u) : BranchParam(u, zero);
    return branch_intersection_number(CurveGerm(partial_frobenius_pullback(germ.f(), twist, n)), z, opt);
}

} // namespace pfrob
