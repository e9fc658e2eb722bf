#pragma once

// Seeded end-to-end verification suites. Each suite returns a report with one
// entry per check; informational entries never affect the verdict.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "pfrob/density.hpp"
#include "pfrob/localint.hpp"
#include "pfrob/parser.hpp"
#include "pfrob/sslocus.hpp"
#include "pfrob/surface.hpp"

namespace pfrob {

#ifndef PFROB_VERSION
#define PFROB_VERSION "0.0.0"
#endif

inline constexpr const char *kVersion = PFROB_VERSION;

using json = nlohmann::ordered_json;

struct Check {
    std::string name;
    json expected;
    json actual;
    bool pass = false;
    bool informational = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    json tables = json::object();

    bool pass() const {
        for (const auto &c : checks)
            if (!c.informational && !c.pass) return false;
        return true;
    }
    const Check *first_failure() const {
        for (const auto &c : checks)
            if (!c.informational && !c.pass) return &c;
        return nullptr;
    }
    void add(std::string name, json expected, json actual, bool pass, bool informational = false) {
        checks.push_back({std::move(name), std::move(expected), std::move(actual), pass, informational});
    }
    void merge(const SuiteReport &o) {
        for (const auto &c : o.checks) {
            Check k = c;
            k.name = o.suite + "/" + c.name;
            checks.push_back(std::move(k));
        }
        tables[o.suite] = o.tables;
    }
};

inline json to_json(const SuiteReport &r) {
    json checks = json::array();
    for (const auto &c : r.checks) {
        json j;
        j["name"] = c.name;
        j["expected"] = c.expected;
        j["actual"] = c.actual;
        j["pass"] = c.pass;
        if (c.informational) j["informational"] = true;
        checks.push_back(std::move(j));
    }
    json out;
    out["suite"] = r.suite;
    out["pass"] = r.pass();
    if (const Check *f = r.first_failure()) out["first_failure"] = f->name;
    out["checks"] = std::move(checks);
    out["tables"] = r.tables;
    return out;
}

struct VerifyConfig {
    std::optional<u64> p; // restricts prime lists to this prime
    u64 seed = 1;
};

namespace detail {

using Rng = std::mt19937_64;

inline Rng make_rng(u64 seed, u64 salt) { return Rng(seed * 0x9E3779B97F4A7C15ULL ^ salt); }

inline u64 below(Rng &rng, u64 n) { return rng() % n; }

inline Fq rand_elem(Rng &rng, const FieldCtx &ctx) { return ctx.elem(below(rng, ctx.q())); }
inline Fq rand_unit(Rng &rng, const FieldCtx &ctx) { return ctx.elem(1 + below(rng, ctx.q() - 1)); }

inline std::vector<u64> primes_for(const VerifyConfig &cfg, std::vector<u64> defaults) {
    if (cfg.p) return {*cfg.p};
    return defaults;
}

// Random polynomial germ through the origin of total degree <= max_deg.
inline TruncSeries2 rand_germ(Rng &rng, const FieldCtx &ctx, u64 max_deg) {
    const u64 deg = 1 + below(rng, max_deg);
    for (;;) {
        TruncSeries2 f(ctx);
        for (u64 s = 1; s <= deg; ++s)
            for (u64 i = 0; i <= s; ++i)
                if (below(rng, 2)) f.add_term(i, s - i, rand_unit(rng, ctx));
        if (!f.is_zero()) return f;
    }
}

inline TruncSeries2 rand_transverse_germ(Rng &rng, const FieldCtx &ctx, u64 max_deg) {
    for (;;) {
        TruncSeries2 f = rand_germ(rng, ctx, max_deg);
        const AxisDecomposition ad = axis_decompose(f);
        if (ad.e.is_finite() && ad.d.is_finite()) return f;
    }
}

// Smooth germ with nonzero linear coefficient in t_solve.
inline TruncSeries2 rand_smooth_germ(Rng &rng, const FieldCtx &ctx, u64 max_deg, Axis solve) {
    TruncSeries2 g = rand_germ(rng, ctx, max_deg);
    const u64 i = solve == Axis::One ? 1 : 0;
    g.add_term(i, 1 - i, -g.coeff(i, 1 - i));
    g.add_term(i, 1 - i, rand_unit(rng, ctx));
    return g;
}

// a_k u^k + ... + a_{k+extra} u^{k+extra} with a_k nonzero.
inline TruncSeries1 rand_branch_component(Rng &rng, const FieldCtx &ctx, std::size_t k, std::size_t extra) {
    std::vector<Fq> c(k + extra + 1, ctx.zero());
    c[k] = rand_unit(rng, ctx);
    for (std::size_t i = k + 1; i < c.size(); ++i) c[i] = rand_elem(rng, ctx);
    return TruncSeries1(ctx, std::move(c), kExact);
}

inline BiPoly rand_bipoly(Rng &rng, const FieldCtx &ctx, u64 d1, u64 d2) {
    BiPoly f(ctx);
    for (u64 i = 0; i <= d1; ++i)
        for (u64 j = 0; j <= d2; ++j)
            if (below(rng, 2)) f.add_term(i, j, rand_unit(rng, ctx));
    f.add_term(d1, d2, -f.coeff(d1, d2));
    f.add_term(d1, d2, rand_unit(rng, ctx));
    return f;
}

// g*h + r with r of order >= 2: forces contact beyond the transverse case.
inline TruncSeries2 rand_tangent_germ(Rng &rng, const FieldCtx &ctx, const TruncSeries2 &g, u64 max_deg) {
    const u64 lo = 2 + below(rng, max_deg - 1);
    for (;;) {
        TruncSeries2 h(ctx);
        h.add_term(0, 0, rand_elem(rng, ctx));
        for (u64 i = 0; i <= 1; ++i)
            if (below(rng, 2)) h.add_term(i, 1 - i, rand_unit(rng, ctx));
        TruncSeries2 f = g * h;
        for (u64 s = lo; s <= max_deg; ++s)
            for (u64 i = 0; i <= s; ++i)
                if (below(rng, 3) == 0) f.add_term(i, s - i, rand_unit(rng, ctx));
        if (!f.is_zero()) return f;
    }
}

inline std::pair<u64, u64> rand_bidegree(Rng &rng, u64 max) {
    for (;;) {
        const u64 a = below(rng, max + 1), b = below(rng, max + 1);
        if (a || b) return {a, b};
    }
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline json js_set(const std::vector<Fq> &v) {
    json a = json::array();
    for (const auto &x : v) a.push_back(format_element(x));
    return a;
}

} // namespace detail

/// Branch valuation against the linear-algebra oracle on random pairs.
inline SuiteReport verify_oracle_equivalence(const VerifyConfig &cfg, std::size_t per_prime = 50) {
    SuiteReport rep{"oracle-equivalence", {}, json::object()};
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t total = 0, skipped = 0;
    json rows = json::array();
    for (u64 p : detail::primes_for(cfg, {2, 3, 5, 7})) {
        const FieldPtr F = make_field(p, 1);
        auto rng = detail::make_rng(cfg.seed, 0x100 + p);
        std::size_t ok = 0, done = 0;
        json first_mismatch;
        std::map<std::size_t, std::size_t> histogram;
        while (done < per_prime) {
            const Axis solve = detail::below(rng, 2) ? Axis::Two : Axis::One;
            const bool tangent = detail::below(rng, 2);
            const TruncSeries2 g = detail::rand_smooth_germ(rng, *F, tangent ? 3 : 5, solve);
            const TruncSeries2 f = tangent ? detail::rand_tangent_germ(rng, *F, g, 6) : detail::rand_germ(rng, *F, 5);
            std::size_t oracle_value = 0;
            try {
                oracle_value = local_mult_oracle(f, g).value;
            } catch (const Error &e) {
                if (e.code() != Errc::CommonComponent) throw;
                ++skipped;
                continue;
            }
            ++done;
            std::optional<std::size_t> branch_value;
            try {
                branch_value = branch_intersection_number(CurveGerm(f), hensel_parametrize(g, solve, 32)).value;
            } catch (const Error &) {
            }
            ++histogram[oracle_value];
            if (branch_value == oracle_value)
                ++ok;
            else if (first_mismatch.is_null())
                first_mismatch = {{"f", to_string(f)}, {"g", to_string(g)}, {"oracle", oracle_value}};
        }
        total += done;
        rep.add("agreement p=" + std::to_string(p), per_prime, ok, ok == per_prime);
        rows.push_back({{"p", p}, {"pairs", done}, {"agree", ok}, {"oracle_values", histogram}, {"first_mismatch", first_mismatch}});
    }
    rep.add("pairs tested", ">= 200", total, total >= 200 || cfg.p.has_value());
    rep.add("skipped pairs with a common component", "reported", skipped, true, true);
    rep.add("runtime under 60 s", true, detail::seconds_since(t0) < 60.0, detail::seconds_since(t0) < 60.0);
    rep.tables["per_prime"] = rows;
    return rep;
}

/// Twisted sequences with finite k1, k2 stabilize at e*k2 by the crossover bound.
inline SuiteReport verify_case1(const VerifyConfig &cfg, std::size_t per_prime = 13) {
    SuiteReport rep{"case1", {}, json::object()};
    json rows = json::array();
    std::size_t total = 0;
    for (u64 p : detail::primes_for(cfg, {2, 3, 5, 7})) {
        const FieldPtr F = make_field(p, 1);
        auto rng = detail::make_rng(cfg.seed, 0x200 + p);
        const std::size_t count = cfg.p ? 50 : per_prime;
        std::size_t ok = 0;
        for (std::size_t t = 0; t < count; ++t) {
            const TruncSeries2 f = detail::rand_transverse_germ(rng, *F, 4);
            const std::size_t k1 = 1 + detail::below(rng, 3), k2 = 1 + detail::below(rng, 3);
            const BranchParam beta(detail::rand_branch_component(rng, *F, k1, 2),
                                   detail::rand_branch_component(rng, *F, k2, 2));
            const AxisDecomposition ad = axis_decompose(f);
            const std::size_t ek2 = ad.e.value() * k2;
            u64 bound = 0;
            for (u64 pn = 1; pn * k1 <= ek2; pn *= p) ++bound;
            std::vector<u64> ns;
            for (u64 n = 0; n <= bound + 2; ++n) ns.push_back(n);
            const TwistReport tr = twisted_intersection_sequence(CurveGerm(f), beta, Axis::One, ns);
            const bool pass = tr.pass && tr.stable_value == ek2 && tr.crossover_bound == bound &&
                              tr.observed_crossover && *tr.observed_crossover <= bound;
            ok += pass;
            json vals = json::array();
            for (const auto &e : tr.entries) vals.push_back(e.mult.value);
            rows.push_back({{"p", p},
                            {"f", to_string(f)},
                            {"k1", k1},
                            {"k2", k2},
                            {"e", ad.e.value()},
                            {"values", vals},
                            {"stable", ek2},
                            {"crossover_bound", bound},
                            {"observed_crossover", tr.observed_crossover ? json(*tr.observed_crossover) : json()}});
        }
        total += count;
        rep.add("stabilizes at e*k2 p=" + std::to_string(p), count, ok, ok == count);
    }
    rep.add("germs tested", ">= 50", total, total >= 50);
    rep.tables["sequences"] = rows;
    return rep;
}

/// Case 2 and the corollary: d*k1*p^n exactly, Z2 scaling p^n, Z1 constant.
inline SuiteReport verify_corollary(const VerifyConfig &cfg, std::size_t total_germs = 52) {
    SuiteReport rep{"corollary", {}, json::object()};
    const auto primes = detail::primes_for(cfg, {2, 3, 5, 7});
    const std::size_t per_prime = (total_germs + primes.size() - 1) / primes.size();
    json table = json::array();
    std::size_t total = 0;
    for (u64 p : primes) {
        const FieldPtr F = make_field(p, 1);
        auto rng = detail::make_rng(cfg.seed, 0x300 + p);
        std::size_t ok_case2 = 0, ok_z2 = 0, ok_z1 = 0;
        for (std::size_t t = 0; t < per_prime; ++t) {
            const TruncSeries2 f = detail::rand_transverse_germ(rng, *F, 4);
            const std::size_t k1 = 1 + detail::below(rng, 2);
            const BranchParam beta(detail::rand_branch_component(rng, *F, k1, 2), TruncSeries1(*F));
            const CurveGerm germ(f);
            const AxisDecomposition ad = axis_decompose(f);
            const std::size_t d = ad.d.value(), e = ad.e.value();
            std::vector<u64> ns;
            for (u64 n = 0, pn = 1; pn * d * k1 <= kPrecisionCap; ++n, pn *= p) ns.push_back(n);
            const TwistReport tr = twisted_intersection_sequence(germ, beta, Axis::One, ns);
            bool z2 = true, z1 = true;
            u64 pn = 1;
            for (std::size_t i = 0; i < ns.size(); ++i, pn *= p) {
                const std::size_t v2 = axis_intersection_numbers(germ, Axis::Two, ns[i]).value;
                const std::size_t v1 = axis_intersection_numbers(germ, Axis::One, ns[i]).value;
                z2 = z2 && v2 == pn * d;
                z1 = z1 && v1 == e;
                if (t == 0)
                    table.push_back({{"p", p},
                                     {"f", to_string(f)},
                                     {"n", ns[i]},
                                     {"d", d},
                                     {"k1", k1},
                                     {"case2_value", tr.entries[i].mult.value},
                                     {"d_k1_pn", pn * d * k1},
                                     {"C_n.Z2", v2},
                                     {"C_n.Z1", v1}});
            }
            ok_case2 += tr.pass;
            ok_z2 += z2;
            ok_z1 += z1;
        }
        total += per_prime;
        const std::string sp = " p=" + std::to_string(p);
        rep.add("case 2 equals d*k1*p^n" + sp, per_prime, ok_case2, ok_case2 == per_prime);
        rep.add("(C_n.Z2) = p^n (C.Z2)" + sp, per_prime, ok_z2, ok_z2 == per_prime);
        rep.add("(C_n.Z1) = (C.Z1)" + sp, per_prime, ok_z1, ok_z1 == per_prime);
    }
    rep.add("germs tested", ">= 50", total, total >= 50);
    rep.tables["scaling"] = table;
    return rep;
}

/// q^n (C.Z2) + (C.Z1) on random curves, both axes, n <= 6.
inline SuiteReport verify_global_z(const VerifyConfig &cfg, std::size_t curves = 20, u64 n_max = 6) {
    SuiteReport rep{"global-z", {}, json::object()};
    const auto t0 = std::chrono::steady_clock::now();
    json rows = json::array();
    for (u64 p : detail::primes_for(cfg, {5, 7, 11, 13})) {
        const FieldPtr F = make_field(p, 1);
        const NonOrdDivisor z = nonord_divisor(p);
        auto rng = detail::make_rng(cfg.seed, 0x400 + p);
        std::size_t checked = 0, ok = 0;
        for (std::size_t t = 0; t < curves;) {
            const auto [d1, d2] = detail::rand_bidegree(rng, 3);
            const GlobalCurve c(detail::rand_bipoly(rng, *F, d1, d2));
            try {
                intersect_with_Z(c, z, Axis::One, 0);
            } catch (const Error &e) {
                if (e.code() == Errc::CommonComponent) continue;
                throw;
            }
            ++t;
            for (Axis ax : {Axis::One, Axis::Two})
                for (u64 n = 0; n <= n_max; ++n) {
                    const ZIntersection zi = intersect_with_Z(c, z, ax, n);
                    ++checked;
                    ok += zi.pass;
                    if (t == 1)
                        rows.push_back({{"p", p},
                                        {"curve", to_string(c.poly())},
                                        {"axis", static_cast<int>(ax)},
                                        {"n", n},
                                        {"C_n.Z1", zi.cz1},
                                        {"C_n.Z2", zi.cz2},
                                        {"total", zi.total},
                                        {"closed_form", zi.expected_total}});
                }
        }
        rep.add("identity p=" + std::to_string(p), checked, ok, ok == checked);
    }
    rep.add("runtime under 120 s", true, detail::seconds_since(t0) < 120.0, detail::seconds_since(t0) < 120.0);
    rep.tables["first_curve"] = rows;
    return rep;
}

/// h(n) = (q^n (C.Z2) + (C.Z1))/(p-1) and the ratio test.
inline SuiteReport verify_height(const VerifyConfig &cfg, std::size_t random_curves = 4, u64 n_max = 6) {
    SuiteReport rep{"height", {}, json::object()};
    json rows = json::array();
    for (u64 p : detail::primes_for(cfg, {5, 7, 11, 13})) {
        const FieldPtr F = make_field(p, 1);
        const NonOrdDivisor z = nonord_divisor(p);
        auto rng = detail::make_rng(cfg.seed, 0x500 + p);
        std::vector<GlobalCurve> curves{GlobalCurve(parse_bipoly("x1 - x2", *F))};
        while (curves.size() < 1 + random_curves) {
            // the twisted axis needs positive degree, or h is constant in n
            const auto [d1, d2] = detail::rand_bidegree(rng, 3);
            if (d1 == 0) continue;
            GlobalCurve c(detail::rand_bipoly(rng, *F, d1, d2));
            try {
                intersect_with_Z(c, z, Axis::One, 0);
            } catch (const Error &e) {
                if (e.code() == Errc::CommonComponent) continue;
                throw;
            }
            curves.push_back(std::move(c));
        }
        std::size_t exact_ok = 0, exact_n = 0, mono_ok = 0, mono_n = 0, ratio_ok = 0, ratio_n = 0, fix_ok = 0, fix_n = 0;
        json worst;
        double worst_dev = 0;
        for (const auto &c : curves) {
            const auto series = faltings_height_series(c, z, Axis::One, n_max);
            const double q = static_cast<double>(F->q());
            for (const auto &rec : series) {
                ++exact_n;
                exact_ok += rec.h == rec.closed_form;
                const bool integral = (rec.h * Rational(static_cast<std::int64_t>(p - 1))).den() == 1;
                if (rec.n > 0) {
                    ++mono_n;
                    mono_ok += integral && !(rec.h < Rational(0)) && series[rec.n - 1].h < rec.h;
                }
                if (&c == &curves.front())
                    rows.push_back({{"p", p},
                                    {"curve", to_string(c.poly())},
                                    {"n", rec.n},
                                    {"h", rec.h.str()},
                                    {"closed_form", rec.closed_form.str()},
                                    {"ratio", rec.ratio ? json(rec.ratio->to_double()) : json()}});
            }
            const double a = static_cast<double>(series[0].cz2), b = static_cast<double>(series[0].cz1);
            if (a == 0) continue;
            for (u64 n = 0; n + 1 <= n_max; ++n) {
                const double qn = std::pow(q, static_cast<double>(n));
                const double dev = std::fabs(series[n + 1].ratio->to_double() - q);
                if (qn >= 100.0 * b / a) {
                    ++ratio_n;
                    ratio_ok += dev < 1e-2;
                    if (dev >= 1e-2 && dev > worst_dev) {
                        worst_dev = dev;
                        worst = {{"curve", to_string(c.poly())}, {"n", n}, {"ratio", series[n + 1].ratio->to_double()}};
                    }
                }
                if (qn * a >= 100.0 * (q - 1) * b) {
                    ++fix_n;
                    fix_ok += dev < 1e-2;
                }
            }
        }
        const std::string sp = " p=" + std::to_string(p);
        rep.add("h(n) equals closed form" + sp, exact_n, exact_ok, exact_ok == exact_n);
        rep.add("h increasing, (p-1)h integral" + sp, mono_n, mono_ok, mono_ok == mono_n);
        json actual = {{"within", ratio_ok}, {"of", ratio_n}};
        if (!worst.is_null()) actual["worst"] = worst;
        rep.add("|ratio - p| < 0.01 when p^n >= 100 (C.Z1)/(C.Z2)" + sp, ratio_n, actual, ratio_ok == ratio_n);
        rep.add("|ratio - p| < 0.01 when p^n (C.Z2) >= 100 (p-1)(C.Z1)" + sp, fix_n, fix_ok, fix_ok == fix_n, true);
    }
    rep.tables["diagonal"] = rows;
    return rep;
}

/// Supersingular j-invariants by both methods.
inline SuiteReport verify_ss(const VerifyConfig &cfg) {
    SuiteReport rep{"ss", {}, json::object()};
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<u64> primes;
    if (cfg.p)
        primes = {*cfg.p};
    else
        for (u64 p = 5; p <= 31; ++p)
            if (detail::is_prime(p)) primes.push_back(p);
    json rows = json::array();
    const std::map<u64, std::vector<u64>> known{{5, {0}}, {11, {0, 1}}, {13, {5}}};
    for (u64 p : primes) {
        const SSLocus bf = ss_bruteforce(p), hs = ss_hasse(p);
        rep.add("methods agree p=" + std::to_string(p), detail::js_set(bf.js), detail::js_set(hs.js), bf.js == hs.js);
        bool galois = true;
        for (const auto &j : bf.js) galois = galois && std::binary_search(bf.js.begin(), bf.js.end(), j.frobenius(1));
        bool over_fp = true;
        const UniPoly poly = bf.polynomial();
        for (const auto &c : poly.coeffs()) over_fp = over_fp && c.index() < p;
        rep.add("Frobenius-stable, ss polynomial over F_p p=" + std::to_string(p), true, galois && over_fp,
                galois && over_fp);
        if (auto it = known.find(p); it != known.end()) {
            json exp = json::array();
            for (u64 v : it->second) exp.push_back(std::to_string(v));
            rep.add("bruteforce p=" + std::to_string(p), exp, detail::js_set(bf.js), exp == detail::js_set(bf.js));
        }
        rows.push_back({{"p", p}, {"bruteforce", detail::js_set(bf.js)}, {"hasse", detail::js_set(hs.js)}});
    }
    rep.add("runtime under 60 s", true, detail::seconds_since(t0) < 60.0, detail::seconds_since(t0) < 60.0);
    rep.tables["loci"] = rows;
    return rep;
}

/// Sum of enumerated local multiplicities against d1 e2 + d2 e1.
inline SuiteReport verify_bezout(const VerifyConfig &cfg, std::size_t per_prime = 25, unsigned m_max = 6) {
    SuiteReport rep{"bezout", {}, json::object()};
    json rows = json::array();
    std::size_t total = 0, complete = 0, consistent = 0;
    for (u64 p : detail::primes_for(cfg, {5, 7})) {
        const FieldPtr F = make_field(p, 1);
        auto rng = detail::make_rng(cfg.seed, 0x700 + p);
        for (std::size_t t = 0; t < per_prime;) {
            const auto [c1, c2] = detail::rand_bidegree(rng, 3);
            const auto [e1, e2] = detail::rand_bidegree(rng, 3);
            const GlobalCurve c(detail::rand_bipoly(rng, *F, c1, c2)), d(detail::rand_bipoly(rng, *F, e1, e2));
            if (share_component(c, d)) continue;
            ++t;
            ++total;
            json row = {{"p", p}, {"C", to_string(c.poly())}, {"D", to_string(d.poly())}};
            try {
                const BezoutReport br = sum_of_local_mults(c, d, m_max);
                ++complete;
                consistent += br.found == br.expected;
                row["expected"] = br.expected;
                row["found"] = br.found;
                row["points"] = br.points.size();
            } catch (const SearchExhausted &e) {
                ++consistent; // nothing to compare; the count stays below the bound
                row["expected"] = e.report().expected;
                row["found"] = e.report().found;
                row["incomplete"] = true;
            } catch (const Error &e) {
                row["error"] = e.what();
            }
            rows.push_back(row);
        }
    }
    const double rate = total ? static_cast<double>(complete) / static_cast<double>(total) : 0.0;
    rep.add("pairs tested", ">= 50", total, total >= 50 || cfg.p.has_value());
    rep.add("sum equals d1e2+d2e1 when complete", total, consistent, consistent == total);
    rep.add("completion rate >= 0.80", 0.8, json{{"complete", complete}, {"of", total}, {"rate", rate}}, rate >= 0.8);
    rep.tables["pairs"] = rows;
    return rep;
}

/// The Artin-Schreier configuration p = 5, C: x2 = x1, D: x2 = x1 + 1.
inline SuiteReport verify_density(const VerifyConfig &) {
    SuiteReport rep{"density", {}, json::object()};
    const FieldPtr F = make_field(5, 1);
    const GlobalCurve c(parse_bipoly("x2 - x1", *F)), d(parse_bipoly("x2 - x1 - 1", *F));

    json sn = json::array();
    bool sn_ok = true;
    for (u64 n = 1; n <= 6; ++n) {
        const SnCount s = s_n_count(c, d, Axis::One, n, 4);
        const u64 expect = detail::checked_pow(5, n);
        sn_ok = sn_ok && s.count == expect;
        sn.push_back({{"n", n}, {"S_n", s.count}, {"5^n", expect}, {"method", s.method}});
    }
    rep.add("|S_n| = 5^n for 1 <= n <= 6", "5^n", sn, sn_ok);
    const SnCount s0 = s_n_count(c, d, Axis::One, 0, 4);
    rep.add("|S_0| (parallel lines)", 0, s0.count, s0.count == 0, true);

    try {
        const auto pairs = isogenous_pairs(c, d, 4, 4);
        const DensityVerdict v = density_rank_test(pairs, {1, 1, 1, 1}, c, d, 4);
        rep.add("rank test m=4 a_max=4 b=(1,1,1,1)", "DENSE-AT-b",
                json{{"verdict", v.dense ? "DENSE-AT-b" : "NOT-DENSE"}, {"rank", v.rank_pairs}, {"reference", v.rank_reference}},
                v.dense);
    } catch (const Error &e) {
        rep.add("rank test m=4 a_max=4 b=(1,1,1,1)", "DENSE-AT-b", e.what(), false);
    }

    json proj = json::array();
    bool increasing = true;
    std::size_t prev_x = 0, prev_y = 0;
    for (unsigned m = 1; m <= 4; ++m) {
        const auto pairs = isogenous_pairs(c, d, m, 4);
        std::set<SurfacePoint> xs, ys;
        for (const auto &pr : pairs) xs.insert(pr.x), ys.insert(pr.y);
        if (m > 1) increasing = increasing && xs.size() > prev_x && ys.size() > prev_y;
        prev_x = xs.size(), prev_y = ys.size();
        proj.push_back({{"m", m}, {"pairs", pairs.size()}, {"distinct_x", xs.size()}, {"distinct_y", ys.size()}});
    }
    rep.add("distinct projections strictly increase for m = 1..4", "increasing", proj, increasing);

    // pairs need s^(5^a) - s^(5^b) = 1, which forces 5 | [F_5(s) : F_5]
    const auto p5 = isogenous_pairs(c, d, 5, 1);
    bool orbit_ok = true;
    for (const auto &pr : p5) orbit_ok = orbit_ok && frob_orbit(pr.x).r <= 5 && frob_orbit(pr.y).r <= 5;
    rep.add("pairs over F_5^5 with a_max=1", "> 0", p5.size(), !p5.empty(), true);
    rep.add("orbit periods r <= m", true, orbit_ok, orbit_ok, true);

    std::vector<IsogenyPair> full;
    for (const auto &x : curve_points(c, 2))
        for (const auto &y : curve_points(d, 2)) full.push_back({x, y, 0, 0, true});
    const DensityVerdict fv = density_rank_test(full, {1, 1, 1, 1}, c, d, 2);
    rep.add("full sample C x D is dense", "DENSE-AT-b", fv.dense ? "DENSE-AT-b" : "NOT-DENSE", fv.dense, true);
    rep.tables["S_n"] = sn;
    rep.tables["projections"] = proj;
    return rep;
}

inline const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"local", "corollary", "global-z", "height", "bezout", "ss", "density", "all"};
    return names;
}

inline SuiteReport run_suite(const std::string &name, const VerifyConfig &cfg) {
    if (name == "local") {
        SuiteReport r{"local", {}, json::object()};
        r.merge(verify_oracle_equivalence(cfg));
        r.merge(verify_case1(cfg));
        return r;
    }
    if (name == "corollary") return verify_corollary(cfg);
    if (name == "global-z") return verify_global_z(cfg);
    if (name == "height") return verify_height(cfg);
    if (name == "bezout") return verify_bezout(cfg);
    if (name == "ss") return verify_ss(cfg);
    if (name == "density") return verify_density(cfg);
    if (name == "all") {
        SuiteReport r{"all", {}, json::object()};
        for (const auto &s : suite_names())
            if (s != "all") r.merge(run_suite(s, cfg));
        return r;
    }
    throw Error(Errc::InvalidArgument, "unknown suite '" + name + "'");
}

} // namespace pfrob
