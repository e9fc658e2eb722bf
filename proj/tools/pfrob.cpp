// pfrob command-line driver.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfrob/density.hpp"
#include "pfrob/localint.hpp"
#include "pfrob/parser.hpp"
#include "pfrob/sslocus.hpp"
#include "pfrob/surface.hpp"
#include "pfrob/verify.hpp"

namespace {

using namespace pfrob;

struct Globals {
    u64 p = 5;
    unsigned k = 1;
    u64 seed = 1;
    std::size_t prec = 64;
    std::string out = "json";
    std::string output;
    bool p_given = false;
};

// Result of a subcommand: a JSON document, optional CSV rendering, and verdict.
struct Result {
    json doc;
    std::string csv;
    bool pass = true;
};

json config_json(const Globals &g, const std::string &cmd) {
    return {{"command", cmd}, {"p", g.p}, {"k", g.k}, {"seed", g.seed}, {"prec", g.prec}, {"version", kVersion}};
}

std::vector<u64> parse_n_range(const std::string &s) {
    std::vector<u64> out;
    const auto dots = s.find("..");
    if (dots != std::string::npos) {
        const u64 a = std::stoull(s.substr(0, dots)), b = std::stoull(s.substr(dots + 2));
        if (b < a) throw Error(Errc::InvalidArgument, "empty range '" + s + "'");
        for (u64 n = a; n <= b; ++n) out.push_back(n);
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
    if (out.empty()) throw Error(Errc::InvalidArgument, "empty n list");
    return out;
}

Bound4 parse_bound(const std::string &s) {
    Bound4 b{};
    std::stringstream ss(s);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 4) throw Error(Errc::InvalidArgument, "bound needs four entries");
        b[i++] = static_cast<unsigned>(std::stoul(item));
    }
    if (i != 4) throw Error(Errc::InvalidArgument, "bound needs four entries");
    return b;
}

BranchParam parse_branch(const std::string &s, const FieldCtx &F) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw Error(Errc::InvalidArgument, "branch must be 'a1(u),a2(u)'");
    return BranchParam(parse_series1(s.substr(0, comma), F, kExact), parse_series1(s.substr(comma + 1), F, kExact),
                       {});
}

struct CurveFile {
    GlobalCurve curve;
    std::string path;
    std::string source;
};

CurveFile load_curve(const std::string &path, Globals &g) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open curve file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception &e) {
        throw Error(Errc::InvalidArgument, "invalid curve file '" + path + "': " + e.what());
    }
    if (!j.contains("p") || !j.contains("poly")) throw Error(Errc::InvalidArgument, "curve file needs 'p' and 'poly'");
    const u64 p = j["p"].get<u64>();
    const unsigned k = j.value("k", 1u);
    if (g.p_given && p != g.p) throw Error(Errc::FieldMismatch, "curve file is over p=" + std::to_string(p));
    g.p = p;
    g.k = k;
    const std::string src = j["poly"].get<std::string>();
    const FieldPtr F = make_field(p, k);
    return {GlobalCurve(parse_bipoly(src, *F)), path, src};
}

json local_mult_json(const LocalMult &m) {
    return {{"value", m.value}, {"method", to_string(m.method)}, {"precision_used", m.precision_used}};
}

json opt_json(const std::optional<std::size_t> &v) { return v ? json(*v) : json(); }

void emit(const Result &r, const Globals &g) {
    std::string text = g.out == "csv" && !r.csv.empty() ? r.csv : r.doc.dump(2) + "\n";
    if (g.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.output);
        if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + g.output + "'");
        f << text;
    }
}

} // namespace

int main(int argc, char **argv) {
    Globals g;
    CLI::App app{"Partial Frobenius intersection toolkit"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--p", g.p, "characteristic")->each([&](const std::string &) { g.p_given = true; });
    app.add_option("--k", g.k, "extension degree of the coefficient field");
    app.add_option("--seed", g.seed, "seed for random suites");
    app.add_option("--prec", g.prec, "series precision for Hensel lifts");
    app.add_option("--out", g.out, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", g.output, "write output to a file");

    // local
    std::string f_src, g_src, branch_src, axis_n = "0..4", c_path, d_path, method = "both", bound_src = "1,1,1,1";
    std::string pairs_csv;
    int axis = 1;
    u64 n_single = 0, n_max = 6;
    std::size_t oracle_n = 40;
    unsigned m = 4, m_max = 0;
    unsigned a_max = 4;

    auto *local = app.add_subcommand("local", "intersection number of a germ with a branch or smooth germ");
    local->add_option("--f", f_src, "germ f(t1,t2)")->required();
    auto *lb = local->add_option("--branch", branch_src, "branch 'a1(u),a2(u)'");
    auto *lg = local->add_option("--g", g_src, "smooth germ g(t1,t2)");
    lb->excludes(lg);
    local->add_option("--axis", axis, "twisted axis")->check(CLI::IsMember({1, 2}));
    local->add_option("--n", n_single, "twist exponent");

    auto *twist = app.add_subcommand("twist-seq", "(C_n . D) for a list of n");
    twist->add_option("--f", f_src, "germ f(t1,t2)")->required();
    auto *tb = twist->add_option("--branch", branch_src, "branch 'a1(u),a2(u)'");
    auto *tg = twist->add_option("--g", g_src, "smooth germ g(t1,t2)");
    tb->excludes(tg);
    twist->add_option("--axis", axis, "twisted axis")->check(CLI::IsMember({1, 2}));
    twist->add_option("--n", axis_n, "range a..b or list");

    auto *oracle = app.add_subcommand("oracle", "dim k[[t1,t2]]/(f,g) by linear algebra");
    oracle->add_option("--f", f_src)->required();
    oracle->add_option("--g", g_src)->required();
    oracle->add_option("--n-max", oracle_n, "truncation limit");

    auto *global = app.add_subcommand("global", "intersection number of two curves in P1 x P1");
    global->add_option("--c", c_path)->required();
    global->add_option("--d", d_path)->required();
    global->add_option("--m-max", m_max, "enumerate points up to this degree (0: skip)");

    auto *zint = app.add_subcommand("z-intersect", "(C_n . Z) against the non-ordinary divisor");
    zint->add_option("--c", c_path)->required();
    zint->add_option("--axis", axis)->check(CLI::IsMember({1, 2}));
    zint->add_option("--n-max", n_max);

    auto *height = app.add_subcommand("height", "model height h(n)");
    height->add_option("--c", c_path)->required();
    height->add_option("--axis", axis)->check(CLI::IsMember({1, 2}));
    height->add_option("--n-max", n_max);

    auto *ss = app.add_subcommand("ss", "supersingular j-invariants");
    ss->add_option("--method", method)->check(CLI::IsMember({"bruteforce", "hasse", "both"}));

    auto *dens = app.add_subcommand("density", "isogenous pairs and the rank test");
    dens->add_option("--c", c_path)->required();
    dens->add_option("--d", d_path)->required();
    dens->add_option("--m", m);
    dens->add_option("--a-max", a_max);
    dens->add_option("--bound", bound_src);
    dens->add_option("--pairs-csv", pairs_csv, "write the pairs as CSV");

    std::string suite;
    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        Result r;
        const Axis ax = axis_from_int(axis);
        if (local->parsed() || twist->parsed() || oracle->parsed()) {
            const FieldPtr F = make_field(g.p, g.k);
            const TruncSeries2 f = parse_series2(f_src, *F);
            const std::string cmd = local->parsed() ? "local" : twist->parsed() ? "twist-seq" : "oracle";
            r.doc["config"] = config_json(g, cmd);
            r.doc["input"] = {{"f", to_string(f)}};
            if (oracle->parsed()) {
                const TruncSeries2 gg = parse_series2(g_src, *F);
                r.doc["input"]["g"] = to_string(gg);
                r.doc["result"] = local_mult_json(local_mult_oracle(f, gg, oracle_n));
            } else {
                std::optional<BranchParam> beta;
                if (!branch_src.empty()) {
                    beta = parse_branch(branch_src, *F);
                    r.doc["input"]["branch"] = {to_string(beta->alpha(Axis::One)), to_string(beta->alpha(Axis::Two))};
                } else if (!g_src.empty()) {
                    const TruncSeries2 gg = parse_series2(g_src, *F);
                    const auto lin1 = gg.coeff(1, 0), lin2 = gg.coeff(0, 1);
                    if (lin1.is_zero() && lin2.is_zero())
                        throw Error(Errc::NotSmoothAlongAxis, "g has no linear term");
                    beta = hensel_parametrize(gg, lin2.is_zero() ? Axis::One : Axis::Two, g.prec);
                    r.doc["input"]["g"] = to_string(gg);
                } else {
                    throw Error(Errc::InvalidArgument, "need --branch or --g");
                }
                r.doc["input"]["axis"] = axis;
                const std::vector<u64> ns = local->parsed() ? std::vector<u64>{n_single} : parse_n_range(axis_n);
                const TwistReport tr = twisted_intersection_sequence(CurveGerm(f), *beta, ax, ns);
                json entries = json::array();
                std::ostringstream csv;
                csv << "n,value,method,precision_used,expected,pass\n";
                for (const auto &e : tr.entries) {
                    json je = {{"n", e.n}, {"value", e.mult.value}, {"method", to_string(e.mult.method)},
                               {"precision_used", e.mult.precision_used}, {"expected", opt_json(e.expected)},
                               {"pass", e.pass}};
                    entries.push_back(je);
                    csv << e.n << ',' << e.mult.value << ',' << to_string(e.mult.method) << ','
                        << e.mult.precision_used << ',' << (e.expected ? std::to_string(*e.expected) : "") << ','
                        << (e.pass ? "true" : "false") << '\n';
                }
                r.doc["result"] = {{"case", tr.case_kind},
                                   {"e", tr.e},
                                   {"d", tr.d},
                                   {"k1", opt_json(tr.k1)},
                                   {"k2", opt_json(tr.k2)},
                                   {"stable_value", opt_json(tr.stable_value)},
                                   {"crossover_bound", tr.crossover_bound ? json(*tr.crossover_bound) : json()},
                                   {"observed_crossover", tr.observed_crossover ? json(*tr.observed_crossover) : json()},
                                   {"entries", entries},
                                   {"pass", tr.pass}};
                if (!g_src.empty() && local->parsed() && n_single == 0)
                    r.doc["result"]["oracle"] = local_mult_json(local_mult_oracle(f, parse_series2(g_src, *F)));
                r.csv = csv.str();
                r.pass = tr.pass;
            }
        } else if (global->parsed()) {
            const CurveFile c = load_curve(c_path, g), d = load_curve(d_path, g);
            r.doc["config"] = config_json(g, "global");
            r.doc["input"] = {{"C", c.source}, {"D", d.source}};
            const u64 total = global_intersection(c.curve, d.curve);
            r.doc["result"] = {{"intersection", total},
                               {"bidegree_C", {c.curve.d1(), c.curve.d2()}},
                               {"bidegree_D", {d.curve.d1(), d.curve.d2()}}};
            if (m_max > 0) {
                auto points_json = [](const BezoutReport &br) {
                    json pts = json::array();
                    for (const auto &pt : br.points)
                        pts.push_back({{"chart", pt.chart}, {"degree", pt.degree}, {"x1", format_element(pt.x1)},
                                       {"x2", format_element(pt.x2)}, {"multiplicity", pt.multiplicity}});
                    return pts;
                };
                try {
                    const BezoutReport br = sum_of_local_mults(c.curve, d.curve, m_max);
                    r.doc["result"]["enumeration"] = {
                        {"found", br.found}, {"complete", true}, {"points", points_json(br)}};
                } catch (const SearchExhausted &e) {
                    r.doc["result"]["enumeration"] = {{"found", e.report().found},
                                                      {"complete", false},
                                                      {"deficit", e.deficit()},
                                                      {"points", points_json(e.report())}};
                    r.pass = false;
                }
            }
        } else if (zint->parsed() || height->parsed()) {
            const CurveFile c = load_curve(c_path, g);
            if (g.k != 1) throw Error(Errc::InvalidArgument, "the non-ordinary divisor model needs k = 1");
            const NonOrdDivisor z = nonord_divisor(g.p);
            r.doc["config"] = config_json(g, zint->parsed() ? "z-intersect" : "height");
            r.doc["input"] = {{"C", c.source}, {"axis", axis}, {"n_max", n_max}};
            json rows = json::array();
            std::ostringstream csv;
            if (zint->parsed()) {
                csv << "n,qn,cz1,cz2,total,expected_total,pass\n";
                for (u64 n = 0; n <= n_max; ++n) {
                    const ZIntersection zi = intersect_with_Z(c.curve, z, ax, n);
                    rows.push_back({{"n", n}, {"qn", zi.qn}, {"C_n.Z1", zi.cz1}, {"C_n.Z2", zi.cz2},
                                    {"total", zi.total}, {"expected_total", zi.expected_total}, {"pass", zi.pass}});
                    csv << n << ',' << zi.qn << ',' << zi.cz1 << ',' << zi.cz2 << ',' << zi.total << ','
                        << zi.expected_total << ',' << (zi.pass ? "true" : "false") << '\n';
                    r.pass = r.pass && zi.pass;
                }
            } else {
                csv << "n,cz1,cz2,total,h,closed_form,ratio\n";
                for (const auto &rec : faltings_height_series(c.curve, z, ax, n_max)) {
                    const bool ok = rec.h == rec.closed_form;
                    rows.push_back({{"n", rec.n}, {"C.Z1", rec.cz1}, {"C.Z2", rec.cz2}, {"total", rec.total},
                                    {"h", rec.h.str()}, {"closed_form", rec.closed_form.str()},
                                    {"ratio", rec.ratio ? json(rec.ratio->to_double()) : json()}, {"pass", ok}});
                    csv << rec.n << ',' << rec.cz1 << ',' << rec.cz2 << ',' << rec.total << ',' << rec.h.str() << ','
                        << rec.closed_form.str() << ',';
                    if (rec.ratio) csv << rec.ratio->to_double();
                    csv << '\n';
                    r.pass = r.pass && ok;
                }
            }
            r.doc["result"] = rows;
            r.csv = csv.str();
        } else if (ss->parsed()) {
            r.doc["config"] = config_json(g, "ss");
            r.doc["config"]["method"] = method;
            std::optional<SSLocus> bf, hs;
            if (method != "hasse") bf = ss_bruteforce(g.p);
            if (method != "bruteforce") hs = ss_hasse(g.p);
            if (bf) r.doc["bruteforce"] = detail::js_set(bf->js);
            if (hs) r.doc["hasse"] = detail::js_set(hs->js);
            if (bf && hs) {
                r.pass = bf->js == hs->js;
                r.doc["agree"] = r.pass;
            }
            std::ostringstream csv;
            csv << "method,j\n";
            for (const auto *s : {&bf, &hs})
                if (*s)
                    for (const auto &j : (*s)->js) csv << (*s)->method << ',' << format_element(j) << '\n';
            r.csv = csv.str();
        } else if (dens->parsed()) {
            const CurveFile c = load_curve(c_path, g), d = load_curve(d_path, g);
            const Bound4 b = parse_bound(bound_src);
            r.doc["config"] = config_json(g, "density");
            r.doc["config"].update({{"m", m}, {"a_max", a_max}, {"bound", b}});
            r.doc["input"] = {{"C", c.source}, {"D", d.source}};
            const auto pairs = isogenous_pairs(c.curve, d.curve, m, a_max);
            std::ostringstream csv;
            csv << "x1,x2,y1,y2,a1,a2,direction\n";
            for (const auto &pr : pairs)
                csv << '"' << format_element(pr.x.x1) << "\",\"" << format_element(pr.x.x2) << "\",\""
                    << format_element(pr.y.x1) << "\",\"" << format_element(pr.y.x2) << "\"," << pr.a1 << ','
                    << pr.a2 << ',' << (pr.forward ? "C->D" : "D->C") << '\n';
            r.csv = csv.str();
            if (!pairs_csv.empty()) {
                std::ofstream f(pairs_csv);
                if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + pairs_csv + "'");
                f << r.csv;
            }
            const DensityVerdict v = density_rank_test(pairs, b, c.curve, d.curve, m);
            json witness = json::array();
            for (const auto &w : v.witness)
                witness.push_back({{"exponents", w.exps}, {"coeff", format_element(w.coeff)}});
            r.doc["result"] = {{"verdict", v.dense ? "DENSE-AT-b" : "NOT-DENSE"},
                               {"pairs", v.pairs},
                               {"monomials", v.monomials},
                               {"rank_pairs", v.rank_pairs},
                               {"rank_reference", v.rank_reference},
                               {"distinct_x", v.distinct_x},
                               {"distinct_y", v.distinct_y},
                               {"witness", witness}};
            r.pass = v.dense;
        } else if (verify->parsed()) {
            VerifyConfig cfg;
            if (g.p_given) cfg.p = g.p;
            cfg.seed = g.seed;
            const SuiteReport rep = run_suite(suite, cfg);
            r.doc["config"] = config_json(g, "verify " + suite);
            if (!g.p_given) r.doc["config"]["p"] = nullptr;
            r.doc["report"] = to_json(rep);
            r.pass = rep.pass();
            std::ostringstream csv;
            csv << "check,pass,informational\n";
            for (const auto &ck : rep.checks)
                csv << '"' << ck.name << "\"," << (ck.pass ? "true" : "false") << ','
                    << (ck.informational ? "true" : "false") << '\n';
            r.csv = csv.str();
            if (const Check *f = rep.first_failure()) std::cerr << "first failing check: " << f->name << '\n';
        }
        emit(r, g);
        std::cerr << "elapsed " << std::fixed << std::setprecision(3) << detail::seconds_since(t0) << " s\n";
        return r.pass ? 0 : 1;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
