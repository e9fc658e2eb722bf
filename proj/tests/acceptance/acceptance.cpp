// Acceptance driver: one line per criterion, exit status 0 only if all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "pfrob/verify.hpp"

#ifndef PFROB_CLI_PATH
#define PFROB_CLI_PATH "pfrob"
#endif

namespace {

using namespace pfrob;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string summarize(const SuiteReport &r) {
    std::size_t total = 0, ok = 0;
    for (const auto &c : r.checks)
        if (!c.informational) ++total, ok += c.pass;
    std::string s = std::to_string(ok) + "/" + std::to_string(total) + " checks";
    if (const Check *f = r.first_failure()) s += "; first failure: " + f->name + " actual=" + f->actual.dump();
    return s;
}

Outcome from_suite(const SuiteReport &r) { return {r.pass(), summarize(r)}; }

struct RunResult {
    int status = -1;
    std::string out;
    double seconds = 0;
};

RunResult run_cli(const std::string &args) {
    const std::string cmd = std::string("\"") + PFROB_CLI_PATH + "\" " + args + " 2>/dev/null";
    const auto t0 = std::chrono::steady_clock::now();
    RunResult r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.seconds = detail::seconds_since(t0);
    return r;
}

Outcome determinism() {
    const std::string args = "verify all --p 5 --seed 1";
    const RunResult a = run_cli(args), b = run_cli(args);
    const bool same = !a.out.empty() && a.out == b.out;
    const bool fast = a.seconds < 600 && b.seconds < 600;
    const bool exit0 = a.status == 0 && b.status == 0;
    std::string d = std::string("identical=") + (same ? "yes" : "no") + " exit=" + std::to_string(a.status) + "," +
                    std::to_string(b.status) + " wall=" + std::to_string(a.seconds) + "s," + std::to_string(b.seconds) +
                    "s";
    return {same && fast && exit0, d};
}

} // namespace

int main() {
    VerifyConfig cfg;
    cfg.seed = 1;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle equivalence", [&] { return from_suite(verify_oracle_equivalence(cfg)); }},
        {"local theorem case 1", [&] { return from_suite(verify_case1(cfg)); }},
        {"case 2 and corollary", [&] { return from_suite(verify_corollary(cfg)); }},
        {"global non-ordinary identity", [&] { return from_suite(verify_global_z(cfg)); }},
        {"height growth", [&] { return from_suite(verify_height(cfg)); }},
        {"supersingular locus", [&] { return from_suite(verify_ss(cfg)); }},
        {"Bezout coherence", [&] { return from_suite(verify_bezout(cfg)); }},
        {"density", [&] { return from_suite(verify_density(cfg)); }},
        {"determinism", determinism},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
                  << o.detail << std::endl;
    }
    return all ? 0 : 1;
}
