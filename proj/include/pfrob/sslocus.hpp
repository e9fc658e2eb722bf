#pragma once

// Supersingular j-invariants in F_{p^2}, by point counting and by the
// Hasse polynomial.

#include <algorithm>
#include <string>
#include <vector>

#include "pfrob/errors.hpp"
#include "pfrob/ffield.hpp"

namespace pfrob {

struct SSLocus {
    u64 p = 0;
    FieldPtr field; // F_{p^2}
    std::vector<Fq> js;
    std::string method;

    /// prod (x - j); its coefficients lie in F_p.
    UniPoly polynomial() const {
        UniPoly f = UniPoly::constant(field->one());
        for (const auto &j : js) f = f * UniPoly(*field, {-j, field->one()});
        return f;
    }
};

namespace detail {

inline void check_ss_prime(u64 p) {
    if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (p < 5) throw Error(Errc::InvalidArgument, "supersingular locus needs p >= 5");
}

inline void sort_unique(std::vector<Fq> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace detail

/// For each j, counts points of a curve with that j-invariant over F_{p^2}
/// and keeps j when the trace is divisible by p.
inline SSLocus ss_bruteforce(u64 p) {
    detail::check_ss_prime(p);
    if (p * p > (u64{1} << 20)) throw Error(Errc::BudgetExceeded, "p^2 exceeds the point-count budget");
    const FieldPtr F = make_field(p, 2);
    const u64 q = F->q();

    // chi[z] for z != 0: +1 square, -1 non-square
    std::vector<signed char> chi(q, -1);
    chi[0] = 0;
    for (u64 z = 1; z < q; ++z) chi[F->mul(z, z)] = 1;
    std::vector<u64> cubes(q);
    for (u64 x = 0; x < q; ++x) cubes[x] = F->mul(F->mul(x, x), x);

    const Fq j1728 = F->from_integer(1728);
    SSLocus out{p, F, {}, "bruteforce"};
    for (u64 ji = 0; ji < q; ++ji) {
        const Fq j = F->elem(ji);
        Fq a, b;
        if (j.is_zero()) {
            a = F->zero(), b = F->one();
        } else if (j == j1728) {
            a = F->one(), b = F->zero();
        } else {
            const Fq c = j / (j1728 - j);
            a = F->from_integer(3) * c;
            b = F->from_integer(2) * c;
        }
        long long sum = 0;
        for (u64 x = 0; x < q; ++x)
            sum += chi[F->add(F->add(cubes[x], F->mul(a.index(), x)), b.index())];
        // #E = q + 1 + sum, so the trace is -sum
        if ((-sum % static_cast<long long>(p) + static_cast<long long>(p)) % static_cast<long long>(p) == 0)
            out.js.push_back(j);
    }
    return out;
}

/// H_p(l) = sum binom(m,i)^2 l^i with m = (p-1)/2 over F_p.
inline UniPoly hasse_polynomial(u64 p) {
    detail::check_ss_prime(p);
    const FieldPtr Fp = make_field(p, 1);
    const u64 m = (p - 1) / 2;
    std::vector<Fq> c;
    u64 binom = 1; // binom(m, i) mod p, m < p so no zero divisors
    for (u64 i = 0; i <= m; ++i) {
        c.push_back(Fp->elem(binom * binom % p));
        binom = binom * ((m - i) % p) % p * detail::powmod(i + 1, p - 2, p) % p;
    }
    return UniPoly(*Fp, std::move(c));
}

inline SSLocus ss_hasse(u64 p) {
    const UniPoly h = hasse_polynomial(p);
    const FieldPtr F = make_field(p, 2);
    SSLocus out{p, F, {}, "hasse"};
    const Fq c256 = F->from_integer(256);
    for (const auto &rm : roots_in_extension(h, 2)) {
        const Fq &l = rm.root;
        if (l.is_zero() || l.is_one()) throw Error(Errc::InternalMismatch, "Hasse polynomial has a root at 0 or 1");
        const Fq num = c256 * (l * l - l + F->one()).pow(3);
        const Fq den = l * l * (l - F->one()) * (l - F->one());
        out.js.push_back(num / den);
    }
    detail::sort_unique(out.js);
    return out;
}

} // namespace pfrob
