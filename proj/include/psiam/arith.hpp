#pragma once

/** Exact single-integer arithmetic: factorization, the Dedekind psi function
 *  by two independent formulas, its truncated variant, and divisor helpers. */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "checked.hpp"

namespace psiam {

struct PrimePower {
    u64 prime;
    unsigned exponent;
    friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

/** n together with its prime-power decomposition, primes strictly increasing. */
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;

    bool is_valid() const {
        if (n == 0)
            return false;
        u128 prod = 1;
        u64 last = 1;
        for (const auto &[p, e] : factors) {
            if (p <= last || e == 0)
                return false;
            last = p;
            for (unsigned i = 0; i < e; ++i) {
                prod *= p;
                if (prod > n)
                    return false;
            }
        }
        return prod == n;
    }
};

/** psi(n), and s_psi(n) = psi(n) - n. */
struct PsiValue {
    u64 n;
    u64 psi;
    u64 s_psi;
};

struct FactorizeOptions {
    /// trial division bound before falling back to Pollard rho
    u64 trial_limit = 1'000'000;
};

namespace detail {

// Deterministic for every n < 2^64 (first twelve primes as witnesses).
inline bool miller_rabin(u64 n) {
    if (n < 2)
        return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0)
        d >>= 1, ++s;
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

// Brent's cycle variant. n must be odd and composite.
inline u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = f(y);
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

inline void split_large(u64 n, std::vector<u64> &out) {
    if (n == 1)
        return;
    if (miller_rabin(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

} // namespace detail

inline bool is_prime(u64 n) { return detail::miller_rabin(n); }

/** Prime factorization of n >= 1: trial division up to opts.trial_limit,
 *  then Miller-Rabin / Pollard rho for whatever cofactor remains. */
inline Factorization factorize(u64 n, const FactorizeOptions &opts = {}) {
    if (n == 0)
        throw domain_error("factorize: n must be >= 1");
    Factorization f{n, {}};
    u64 rest = n;
    auto take = [&](u64 p) {
        unsigned e = 0;
        while (rest % p == 0)
            rest /= p, ++e;
        if (e)
            f.factors.push_back({p, e});
    };
    take(2);
    take(3);
    // 6k +- 1 wheel
    bool exhausted = false;
    for (u64 p = 5; p <= rest / p; p += 6) {
        if (p > opts.trial_limit) {
            exhausted = true;
            break;
        }
        take(p);
        take(p + 2);
    }
    if (rest == 1)
        return f;
    if (!exhausted) {
        f.factors.push_back({rest, 1});
        return f;
    }
    // no factor <= min(trial_limit, sqrt(rest)) remains, so rest < trial_limit^2 means prime
    const u64 lim = std::max<u64>(opts.trial_limit, 2);
    if (rest / lim < lim || detail::miller_rabin(rest)) {
        f.factors.push_back({rest, 1});
        return f;
    }
    std::vector<u64> primes;
    detail::split_large(rest, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().prime == p)
            ++f.factors.back().exponent;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

/** psi(n) = prod p^(a-1) (p+1), evaluated from a factorization. */
inline PsiValue psi(const Factorization &f) {
    u64 acc = 1;
    for (const auto &[p, e] : f.factors) {
        u64 pe = 1;
        for (unsigned i = 1; i < e; ++i)
            pe = detail::checked_mul(pe, p, f.n);
        acc = detail::checked_mul(acc, detail::checked_mul(pe, p + 1, f.n), f.n);
    }
    return {f.n, acc, acc - f.n};
}

inline PsiValue psi(u64 n) { return psi(factorize(n)); }

/** Squarefree indicator mu^2(d), by direct search for a square factor. */
inline int mobius_squared(u64 d) {
    if (d == 0)
        throw domain_error("mobius_squared: d must be >= 1");
    for (u64 q = 2; q <= d / q; ++q) {
        if (d % q == 0) {
            d /= q;
            if (d % q == 0)
                return 0;
        }
    }
    return 1;
}

/// sum over d | n of n * mu^2(d) / d, by scanning divisors up to sqrt(n).
/// Shares no code with factorize(); used as the cross-check for psi().
inline u64 psi_divisor_sum(u64 n) {
    if (n == 0)
        throw domain_error("psi_divisor_sum: n must be >= 1");
    u64 sum = 0;
    for (u64 d = 1; d <= n / d; ++d) {
        if (n % d)
            continue;
        const u64 e = n / d;
        if (mobius_squared(d))
            sum = detail::checked_add(sum, e, n);
        if (e != d && mobius_squared(e))
            sum = detail::checked_add(sum, d, n);
    }
    return sum;
}

inline u64 radical(const Factorization &f) {
    u64 r = 1;
    for (const auto &pp : f.factors)
        r *= pp.prime;
    return r;
}

/** psi_A(n): the divisor sum restricted to squarefree d <= A.
 *  Enumerates subsets of the distinct primes of n. */
inline u64 psi_truncated(const Factorization &f, u64 A) {
    if (A == 0)
        throw domain_error("psi_truncated: A must be >= 1");
    u64 sum = 0;
    // depth-first over squarefree divisors d <= A
    auto walk = [&](auto &&self, std::size_t i, u64 d) -> void {
        sum = detail::checked_add(sum, f.n / d, f.n);
        for (std::size_t j = i; j < f.factors.size(); ++j) {
            const u64 p = f.factors[j].prime;
            if (d > A / p)
                break; // primes ascend
            self(self, j + 1, d * p);
        }
    };
    walk(walk, 0, 1);
    return sum;
}

inline u64 psi_truncated(u64 n, u64 A) { return psi_truncated(factorize(n), A); }

/// Number of distinct prime factors.
inline unsigned omega(const Factorization &f) { return static_cast<unsigned>(f.factors.size()); }

} // namespace psiam
