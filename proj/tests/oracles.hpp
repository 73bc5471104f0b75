#pragma once

// Brute-force reference implementations for tests. Deliberately naive and
// independent of the library's factorization, sieve and search code.

#include <cstdint>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool squarefree(u64 d) {
    for (u64 q = 2; q * q <= d; ++q)
        if (d % (q * q) == 0)
            return false;
    return true;
}

/// sum over all divisors d of n (full scan) of n/d when d is squarefree.
inline u64 psi(u64 n) {
    u64 s = 0;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0 && squarefree(d))
            s += n / d;
    return s;
}

/// Same sum truncated to d <= A.
inline u64 psi_truncated(u64 n, u64 A) {
    u64 s = 0;
    for (u64 d = 1; d <= n && d <= A; ++d)
        if (n % d == 0 && squarefree(d))
            s += n / d;
    return s;
}

/// Primitive psi-abundant numbers <= bound, testing every proper divisor.
inline std::vector<u64> primitive_abundant(u64 bound) {
    std::vector<u64> ps(bound + 1);
    for (u64 n = 1; n <= bound; ++n)
        ps[n] = 0;
    // psi for all n <= bound by divisor accumulation over squarefree d
    for (u64 d = 1; d <= bound; ++d)
        if (squarefree(d))
            for (u64 m = d; m <= bound; m += d)
                ps[m] += m / d;
    std::vector<u64> out;
    for (u64 n = 1; n <= bound; ++n) {
        if (ps[n] <= 2 * n)
            continue;
        bool primitive = true;
        for (u64 d = 1; d < n && primitive; ++d)
            if (n % d == 0 && ps[d] > 2 * d)
                primitive = false;
        if (primitive)
            out.push_back(n);
    }
    return out;
}

} // namespace oracle
