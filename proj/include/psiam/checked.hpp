#pragma once

/** Error types and overflow-checked unsigned arithmetic. */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace psiam {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/** Input outside the domain of a function (n = 0, k < 2, ...). */
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/** A result does not fit the 64-bit integer width. Carries the input that produced it. */
struct overflow_error : std::overflow_error {
    u64 n;
    overflow_error(const std::string &what, u64 n)
        : std::overflow_error(what + " (n=" + std::to_string(n) + ")"), n(n) {}
};

/** A table allocation was refused or failed. */
struct resource_error : std::runtime_error {
    u64 requested;
    resource_error(const std::string &what, u64 requested)
        : std::runtime_error(what + " (requested " + std::to_string(requested) + " entries)"),
          requested(requested) {}
};

namespace detail {

inline u64 checked_mul(u64 a, u64 b, u64 n) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("64-bit overflow in product", n);
    return r;
}

inline u64 checked_add(u64 a, u64 b, u64 n) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("64-bit overflow in sum", n);
    return r;
}

/** base^exp, or false if it does not fit in 64 bits. */
inline bool try_pow(u64 base, unsigned exp, u64 &out) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(r, base, &r))
            return false;
    out = r;
    return true;
}

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    for (; e; e >>= 1, b = mulmod(b, b, m))
        if (e & 1)
            r = mulmod(r, b, m);
    return r;
}

inline std::string to_string(u128 v) {
    if (v == 0)
        return "0";
    std::string s;
    for (; v; v /= 10)
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    return s;
}

} // namespace detail
} // namespace psiam
