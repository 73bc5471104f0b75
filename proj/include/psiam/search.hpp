#pragma once

/** Exhaustive searches: psi-amicable pairs, k-tuples under the sum-equal and
 *  Yanney definitions, primitive psi-abundant numbers, and the multiplier
 *  construction that lifts a k-tuple N_1..N_k to aN_1..aN_k. */

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fiber_index.hpp"

namespace psiam {

/// SumEqual: psi(n_i) = sum n_i.  Yanney: psi(n_i) = sum n_i / (k - 1).
enum class TupleKind { SumEqual, Yanney };

inline const char *to_string(TupleKind kind) { return kind == TupleKind::SumEqual ? "sum" : "yanney"; }

struct AmicableTuple {
    TupleKind kind;
    unsigned k;
    std::vector<u64> members; ///< non-decreasing
    u64 v;                    ///< common psi value

    friend bool operator==(const AmicableTuple &, const AmicableTuple &) = default;
};

struct PairRecord {
    u64 a;
    u64 b;
    u64 v;
    friend bool operator==(const PairRecord &, const PairRecord &) = default;
};

namespace detail {

inline u128 tuple_target(TupleKind kind, unsigned k, u64 v) {
    return kind == TupleKind::SumEqual ? u128{v} : u128{v} * (k - 1);
}

inline u128 sum_of(std::span<const u64> xs) {
    u128 s = 0;
    for (u64 x : xs)
        s += x;
    return s;
}

// All k-multisets of `fiber` (ascending) summing to `target`, appended to out.
inline void enumerate_multisets(std::span<const u64> fiber, unsigned k, u128 target, std::vector<u64> &cur,
                                const std::function<void(const std::vector<u64> &)> &emit, std::size_t start = 0) {
    const u64 largest = fiber.back();
    if (k == 1) {
        if (target > largest)
            return;
        auto it = std::lower_bound(fiber.begin() + static_cast<std::ptrdiff_t>(start), fiber.end(),
                                   static_cast<u64>(target));
        if (it != fiber.end() && *it == target) {
            cur.push_back(*it);
            emit(cur);
            cur.pop_back();
        }
        return;
    }
    for (std::size_t i = start; i < fiber.size(); ++i) {
        const u64 x = fiber[i];
        if (u128{x} * k > target)
            break;
        if (u128{x} + u128{largest} * (k - 1) < target)
            continue;
        cur.push_back(x);
        enumerate_multisets(fiber, k - 1, target - x, cur, emit, i);
        cur.pop_back();
    }
}

} // namespace detail

/** Every pair (a, b), a <= bound, a < b, psi(a) = psi(b) = a + b, ascending in a.
 *  b = s_psi(a) may exceed bound; its psi then comes from direct factorization. */
inline std::vector<PairRecord> find_pairs(u64 bound, const SieveConfig &config = {}) {
    if (bound == 0)
        throw domain_error("find_pairs: bound must be >= 1");
    const PsiTable table = sieve_psi(1, bound + 1, config);
    std::vector<PairRecord> out;
    for (u64 a = 2; a <= bound; ++a) {
        const u64 v = table(a);
        const u64 b = v - a;
        if (b <= a)
            continue;
        const u64 vb = b <= bound ? table(b) : psi(b).psi;
        if (vb == v)
            out.push_back({a, b, v});
    }
    return out;
}

/** All k-multisets within [1, index.bound()] on one fiber of psi whose sum matches
 *  the definition of `kind`; each multiset once, lexicographic by members. */
inline std::vector<AmicableTuple> find_ktuples(TupleKind kind, unsigned k, const FiberIndex &index) {
    if (k < 2)
        throw domain_error("find_ktuples: k must be >= 2");
    std::vector<AmicableTuple> out;
    std::vector<u64> cur;
    cur.reserve(k);
    index.for_each_fiber([&](const FiberIndex::Fiber &f) {
        const u128 target = detail::tuple_target(kind, k, f.value);
        if (u128{f.members.front()} * k > target || u128{f.members.back()} * k < target)
            return;
        detail::enumerate_multisets(f.members, k, target, cur,
                                    [&](const std::vector<u64> &m) { out.push_back({kind, k, m, f.value}); });
    });
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.members < y.members; });
    return out;
}

inline std::vector<AmicableTuple> find_ktuples(TupleKind kind, unsigned k, u64 bound, const SieveConfig &config = {}) {
    if (k < 2)
        throw domain_error("find_ktuples: k must be >= 2");
    return find_ktuples(kind, k, FiberIndex(bound, config));
}

/// Re-check a tuple through the divisor-sum formula, independent of the sieve.
inline bool reverify(const AmicableTuple &t) {
    if (t.k < 2 || t.members.size() != t.k || !std::is_sorted(t.members.begin(), t.members.end()))
        return false;
    for (u64 m : t.members)
        if (m == 0 || psi_divisor_sum(m) != t.v)
            return false;
    return detail::sum_of(t.members) == detail::tuple_target(t.kind, t.k, t.v);
}

inline bool is_k_psi_abundant_value(u64 n, u64 psi_n, unsigned k) { return u128{psi_n} > u128{n} * k; }

/** psi(n) > k n. */
inline bool is_k_psi_abundant(u64 n, unsigned k) {
    if (k < 2)
        throw domain_error("is_k_psi_abundant: k must be >= 2");
    return is_k_psi_abundant_value(n, psi(n).psi, k);
}

inline bool is_psi_abundant(u64 n) { return is_k_psi_abundant_value(n, psi(n).psi, 2); }

/** psi-abundant with no psi-abundant proper divisor. Only the maximal proper
 *  divisors n/p are tested: psi(d)/d never decreases along divisibility. */
inline bool is_primitive_psi_abundant(u64 n) {
    const Factorization f = factorize(n);
    if (!is_k_psi_abundant_value(n, psi(f).psi, 2))
        return false;
    for (const auto &pp : f.factors) {
        const u64 d = n / pp.prime;
        if (is_k_psi_abundant_value(d, psi(d).psi, 2))
            return false;
    }
    return true;
}

inline std::vector<u64> enumerate_primitive_abundant(u64 bound, const SieveConfig &config = {}) {
    if (bound == 0)
        throw domain_error("enumerate_primitive_abundant: bound must be >= 1");
    const SpfTable spf(std::max<u64>(bound, 2));
    const PsiTable table = sieve_psi(1, bound + 1, spf, config);
    auto abundant = [&](u64 n) { return is_k_psi_abundant_value(n, table(n), 2); };
    std::vector<u64> out;
    for (u64 n = 2; n <= bound; ++n) {
        if (!abundant(n))
            continue;
        bool primitive = true;
        for (u64 m = n; m > 1 && primitive;) {
            const u64 p = spf[m];
            while (m % p == 0)
                m /= p;
            primitive = !abundant(n / p);
        }
        if (primitive)
            out.push_back(n);
    }
    return out;
}

// ---- multiplier construction ----

enum class ConstructionFailure { None, GcdViolation, RatioMismatch };

struct ConstructionError : std::runtime_error {
    ConstructionFailure kind;
    std::size_t index; ///< first failing j (0-based)
    ConstructionError(ConstructionFailure kind, std::size_t index)
        : std::runtime_error(std::string(kind == ConstructionFailure::GcdViolation ? "GcdViolation" : "RatioMismatch") +
                             " at j=" + std::to_string(index + 1)),
          kind(kind), index(index) {}
};

struct ConstructionCheck {
    ConstructionFailure failure = ConstructionFailure::None;
    std::size_t index = 0;
};

namespace detail {

inline void check_construction_inputs(u64 a, std::span<const u64> ns) {
    if (ns.size() < 2)
        throw domain_error("construction: need k >= 2 numbers");
    if (a == 0 || std::find(ns.begin(), ns.end(), u64{0}) != ns.end())
        throw domain_error("construction: inputs must be >= 1");
}

// psi(a)/a = S/psi(N_j)  <=>  psi(a) psi(N_j) = a S
inline ConstructionCheck check_construction(u64 a, u64 psi_a, std::span<const u64> ns, std::span<const u64> psi_ns,
                                            u128 total) {
    for (std::size_t j = 0; j < ns.size(); ++j)
        if (std::gcd(a, ns[j]) != 1)
            return {ConstructionFailure::GcdViolation, j};
    for (std::size_t j = 0; j < ns.size(); ++j)
        if (u128{psi_a} * psi_ns[j] != u128{a} * total)
            return {ConstructionFailure::RatioMismatch, j};
    return {};
}

inline std::vector<u64> psi_each(std::span<const u64> ns) {
    std::vector<u64> out;
    for (u64 n : ns)
        out.push_back(psi(n).psi);
    return out;
}

} // namespace detail

/** Checks gcd(a, N_j) = 1 and psi(a)/a = (sum N)/psi(N_j) for all j; on success
 *  returns the sum-equal tuple (aN_1, ..., aN_k), re-verified from scratch. */
inline AmicableTuple verify_construction(u64 a, std::span<const u64> ns) {
    detail::check_construction_inputs(a, ns);
    const auto psi_ns = detail::psi_each(ns);
    const ConstructionCheck c = detail::check_construction(a, psi(a).psi, ns, psi_ns, detail::sum_of(ns));
    if (c.failure != ConstructionFailure::None)
        throw ConstructionError(c.failure, c.index);

    AmicableTuple t{TupleKind::SumEqual, static_cast<unsigned>(ns.size()), {}, 0};
    for (u64 n : ns)
        t.members.push_back(detail::checked_mul(a, n, n));
    std::sort(t.members.begin(), t.members.end());
    t.v = psi(t.members.front()).psi;
    for (u64 m : t.members)
        if (psi(m).psi != t.v)
            throw std::logic_error("verify_construction: lifted tuple has unequal psi values");
    if (detail::sum_of(t.members) != t.v)
        throw std::logic_error("verify_construction: lifted tuple fails the sum-equal identity");
    return t;
}

/** Every a <= a_bound passing verify_construction, ascending. psi(a)/a depends only
 *  on the radical of a, so the ratio is tested once per squarefree candidate and
 *  each passing radical is extended to all a sharing it. */
inline std::vector<u64> search_construction_multiplier(std::span<const u64> ns, u64 a_bound) {
    detail::check_construction_inputs(1, ns);
    if (a_bound == 0)
        throw domain_error("search_construction_multiplier: a_bound must be >= 1");
    const auto psi_ns = detail::psi_each(ns);
    if (std::adjacent_find(psi_ns.begin(), psi_ns.end(), std::not_equal_to<>()) != psi_ns.end())
        return {};
    const u128 total = detail::sum_of(ns);
    const u64 psi_n = psi_ns.front();

    std::vector<u64> out;
    if (total == psi_n)
        out.push_back(1);
    if (a_bound >= 2) {
        const SpfTable spf(a_bound);
        std::vector<u64> primes;
        for (u64 r = 2; r <= a_bound; ++r) {
            const Factorization f = spf.factorize(r);
            if (radical(f) != r)
                continue;
            if (std::any_of(ns.begin(), ns.end(), [&](u64 n) { return std::gcd(r, n) != 1; }))
                continue;
            if (u128{psi(f).psi} * psi_n != u128{r} * total)
                continue;
            // all a <= a_bound with radical r
            primes.clear();
            for (const auto &pp : f.factors)
                primes.push_back(pp.prime);
            auto extend = [&](auto &&self, std::size_t i, u64 a) -> void {
                out.push_back(a);
                for (std::size_t j = i; j < primes.size(); ++j)
                    if (a <= a_bound / primes[j])
                        self(self, j, a * primes[j]);
            };
            extend(extend, 0, r);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace psiam
