#pragma once

/** Bulk psi evaluation over a contiguous range from a smallest-prime-factor table. */

#include <algorithm>
#include <cstdint>
#include <exception>
#include <new>
#include <string>
#include <thread>
#include <vector>

#include "arith.hpp"

namespace psiam {

/// Hard ceiling on smallest-prime-factor table size.
inline constexpr u64 kMaxSieveN = u64{1} << 31;

struct SieveConfig {
    u64 segment_size = u64{1} << 20;
    u64 max_n = kMaxSieveN;
    unsigned threads = 0; ///< 0 = hardware concurrency

    void validate() const {
        if (segment_size < (u64{1} << 10))
            throw domain_error("SieveConfig: segment_size must be >= 1024");
        if (max_n == 0 || max_n > kMaxSieveN)
            throw resource_error("SieveConfig: max_n outside [1, 2^31]", max_n);
    }
};

/** spf[n] = least prime dividing n, for 2 <= n <= max_n. Immutable once built. */
class SpfTable {
  public:
    SpfTable() = default;

    explicit SpfTable(u64 max_n) : max_n_(max_n) {
        if (max_n < 2)
            throw domain_error("sieve_spf: max_n must be >= 2");
        if (max_n > kMaxSieveN)
            throw resource_error("sieve_spf: table exceeds 2^31 cap", max_n + 1);
        try {
            spf_.assign(max_n + 1, 0);
        } catch (const std::bad_alloc &) {
            throw resource_error("sieve_spf: allocation failed", max_n + 1);
        }
        for (u64 i = 2; i <= max_n; ++i) {
            if (spf_[i])
                continue;
            spf_[i] = static_cast<std::uint32_t>(i);
            if (i > max_n / i)
                continue;
            for (u64 j = i * i; j <= max_n; j += i)
                if (!spf_[j])
                    spf_[j] = static_cast<std::uint32_t>(i);
        }
    }

    u64 max_n() const { return max_n_; }
    u64 operator[](u64 n) const { return spf_[n]; }
    bool contains(u64 n) const { return n >= 1 && n <= max_n_; }

    Factorization factorize(u64 n) const {
        if (n == 0)
            throw domain_error("factorize: n must be >= 1");
        if (n > max_n_)
            return psiam::factorize(n);
        Factorization f{n, {}};
        while (n > 1) {
            const u64 p = spf_[n];
            unsigned e = 0;
            while (n % p == 0)
                n /= p, ++e;
            f.factors.push_back({p, e});
        }
        return f;
    }

    /// psi(n) by peeling smallest prime powers; n must be within the table.
    u64 psi(u64 n) const {
        const u64 orig = n;
        u64 acc = 1;
        while (n > 1) {
            const u64 p = spf_[n];
            n /= p;
            u64 term = p + 1;
            while (n % p == 0) {
                n /= p;
                term = detail::checked_mul(term, p, orig);
            }
            acc = detail::checked_mul(acc, term, orig);
        }
        return acc;
    }

  private:
    u64 max_n_ = 0;
    std::vector<std::uint32_t> spf_;
};

inline SpfTable sieve_spf(u64 max_n) { return SpfTable(max_n); }

/** values[i] = psi(lo + i) for lo <= lo + i < hi. */
struct PsiTable {
    u64 lo = 1;
    u64 hi = 1;
    std::vector<u64> values;

    u64 size() const { return hi - lo; }
    bool contains(u64 n) const { return n >= lo && n < hi; }
    u64 operator()(u64 n) const { return values[n - lo]; }
};

/// Sieve [lo, hi) against a prebuilt table; segments run on independent threads.
inline PsiTable sieve_psi(u64 lo, u64 hi, const SpfTable &spf, const SieveConfig &config = {}) {
    config.validate();
    if (lo < 1 || hi <= lo)
        throw domain_error("sieve_psi: need 1 <= lo < hi");
    if (hi > config.max_n || hi - 1 > spf.max_n())
        throw resource_error("sieve_psi: range exceeds sieve max_n", hi);

    PsiTable table{lo, hi, {}};
    try {
        table.values.resize(hi - lo);
    } catch (const std::bad_alloc &) {
        throw resource_error("sieve_psi: allocation failed", hi - lo);
    }

    const u64 nseg = (hi - lo + config.segment_size - 1) / config.segment_size;
    auto run_segment = [&](u64 s) {
        const u64 a = lo + s * config.segment_size;
        const u64 b = std::min(hi, a + config.segment_size);
        for (u64 n = a; n < b; ++n)
            table.values[n - lo] = spf.psi(n);
    };

    unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<u64>(workers, nseg));
    if (workers <= 1) {
        for (u64 s = 0; s < nseg; ++s)
            run_segment(s);
        return table;
    }

    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (u64 s = w; s < nseg; s += workers)
                        run_segment(s);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    return table;
}

inline PsiTable sieve_psi(u64 lo, u64 hi, const SieveConfig &config = {}) {
    config.validate();
    if (lo < 1 || hi <= lo)
        throw domain_error("sieve_psi: need 1 <= lo < hi");
    if (hi > config.max_n)
        throw resource_error("sieve_psi: range exceeds sieve max_n", hi);
    return sieve_psi(lo, hi, SpfTable(std::max<u64>(hi - 1, 2)), config);
}

} // namespace psiam
