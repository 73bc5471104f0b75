#pragma once

/** Finite-scale experiments behind the zero-density result for psi-amicable
 *  pairs: the counting function M(n), the truncation-gap inequality
 *  sum (psi - psi_A) < x^2 / A, residue counts of psi modulo p^A, the three
 *  smoothness conditions on m <= n, and the prime-divisor window report.
 *
 *  Logarithms are natural. Floating point appears only in the condition
 *  thresholds and window endpoints; every count is exact. */

#include <cmath>
#include <iomanip>
#include <ostream>
#include <vector>

#include "search.hpp"

namespace psiam {

struct DensityCheckpoint {
    u64 n;
    u64 M; ///< number of pairs (a, b) with a < b and a <= n
    friend bool operator==(const DensityCheckpoint &, const DensityCheckpoint &) = default;
};

struct DensityReport {
    std::vector<DensityCheckpoint> checkpoints;
};

/// Checkpoints from an already computed pair list (ascending in a).
inline DensityReport density_curve(std::span<const PairRecord> pairs, u64 max_n, u64 step) {
    if (step == 0 || max_n < step)
        throw domain_error("density_curve: need step >= 1 and max_n >= step");
    DensityReport r;
    std::size_t i = 0;
    for (u64 n = step; n <= max_n; n += step) {
        while (i < pairs.size() && pairs[i].a <= n)
            ++i;
        r.checkpoints.push_back({n, i});
        if (n > max_n - step)
            break;
    }
    return r;
}

inline DensityReport density_curve(u64 max_n, u64 step, const SieveConfig &config = {}) {
    if (step == 0 || max_n < step)
        throw domain_error("density_curve: need step >= 1 and max_n >= step");
    const auto pairs = find_pairs(max_n, config);
    return density_curve(pairs, max_n, step);
}

struct TruncationCheck {
    u64 x;
    u64 A;
    u64 sum;       ///< sum over n <= x of psi(n) - psi_A(n)
    u64 bound_num; ///< x^2
    u64 bound_den; ///< A
    bool holds;    ///< sum < x^2 / A
};

inline TruncationCheck truncation_gap_check(u64 x, u64 A, const SpfTable &spf) {
    if (x == 0 || A == 0)
        throw domain_error("truncation_gap_check: need x >= 1 and A >= 1");
    if (x > 1 && x > spf.max_n())
        throw resource_error("truncation_gap_check: x exceeds sieve table", x);
    TruncationCheck c{x, A, 0, detail::checked_mul(x, x, x), A, false};
    for (u64 n = 2; n <= x; ++n) {
        const Factorization f = spf.factorize(n);
        c.sum = detail::checked_add(c.sum, psi(f).psi - psi_truncated(f, A), n);
    }
    c.holds = u128{c.sum} * A < u128{c.bound_num};
    return c;
}

inline TruncationCheck truncation_gap_check(u64 x, u64 A) {
    return truncation_gap_check(x, A, SpfTable(std::max<u64>(x, 2)));
}

struct ResidueCount {
    u64 x;
    u64 p;
    unsigned A;
    u64 count; ///< #{ n <= x : psi(n) != 0 mod p^A }
};

inline ResidueCount residue_density(const PsiTable &table, u64 x, u64 p, unsigned A) {
    if (x == 0 || A == 0)
        throw domain_error("residue_density: need x >= 1 and A >= 1");
    if (!is_prime(p))
        throw domain_error("residue_density: p must be prime");
    if (table.lo != 1 || x >= table.hi)
        throw domain_error("residue_density: table must cover [1, x]");
    ResidueCount r{x, p, A, 0};
    u64 modulus;
    if (!detail::try_pow(p, A, modulus)) {
        // every psi value is in [1, 2^64) and hence nonzero modulo p^A
        r.count = x;
        return r;
    }
    for (u64 n = 1; n <= x; ++n)
        r.count += table(n) % modulus != 0;
    return r;
}

inline ResidueCount residue_density(u64 x, u64 p, unsigned A) {
    if (x == 0)
        throw domain_error("residue_density: need x >= 1");
    return residue_density(sieve_psi(1, x + 1), x, p, A);
}

struct ConditionFlags {
    bool c1; ///< every prime power p^a || m with a > 1 has p^a < (log n)^10
    bool c2; ///< omega(m) < 10 nu
    bool c3; ///< greatest prime factor of m > n^(1/(20 nu)); false for m = 1
    bool all() const { return c1 && c2 && c3; }
};

/// nu = log log n; defined (positive) for n >= 3.
inline double loglog(u64 n) { return std::log(std::log(static_cast<double>(n))); }

inline ConditionFlags erdos_conditions_classify(const Factorization &m, u64 n) {
    if (n < 3)
        throw domain_error("erdos_conditions_classify: n must be >= 3");
    if (m.n == 0)
        throw domain_error("erdos_conditions_classify: m must be >= 1");
    const double logn = std::log(static_cast<double>(n));
    const double nu = std::log(logn);
    const double power_cap = std::pow(logn, 10.0);
    const double gpf_floor = std::pow(static_cast<double>(n), 1.0 / (20.0 * nu));

    ConditionFlags c{true, false, false};
    for (const auto &[p, e] : m.factors) {
        if (e < 2)
            continue;
        u64 pe = 0;
        detail::try_pow(p, e, pe); // p^e divides m, cannot overflow
        if (!(static_cast<double>(pe) < power_cap))
            c.c1 = false;
    }
    c.c2 = static_cast<double>(m.factors.size()) < 10.0 * nu;
    c.c3 = !m.factors.empty() && static_cast<double>(m.factors.back().prime) > gpf_floor;
    return c;
}

inline ConditionFlags erdos_conditions_classify(u64 m, u64 n) {
    if (m == 0)
        throw domain_error("erdos_conditions_classify: m must be >= 1");
    return erdos_conditions_classify(factorize(m), n);
}

struct WindowRow {
    u64 m;
    bool has_prime_in_window;
};

/** The interval ((log n)^10, n^(1/(40 nu))) and, for every primitive psi-abundant
 *  m <= n meeting all three conditions, whether m has a prime divisor inside it.
 *  At any desk-scale n the lower end exceeds the upper one: `inverted`. */
struct WindowReport {
    u64 bound;
    double lower;
    double upper;
    bool inverted;
    std::vector<WindowRow> rows;
};

inline WindowReport prime_window_report(u64 bound) {
    if (bound < 3)
        throw domain_error("prime_window_report: bound must be >= 3");
    const double logn = std::log(static_cast<double>(bound));
    const double nu = std::log(logn);
    WindowReport r{bound, std::pow(logn, 10.0), std::pow(static_cast<double>(bound), 1.0 / (40.0 * nu)), false, {}};
    r.inverted = !(r.lower < r.upper);
    const SpfTable spf(bound);
    for (u64 m : enumerate_primitive_abundant(bound)) {
        const Factorization f = spf.factorize(m);
        if (!erdos_conditions_classify(f, bound).all())
            continue;
        bool hit = false;
        for (const auto &pp : f.factors) {
            const double p = static_cast<double>(pp.prime);
            hit = hit || (r.lower < p && p < r.upper);
        }
        r.rows.push_back({m, hit});
    }
    return r;
}

struct ConditionFailures {
    u64 x;
    u64 c1_fail = 0;
    u64 c2_fail = 0;
    u64 c3_fail = 0;
    u64 any_fail = 0;
};

struct Exceedance {
    u64 x;
    u64 A;
    double eta;
    u64 count; ///< #{ n <= x : psi(n) - psi_A(n) > eta n }
};

struct LemmaStats {
    u64 x;
    ConditionFailures conditions;
    std::vector<ResidueCount> residues;
    std::vector<TruncationCheck> truncation;
    std::vector<Exceedance> exceedance;
    WindowReport window;

    u64 window_hits() const {
        u64 h = 0;
        for (const auto &row : window.rows)
            h += row.has_prime_in_window;
        return h;
    }
};

/// All lemma statistics at scale x. Residues are taken over ps x As.
inline LemmaStats lemma_stats(u64 x, std::span<const u64> ps, std::span<const u64> As, std::span<const double> etas) {
    if (x < 3)
        throw domain_error("lemma_stats: x must be >= 3");
    const SpfTable spf(x);
    const PsiTable table = sieve_psi(1, x + 1, spf);
    LemmaStats s{x, {x}, {}, {}, {}, prime_window_report(x)};

    for (u64 m = 1; m <= x; ++m) {
        const ConditionFlags c = erdos_conditions_classify(spf.factorize(m), x);
        s.conditions.c1_fail += !c.c1;
        s.conditions.c2_fail += !c.c2;
        s.conditions.c3_fail += !c.c3;
        s.conditions.any_fail += !c.all();
    }
    for (u64 p : ps)
        for (u64 A : As)
            s.residues.push_back(residue_density(table, x, p, static_cast<unsigned>(std::min<u64>(A, 1u << 20))));
    for (u64 A : As) {
        s.truncation.push_back(truncation_gap_check(x, A, spf));
        std::vector<u64> gap(x + 1, 0);
        for (u64 n = 2; n <= x; ++n)
            gap[n] = table(n) - psi_truncated(spf.factorize(n), A);
        for (double eta : etas) {
            Exceedance e{x, A, eta, 0};
            for (u64 n = 1; n <= x; ++n)
                e.count += static_cast<long double>(gap[n]) > static_cast<long double>(eta) * n;
            s.exceedance.push_back(e);
        }
    }
    return s;
}

// ---- CSV ----

namespace csv {

inline void write_density(std::ostream &os, const DensityReport &r) {
    os << "n,M\n";
    for (const auto &c : r.checkpoints)
        os << c.n << ',' << c.M << '\n';
}

inline void write_truncation(std::ostream &os, std::span<const TruncationCheck> rows) {
    os << "x,A,sum,bound_num,bound_den,holds\n";
    for (const auto &c : rows)
        os << c.x << ',' << c.A << ',' << c.sum << ',' << c.bound_num << ',' << c.bound_den << ','
           << (c.holds ? "true" : "false") << '\n';
}

inline void write_residue(std::ostream &os, std::span<const ResidueCount> rows) {
    os << "x,p,A,count\n";
    for (const auto &r : rows)
        os << r.x << ',' << r.p << ',' << r.A << ',' << r.count << '\n';
}

inline void write_window(std::ostream &os, const WindowReport &r) {
    const auto flags = os.flags();
    const auto prec = os.precision(10);
    os << "m,lower,upper,has_prime_in_window,window_inverted\n";
    for (const auto &row : r.rows)
        os << row.m << ',' << r.lower << ',' << r.upper << ',' << (row.has_prime_in_window ? "true" : "false") << ','
           << (r.inverted ? "true" : "false") << '\n';
    os.precision(prec);
    os.flags(flags);
}

inline void write_conditions(std::ostream &os, const ConditionFailures &c) {
    os << "x,c1_fail,c2_fail,c3_fail,any_fail\n"
       << c.x << ',' << c.c1_fail << ',' << c.c2_fail << ',' << c.c3_fail << ',' << c.any_fail << '\n';
}

inline void write_exceedance(std::ostream &os, std::span<const Exceedance> rows) {
    os << "x,A,eta,count\n";
    for (const auto &e : rows)
        os << e.x << ',' << e.A << ',' << e.eta << ',' << e.count << '\n';
}

} // namespace csv
} // namespace psiam
