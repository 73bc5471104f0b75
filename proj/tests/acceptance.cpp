// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "psiam/cli.hpp"
#include "psiam/psiam.hpp"

using namespace psiam;

namespace {

using clock_type = std::chrono::steady_clock;

int failures = 0;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(int id, bool ok, const std::string &detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

void note(const std::string &detail) {
    std::printf("       %s\n", detail.c_str());
    std::fflush(stdout);
}

std::string cli_out(std::vector<std::string> args, int &code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

std::string join(const std::vector<u64> &xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? ", " : "") + std::to_string(xs[i]);
    return s + ")";
}

const EmbeddedTable &table_named(const std::string &name) {
    for (const auto &t : embedded_tables())
        if (t.name == name)
            return t;
    throw std::runtime_error("no table " + name);
}

void criterion_1() {
    const auto t0 = clock_type::now();
    int c1 = 0, c2 = 0;
    const std::string a = cli_out({"pairs", "--max", "1330"}, c1);
    const std::string b = cli_out({"pairs", "--max", "1329"}, c2);
    const double dt = seconds_since(t0);
    const bool ok = c1 == 0 && c2 == 0 && a == "1330 1550 2880\n" && b.empty() && dt < 1.0;
    report(1, ok, "pairs --max 1330 -> (1330, 1550); --max 1329 -> none; " + std::to_string(dt) + " s");
}

void criterion_2() {
    const auto &table = table_named("Table 1");
    const auto t0 = clock_type::now();
    const auto literal = verify_table(table, 740'000);
    const double dt = seconds_since(t0);

    const std::vector<u64> spot{79170, 80850, 81900};
    const u64 v = psi(spot[0]).psi;
    const bool spot_ok = v == 241920 && psi(spot[1]).psi == v && psi(spot[2]).psi == v &&
                         spot[0] + spot[1] + spot[2] == v;
    const bool ok = literal.ok() && spot_ok && dt < 120.0;
    report(2, ok,
           "Table 1 at bound 740000: " + std::to_string(literal.found) + "/" + std::to_string(literal.entries) +
               " found, " + std::to_string(literal.extra.size()) + " extra, spot (79170, 80850, 81900) v=241920 " +
               (spot_ok ? "ok" : "wrong") + "; " + std::to_string(dt) + " s");
    for (const auto &m : literal.missing)
        note("missing " + join(m) + ": largest member exceeds the bound 740000");
    for (const auto &m : literal.invalid)
        note("invalid " + join(m));

    const auto full = verify_table(table);
    note(std::string("auxiliary: at bound ") + std::to_string(full.bound) + " " + std::to_string(full.found) + "/" +
         std::to_string(full.entries) + " found, " + (full.ok() ? "all entries valid" : "NOT all entries valid"));
    for (const auto &e : full.extra)
        note("extra (not in table) " + join(e));
}

void criterion_3() {
    const auto t0 = clock_type::now();
    bool ok = true;
    std::string detail;
    for (const char *name : {"Table 2", "Table 3", "Table 4", "Table 5"}) {
        const auto r = verify_table(table_named(name));
        ok = ok && r.ok();
        detail += std::string(name) + " " + std::to_string(r.found) + "/" + std::to_string(r.entries) + "; ";
    }
    struct Spot {
        std::vector<u64> members;
        u64 sum;
        u64 v;
    };
    const std::vector<Spot> spots{{{6, 9, 9}, 24, 12},
                                  {{6, 8, 11, 11}, 36, 12},
                                  {{12, 15, 23, 23, 23}, 96, 24},
                                  {{24, 28, 47, 47, 47, 47}, 240, 48}};
    for (const auto &s : spots) {
        const u64 k = s.members.size();
        const u64 sum = std::accumulate(s.members.begin(), s.members.end(), u64{0});
        bool good = sum == s.sum && sum == (k - 1) * s.v;
        for (u64 m : s.members)
            good = good && psi(m).psi == s.v && psi_divisor_sum(m) == s.v;
        good = good && reverify({TupleKind::Yanney, static_cast<unsigned>(k), s.members, s.v});
        ok = ok && good;
    }
    const double dt = seconds_since(t0);
    ok = ok && dt < 10.0;
    report(3, ok, detail + "spot identities checked; " + std::to_string(dt) + " s");
}

void criterion_4() {
    const auto t0 = clock_type::now();
    u64 bad = 0;
    for (u64 n = 1; n <= 100'000; ++n)
        bad += psi(factorize(n)).psi != psi_divisor_sum(n);
    const double dt = seconds_since(t0);
    report(4, bad == 0 && dt < 30.0,
           "psi(factorize(n)) == divisor sum for n <= 1e5: " + std::to_string(bad) + " mismatches; " +
               std::to_string(dt) + " s");
}

void criterion_5() {
    const PsiTable table = sieve_psi(1, 1'000'000);
    u64 bad = 0;
    for (u64 n = 1; n <= 1000; ++n)
        bad += table(n) != psi(n).psi || table(n) != oracle::psi(n);
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<u64> pick(1, 999'999);
    for (int i = 0; i < 10'000; ++i) {
        const u64 n = pick(rng);
        bad += table(n) != psi(n).psi;
    }
    report(5, bad == 0, "sieve over [1, 1e6) vs per-n at all n <= 1e3 and 1e4 random points: " +
                            std::to_string(bad) + " mismatches");
}

void criterion_6() {
    const SpfTable spf(100'000);
    bool ok = true;
    std::string failed;
    for (u64 x : {1'000, 10'000, 100'000})
        for (u64 A : {1, 10, 100, 1000}) {
            const auto c = truncation_gap_check(x, A, spf);
            if (!c.holds) {
                ok = false;
                failed += " (" + std::to_string(x) + "," + std::to_string(A) + ")";
            }
        }
    report(6, ok, "sum (psi - psi_A) < x^2/A on {1e3,1e4,1e5} x {1,10,100,1000}" +
                      (ok ? std::string() : ": fails at" + failed));
}

void criterion_7() {
    const auto got = enumerate_primitive_abundant(10'000);
    const auto want = oracle::primitive_abundant(10'000);
    const bool ok = got == want && !got.empty() && got.front() == 30;
    report(7, ok, "primitive psi-abundant <= 1e4: " + std::to_string(got.size()) + " (oracle " +
                      std::to_string(want.size()) + "), smallest " + (got.empty() ? "-" : std::to_string(got.front())));
}

void criterion_8() {
    constexpr u64 N = 100'000;
    const SpfTable spf(N);
    const PsiTable table = sieve_psi(1, N + 1, spf);
    u64 bad_mult = 0, bad_pp = 0, bad_rad = 0, bad_perfect = 0, bad_fiber = 0;

    for (u64 m = 1; m <= 2000; ++m)
        for (u64 n = m; m * n <= N; ++n)
            if (std::gcd(m, n) == 1)
                bad_mult += table(m * n) != table(m) * table(n);

    for (u64 p = 2; p <= N; ++p) {
        if (!is_prime(p))
            continue;
        for (u64 prev = 1, pa = p; pa <= N; prev = pa, pa *= p)
            bad_pp += table(pa) != pa + prev;
    }

    for (u64 n = 1; n <= N; ++n) {
        const Factorization f = spf.factorize(n);
        const u64 r = radical(f);
        bad_rad += u128{table(n)} * r != u128{table(r)} * n;
        bad_perfect += (table(n) == 2 * n) != (r == 6);
    }

    const FiberIndex idx(N);
    std::vector<unsigned char> seen(N + 1, 0);
    u64 covered = 0, last_v = 0;
    idx.for_each_fiber([&](const FiberIndex::Fiber &fb) {
        const u64 v = fb.value;
        bad_fiber += v <= last_v;
        last_v = v;
        for (u64 n : fb.members) {
            bad_fiber += n == 0 || n > N || seen[n] || table(n) != v;
            if (n >= 1 && n <= N)
                seen[n] = 1;
            ++covered;
        }
    });
    bad_fiber += covered != N;

    const bool ok = bad_mult + bad_pp + bad_rad + bad_perfect + bad_fiber == 0;
    report(8, ok,
           "n <= 1e5: multiplicative " + std::to_string(bad_mult) + ", prime powers " + std::to_string(bad_pp) +
               ", radical ratio " + std::to_string(bad_rad) + ", perfect<=>rad 6 " + std::to_string(bad_perfect) +
               ", fiber partition " + std::to_string(bad_fiber) + " violations");
}

void criterion_9() {
    // independent check of the counting function against a brute-force pair scan
    constexpr u64 N = 100'000, step = 10'000;
    const PsiTable table = sieve_psi(1, 4 * N);
    std::vector<u64> starts;
    for (u64 a = 2; a <= N; ++a) {
        const u64 v = table(a);
        if (v <= 2 * a)
            continue;
        const u64 b = v - a;
        if (b > a && b < table.hi && table(b) == v)
            starts.push_back(a);
    }
    const std::vector<u64> frozen{6, 13, 17, 21, 23, 25, 27, 32, 33, 36};
    const auto curve = density_curve(N, step);
    bool density_ok = curve.checkpoints.size() == frozen.size();
    for (std::size_t i = 0; density_ok && i < frozen.size(); ++i) {
        const u64 n = (i + 1) * step;
        const u64 brute = std::upper_bound(starts.begin(), starts.end(), n) - starts.begin();
        density_ok = curve.checkpoints[i].n == n && curve.checkpoints[i].M == frozen[i] && brute == frozen[i];
    }

    const PsiTable small = sieve_psi(1, 20'001);
    bool monotone = true;
    for (u64 p : {2, 3, 5, 7})
        for (unsigned A = 1; A < 16; ++A)
            monotone = monotone && residue_density(small, 20'000, p, A).count <=
                                       residue_density(small, 20'000, p, A + 1).count;

    const auto w = prime_window_report(10'000);
    bool window_ok = w.inverted && !(w.lower < w.upper);
    for (const auto &row : w.rows)
        window_ok = window_ok && !row.has_prime_in_window;

    report(9, density_ok && monotone && window_ok,
           std::string("density checkpoints ") + (density_ok ? "match" : "differ") + ", residue counts " +
               (monotone ? "monotone" : "not monotone") + " in A, window at 1e4 " +
               (window_ok ? "inverted" : "not inverted") + " (lower " + std::to_string(w.lower) + ", upper " +
               std::to_string(w.upper) + ")");
}

} // namespace

int main() {
    const auto t0 = clock_type::now();
    for (auto *c : {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
                    criterion_8, criterion_9}) {
        try {
            c();
        } catch (const std::exception &e) {
            std::printf("[FAIL] exception: %s\n", e.what());
            ++failures;
        }
    }
    std::printf("%d failing criteria, %.1f s total\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
