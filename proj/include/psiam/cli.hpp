#pragma once

/** Command-line driver. Exit codes: 0 success, 1 verification or runtime
 *  failure, 2 flag or input-domain error. */

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bfile.hpp"
#include "experiments.hpp"
#include "tables.hpp"

namespace psiam::cli {

namespace detail {

template <typename Range> void print_row(std::ostream &out, const Range &xs, u64 last) {
    for (u64 x : xs)
        out << x << ' ';
    out << last << '\n';
}

inline bool write_file(const std::string &path, const std::string &text, std::ostream &err) {
    std::ofstream f(path, std::ios::binary);
    if (!(f << text)) {
        err << "error: cannot write " << path << '\n';
        return false;
    }
    return true;
}

} // namespace detail

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Dedekind psi function: amicable pairs, k-tuples, abundance and density experiments", "psiam"};
    app.require_subcommand(1);

    u64 psi_n = 0;
    auto *psi_cmd = app.add_subcommand("psi", "print psi(N), s_psi(N) and the factorization of N");
    psi_cmd->add_option("N", psi_n)->required();

    u64 pairs_max = 0;
    std::string bfile_a, bfile_b;
    auto *pairs_cmd = app.add_subcommand("pairs", "psi-amicable pairs (a, b) with a <= B, one 'a b psi' line each");
    pairs_cmd->add_option("--max", pairs_max, "bound B on the smaller member")->required();
    pairs_cmd->add_option("--bfile-a", bfile_a, "write smaller members as an OEIS b-file");
    pairs_cmd->add_option("--bfile-b", bfile_b, "write larger members as an OEIS b-file");

    std::string kind_name;
    unsigned tuple_k = 0;
    u64 tuples_max = 0;
    auto *tuples_cmd = app.add_subcommand("tuples", "psi-amicable k-tuples with all members <= B");
    tuples_cmd->add_option("--kind", kind_name)->required()->check(CLI::IsMember({"sum", "yanney"}));
    tuples_cmd->add_option("--k", tuple_k)->required()->check(CLI::Range(2u, 64u));
    tuples_cmd->add_option("--max", tuples_max)->required();

    u64 abundant_max = 0;
    auto *abundant_cmd = app.add_subcommand("primitive-abundant", "primitive psi-abundant numbers <= B");
    abundant_cmd->add_option("--max", abundant_max)->required();

    u64 construct_a = 0;
    std::vector<u64> construct_ns;
    auto *construct_cmd = app.add_subcommand("construct", "lift N1..Nk by the multiplier a");
    construct_cmd->add_option("--a", construct_a)->required();
    construct_cmd->add_option("--ns", construct_ns)->required()->delimiter(',');

    u64 search_a_max = 0;
    std::vector<u64> search_ns;
    auto *csearch_cmd = app.add_subcommand("construct-search", "all multipliers a <= B that lift N1..Nk");
    csearch_cmd->add_option("--ns", search_ns)->required()->delimiter(',');
    csearch_cmd->add_option("--a-max", search_a_max)->required();

    u64 density_max = 0, density_step = 0;
    auto *density_cmd = app.add_subcommand("density", "CSV of the pair counting function M(n)");
    density_cmd->add_option("--max", density_max)->required();
    density_cmd->add_option("--step", density_step)->required();

    u64 exp_max = 0;
    std::vector<u64> exp_As{1, 10, 100, 1000};
    std::vector<u64> exp_ps{2, 3, 5};
    std::vector<double> exp_etas{0.5};
    std::string out_dir;
    auto *exp_cmd = app.add_subcommand("experiments", "lemma statistics as CSV reports");
    exp_cmd->add_option("--max", exp_max, "scale x")->required();
    exp_cmd->add_option("--A", exp_As, "truncation / exponent parameters")->delimiter(',')->capture_default_str();
    exp_cmd->add_option("--p", exp_ps, "primes for residue counts")->delimiter(',')->capture_default_str();
    exp_cmd->add_option("--eta", exp_etas, "gap thresholds")->delimiter(',')->capture_default_str();
    exp_cmd->add_option("--out-dir", out_dir, "write one CSV file per report instead of stdout");

    auto *verify_cmd = app.add_subcommand("verify-tables", "re-derive the embedded tuple tables by exhaustive search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*psi_cmd) {
            const Factorization f = factorize(psi_n);
            const PsiValue v = psi(f);
            out << "n=" << v.n << '\n' << "ψ=" << v.psi << '\n' << "s_ψ=" << v.s_psi << '\n' << "factorization=";
            if (f.factors.empty())
                out << '1';
            for (std::size_t i = 0; i < f.factors.size(); ++i) {
                out << (i ? " * " : "") << f.factors[i].prime;
                if (f.factors[i].exponent > 1)
                    out << '^' << f.factors[i].exponent;
            }
            out << '\n';
            return 0;
        }

        if (*pairs_cmd) {
            const auto pairs = find_pairs(pairs_max);
            std::vector<u64> as, bs;
            for (const auto &p : pairs) {
                out << p.a << ' ' << p.b << ' ' << p.v << '\n';
                as.push_back(p.a);
                bs.push_back(p.b);
            }
            if ((!bfile_a.empty() || !bfile_b.empty()) && pairs.empty()) {
                err << "error: no pairs below the bound; b-file not written\n";
                return 1;
            }
            if (!bfile_a.empty() && !detail::write_file(bfile_a, export_bfile(as), err))
                return 1;
            if (!bfile_b.empty() && !detail::write_file(bfile_b, export_bfile(bs), err))
                return 1;
            return 0;
        }

        if (*tuples_cmd) {
            const TupleKind kind = kind_name == "sum" ? TupleKind::SumEqual : TupleKind::Yanney;
            for (const auto &t : find_ktuples(kind, tuple_k, tuples_max))
                detail::print_row(out, t.members, t.v);
            return 0;
        }

        if (*abundant_cmd) {
            for (u64 n : enumerate_primitive_abundant(abundant_max))
                out << n << '\n';
            return 0;
        }

        if (*construct_cmd) {
            try {
                const AmicableTuple t = verify_construction(construct_a, construct_ns);
                detail::print_row(out, t.members, t.v);
                return 0;
            } catch (const ConstructionError &e) {
                out << e.what() << '\n';
                return 1;
            }
        }

        if (*csearch_cmd) {
            for (u64 a : search_construction_multiplier(search_ns, search_a_max))
                out << a << '\n';
            return 0;
        }

        if (*density_cmd) {
            csv::write_density(out, density_curve(density_max, density_step));
            return 0;
        }

        if (*exp_cmd) {
            const LemmaStats s = lemma_stats(exp_max, exp_ps, exp_As, exp_etas);
            auto emit = [&](const std::string &name, auto &&write) {
                if (out_dir.empty()) {
                    out << "# " << name << '\n';
                    write(out);
                    return true;
                }
                std::filesystem::create_directories(out_dir);
                std::ofstream f(std::filesystem::path(out_dir) / (name + ".csv"));
                write(f);
                if (!f) {
                    err << "error: cannot write " << name << ".csv\n";
                    return false;
                }
                return true;
            };
            bool ok = emit("truncation", [&](std::ostream &os) { csv::write_truncation(os, s.truncation); }) &&
                      emit("residue", [&](std::ostream &os) { csv::write_residue(os, s.residues); }) &&
                      emit("window", [&](std::ostream &os) { csv::write_window(os, s.window); }) &&
                      emit("conditions", [&](std::ostream &os) { csv::write_conditions(os, s.conditions); }) &&
                      emit("exceedance", [&](std::ostream &os) { csv::write_exceedance(os, s.exceedance); });
            if (s.window.inverted)
                err << "note: window inverted at this scale ((log x)^10 = " << s.window.lower
                    << " >= x^(1/(40 nu)) = " << s.window.upper << ")\n";
            for (const auto &c : s.truncation)
                ok = ok && c.holds;
            return ok ? 0 : 1;
        }

        if (*verify_cmd) {
            bool ok = true;
            for (const auto &table : embedded_tables()) {
                const TableVerification r = verify_table(table);
                out << r.name << " (" << to_string(table.kind) << ", k=" << table.k << ", bound " << r.bound
                    << "): " << r.found << '/' << r.entries << " found, " << r.extra.size() << " extra, "
                    << (r.ok() ? "OK" : "FAIL") << '\n';
                auto list = [&](const char *tag, const auto &rows) {
                    for (const auto &row : rows) {
                        out << "  " << tag;
                        for (u64 x : row)
                            out << ' ' << x;
                        out << '\n';
                    }
                };
                list("MISSING", r.missing);
                list("INVALID", r.invalid);
                list("EXTRA", r.extra);
                ok = ok && r.ok();
            }
            return ok ? 0 : 1;
        }
    } catch (const domain_error &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv{"psiam"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace psiam::cli
