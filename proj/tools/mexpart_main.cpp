// mexpart: mex-partition counts, their mod-2 congruence identities,
// eta-quotient metadata, and Hecke-operator chains, with JSON reports.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mexpart/config.hpp"
#include "mexpart/errors.hpp"
#include "mexpart/genfun.hpp"
#include "mexpart/hecke.hpp"
#include "mexpart/partition.hpp"
#include "mexpart/serialize.hpp"

namespace {

using namespace mexpart;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct Output {
    std::string format = "json";  // json | table | csv
    std::string out_path;         // empty = stdout
};

// JSON goes to the chosen stream as {"manifest", "result"}; table/csv modes
// print the rendered text and push the manifest to stderr so the projection
// stays clean.
void emit(const std::string& command, const ordered_json& params, const ordered_json& truncations,
          const ordered_json& result, const Output& out,
          const std::chrono::steady_clock::time_point& started, const std::string& rendered) {
    auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    ordered_json manifest{{"command", command},        {"parameters", params},
                          {"engine_version", kEngineVersion}, {"truncations", truncations},
                          {"wall_ms", wall_ms},        {"result_digest", json_digest(result)}};

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.out_path.empty()) {
        file.open(out.out_path);
        if (!file) throw Error("cannot open output file: " + out.out_path);
        os = &file;
    }
    if (out.format == "json") {
        ordered_json doc{{"manifest", manifest}, {"result", result}};
        *os << doc.dump(2) << "\n";
    } else {
        *os << rendered;
        std::cerr << manifest.dump() << "\n";
    }
}

std::string coeff_str(const QSeries& f, std::size_t n) { return dec_string(f.at(n)); }

int run_compute(long t, long n_max, bool parity, std::uint64_t mod, bool oracle, long oracle_cap,
                bool emit_series, const Output& out, const EngineConfig& config) {
    auto started = std::chrono::steady_clock::now();
    if (n_max < 0) throw Error("--n-max must be non-negative");
    Ring ring = parity ? Ring::mod(2) : (mod > 0 ? Ring::mod(mod) : Ring::exact());
    std::size_t trunc = static_cast<std::size_t>(n_max) + 1;
    QSeries series = ptt_series(t, trunc, ring);

    ordered_json rows = ordered_json::array();
    std::ostringstream table, csv;
    table << "n\tp_{" << t << "," << t << "}(n)" << (ring.is_exact() ? "" : " (reduced)") << "\n";
    csv << "n,value\n";
    for (long n = 0; n <= n_max; ++n) {
        std::string v = coeff_str(series, static_cast<std::size_t>(n));
        rows.push_back({n, v});
        table << n << "\t" << v << "\n";
        csv << n << "," << v << "\n";
    }

    bool oracle_ok = true;
    long oracle_upto = -1;
    if (oracle) {
        oracle_upto = std::min({n_max, oracle_cap, config.enumeration_cap});
        for (long n = 0; n <= oracle_upto; ++n) {
            long long direct = p_direct(n, MexSpec(t, t), config.enumeration_cap);
            int128 expected = ring.is_exact()
                                  ? static_cast<int128>(direct)
                                  : static_cast<int128>(direct % static_cast<long long>(ring.modulus));
            if (series.at(static_cast<std::size_t>(n)) != expected) {
                oracle_ok = false;
                std::cerr << "oracle mismatch at n = " << n << ": series "
                          << coeff_str(series, n) << ", direct count " << direct << "\n";
            }
        }
    }

    ordered_json result{{"t", t}, {"rows", rows}};
    if (oracle) {
        result["oracle_checked_up_to"] = oracle_upto;
        result["oracle_ok"] = oracle_ok;
    }
    if (emit_series) result["series"] = qseries_to_json(series);

    ordered_json params{{"t", t},   {"n_max", n_max},   {"parity", parity},
                        {"mod", mod}, {"oracle", oracle}, {"oracle_cap", oracle_cap}};
    emit("compute", params, {{"series", trunc}}, result, out, started,
         out.format == "csv" ? csv.str() : table.str());
    return oracle_ok ? kExitOk : kExitVerificationFailure;
}

struct CheckRow {
    std::string name;
    bool pass;
    std::string detail;
};

int run_verify_identities(long alpha_max, std::size_t T, bool negative_control, const Output& out,
                          const EngineConfig& config) {
    auto started = std::chrono::steady_clock::now();
    std::vector<CheckRow> checks;
    auto push = [&](const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    };

    // theta product form: psi = (q^2;q^2)^2 / (q;q)
    push("psi-product", psi_series(T) == euler_product({{2, 2}, {1, -1}}, T, Ring::exact()));

    for (long p : {2L, 3L, 5L}) {
        for (unsigned j = 1; j <= 3; ++j) {
            push("binomial-congruence-p" + std::to_string(p) + "-j" + std::to_string(j),
                 verify_binomial_congruence(p, j, std::min<std::size_t>(T, 60)));
        }
    }

    std::vector<long> ts;
    for (long a = 1; a <= alpha_max; ++a) {
        ts.push_back(1L << a);
        ts.push_back(3L * (1L << a));
    }
    for (long t : ts) {
        bool ok = ptt_parity_series(t, T) == reduce_mod(ptt_series(t, T, Ring::exact()), 2);
        push("parity-chain-t" + std::to_string(t), ok);
    }

    for (long alpha = 1; alpha <= alpha_max; ++alpha) {
        Ring rg = Ring::mod(1u << (alpha + 1));
        QSeries g = euler_product(build_G(alpha).exps, T, rg);
        push("aux-power-congruence-G-a" + std::to_string(alpha),
             power(g, 1u << alpha) == QSeries::one(rg, T));
        Ring rr = Ring::mod(1u << (alpha + 2));
        QSeries r = euler_product(build_R(alpha).exps, T, rr);
        push("aux-power-congruence-R-a" + std::to_string(alpha),
             power(r, 1u << (alpha + 1)) == QSeries::one(rr, T));
    }

    for (long t : {1L, 2L, 3L, 4L}) {
        QSeries s = ptt_series(t, std::min<std::size_t>(T, 26), Ring::exact());
        bool ok = true;
        for (long n = 0; n < static_cast<long>(s.trunc()); ++n) {
            if (s.at(n) != static_cast<int128>(p_direct(n, MexSpec(t, t), config.enumeration_cap))) {
                ok = false;
                break;
            }
        }
        push("series-oracle-t" + std::to_string(t), ok);
    }

    for (long alpha = 1; alpha <= std::min(alpha_max, 2L); ++alpha) {
        for (Family fam : {Family::H, Family::S}) {
            EtaQuotient eq = fam == Family::H ? build_H(alpha) : build_S(alpha);
            std::string tag = (fam == Family::H ? "H" : "S") + std::string("-a") +
                              std::to_string(alpha);
            if (negative_control && fam == Family::H && alpha == 1) {
                auto exps = eq.exps;
                exps.begin()->second += 1;  // deliberately corrupted exponent map
                eq = make_eta_quotient(eq.level, exps);
                tag += "-corrupted";
            }
            long tt = (fam == Family::H ? 1 : 3) * (1L << alpha);
            long lead = 3 * tt - 1;  // 3*2^a - 1, resp. 9*2^a - 1
            bool ok = true;
            std::string detail;
            try {
                QSeries expansion = q_expansion(eq, T, Ring::mod(2));
                QSeries parity = ptt_parity_series(tt, T / 24 + 2);
                for (std::size_t e = 0; e < expansion.trunc(); ++e) {
                    bool on_track = e >= static_cast<std::size_t>(lead) &&
                                    (e - static_cast<std::size_t>(lead)) % 24 == 0;
                    int128 want = on_track ? parity.at((e - lead) / 24) : 0;
                    if (expansion.at(e) != want) {
                        ok = false;
                        detail = "first mismatch at exponent " + std::to_string(e);
                        break;
                    }
                }
            } catch (const Error& e) {
                ok = false;
                detail = e.what();
            }
            push("expansion-indexing-" + tag, ok, detail);

            ModularMeta meta = fam == Family::H ? family_meta_H(alpha) : family_meta_S(alpha);
            LemmaReport lemma = verify_lemma(eq, meta);
            std::string failed;
            for (const auto& item : lemma.items)
                if (!item.pass) failed += (failed.empty() ? "" : ", ") + item.item;
            push("metadata-" + tag, lemma.all_pass, failed.empty() ? "" : "failed: " + failed);
        }
    }

    bool all_pass = true;
    ordered_json rows = ordered_json::array();
    std::ostringstream table, csv;
    csv << "name,pass,detail\n";
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        rows.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        table << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
              << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        csv << c.name << "," << (c.pass ? "true" : "false") << "," << c.detail << "\n";
    }
    table << (all_pass ? "all checks passed\n" : "some checks FAILED\n");

    ordered_json result{{"checks", rows}, {"all_pass", all_pass}};
    ordered_json params{{"alpha_max", alpha_max}, {"T", T}, {"negative_control", negative_control}};
    emit("verify-identities", params, {{"T", T}}, result, out, started,
         out.format == "csv" ? csv.str() : table.str());
    return all_pass ? kExitOk : kExitVerificationFailure;
}

EtaQuotient resolve_quotient(const std::string& builtin, long alpha, const std::string& spec_file) {
    if (!spec_file.empty()) {
        std::ifstream in(spec_file);
        if (!in) throw Error("cannot open eta-quotient file: " + spec_file);
        ordered_json j;
        in >> j;
        return eta_quotient_from_json(j);
    }
    if (builtin == "H") return build_H(alpha);
    if (builtin == "S") return build_S(alpha);
    if (builtin == "G") return build_G(alpha);
    if (builtin == "R") return build_R(alpha);
    throw Error("unknown builtin family: " + builtin);
}

int run_eta_report(const std::string& builtin, long alpha, const std::string& spec_file,
                   std::size_t expansion_terms, const Output& out) {
    auto started = std::chrono::steady_clock::now();
    EtaQuotient eq = resolve_quotient(builtin, alpha, spec_file);

    ordered_json result{{"quotient", eta_quotient_to_json(eq)}};
    auto [c1, c2] = check_level_conditions(eq);
    result["level_conditions"] = {c1, c2};

    long base = eq.exps.rbegin()->first;  // largest eta argument
    try {
        long m = minimal_level_multiplier(eq.exps, base);
        result["base_level"] = base;
        result["minimal_multiplier"] = m;
        result["minimal_admissible_level"] = base * m;
    } catch (const SearchCapError& e) {
        result["minimal_multiplier_error"] = e.what();
    }

    std::ostringstream table;
    table << "level " << eq.level << ", conditions (" << c1 << ", " << c2 << ") mod 24\n";
    try {
        long w = weight(eq);
        KroneckerCharacter chi = character(eq);
        result["weight"] = w;
        result["character"] = character_to_json(chi);
        table << "weight " << w << ", character numerator " << chi.numerator << "\n";
    } catch (const WeightParityError& e) {
        result["weight_error"] = e.what();
        table << "weight undefined: " << e.what() << "\n";
    }

    CuspReport cusps = cusp_report(eq);
    result["cusps"] = cusp_report_to_json(cusps);
    table << "cusps: min order " << cusps.min_order.str()
          << (cusps.holomorphic ? " (holomorphic)" : " (NOT holomorphic)") << "\n";

    if (spec_file.empty() && (builtin == "H" || builtin == "S")) {
        Family fam = builtin == "H" ? Family::H : Family::S;
        result["family_multiplier"] = family_level_multiplier(fam);
        ModularMeta meta = fam == Family::H ? family_meta_H(alpha) : family_meta_S(alpha);
        result["expected"] = modular_meta_to_json(meta);
        result["lemma"] = lemma_report_to_json(verify_lemma(eq, meta));
    }

    if (expansion_terms > 0)
        result["expansion_mod2"] = qseries_to_json(q_expansion(eq, expansion_terms, Ring::mod(2)));

    ordered_json params{{"builtin", builtin}, {"alpha", alpha}, {"spec_file", spec_file}};
    emit("eta-report", params, {{"expansion", expansion_terms}}, result, out, started, table.str());
    return kExitOk;
}

int run_hecke(const std::string& builtin, long alpha, const std::string& primes_arg, std::size_t T,
              bool probe, const std::string& pool_arg, int max_len, std::size_t window,
              const Output& out) {
    auto started = std::chrono::steady_clock::now();
    auto parse_list = [](const std::string& s) {
        std::vector<long> v;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) v.push_back(std::stol(item));
        }
        return v;
    };

    if (builtin != "H" && builtin != "S") throw Error("hecke needs --builtin H or S");
    Family fam = builtin == "H" ? Family::H : Family::S;
    EtaQuotient eq = fam == Family::H ? build_H(alpha) : build_S(alpha);
    HeckeContext ctx = context_for(eq);

    ordered_json result;
    std::ostringstream table;
    if (probe) {
        std::vector<long> pool = parse_list(pool_arg);
        auto found = probe_annihilating_chain(fam, alpha, pool, max_len, window);
        result["probe"] = {{"pool", pool}, {"max_len", max_len}, {"window", window}};
        result["found"] = found.has_value();
        if (found) {
            std::size_t t = window;
            for (long p : *found) t *= static_cast<std::size_t>(p);
            QSeries f = q_expansion(eq, t, Ring::mod(2));
            result["chain"] = chain_report_to_json(apply_chain(f, *found, ctx));
            table << "annihilating chain found: ";
            for (long p : *found) table << p << " ";
            table << "\n";
        } else {
            table << "no annihilating chain found at this scale (not a refutation)\n";
        }
    } else {
        std::vector<long> primes = parse_list(primes_arg);
        QSeries f = q_expansion(eq, T, Ring::mod(2));
        ChainReport report = apply_chain(f, primes, ctx);
        result = chain_report_to_json(report);
        table << "chain";
        for (long p : primes) table << " T_" << p;
        table << ": annihilated=" << (report.annihilated ? "true" : "false")
              << ", surviving=" << report.surviving_exponents.size() << "\n";
    }

    ordered_json params{{"builtin", builtin}, {"alpha", alpha}, {"primes", primes_arg},
                        {"T", T},             {"probe", probe}};
    emit("hecke", params, {{"T", T}}, result, out, started, table.str());
    return kExitOk;
}

int run_density(long t, long X, const Output& out, const EngineConfig& config) {
    auto started = std::chrono::steady_clock::now();
    ParityScanReport report = density_scan(t, X, config.threads);
    ordered_json result = parity_scan_to_json(report);

    std::ostringstream table, csv;
    table << "t=" << t << " X=" << X << " even=" << report.even_count
          << " odd=" << report.odd_count << " even_ratio="
          << static_cast<double>(report.even_count) / static_cast<double>(X + 1)
          << (report.exploratory ? " (exploratory)" : "") << "\n";
    csv << "n,parity\n";
    std::size_t next_odd = 0;
    for (long n = 0; n <= X; ++n) {
        bool odd = next_odd < report.odd_indices.size() && report.odd_indices[next_odd] == n;
        if (odd) ++next_odd;
        csv << n << "," << (odd ? 1 : 0) << "\n";
    }

    ordered_json params{{"t", t}, {"X", X}};
    emit("density", params, {{"series", X + 1}}, result, out, started,
         out.format == "csv" ? csv.str() : table.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mex-partition functions, congruence identity checks, eta-quotient metadata, "
                 "and Hecke chains"};
    app.require_subcommand(1);
    app.fallthrough();  // --format/--out/--config may follow the subcommand

    Output out;
    std::string config_path;
    app.add_option("--format", out.format, "json (default), table, or csv")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    app.add_option("--out", out.out_path, "write output to a file instead of stdout");
    app.add_option("--config", config_path, "key = value config file");

    long t = 2, n_max = 20, alpha = 1, alpha_max = 2, X = 200, oracle_cap = 40;
    std::size_t T = 300, expansion_terms = 0, window = 200;
    bool parity = false, oracle = false, emit_series = false, negative_control = false,
         probe = false;
    std::uint64_t mod = 0;
    std::string builtin = "H", spec_file, primes = "5,7", pool = "5,7,11,13";
    int max_len = 2;

    auto* compute = app.add_subcommand("compute", "table of p_{t,t}(n)");
    compute->add_option("--t", t, "the t in p_{t,t}")->required();
    compute->add_option("--n-max", n_max, "largest n to print");
    auto* parity_flag = compute->add_flag("--parity", parity, "reduce mod 2");
    compute->add_option("--mod", mod, "reduce mod m")->excludes(parity_flag);
    compute->add_flag("--oracle", oracle, "re-verify against brute-force enumeration");
    compute->add_option("--oracle-cap", oracle_cap, "largest n the oracle re-checks");
    compute->add_flag("--emit-series", emit_series, "include the raw series JSON");

    auto* verify = app.add_subcommand("verify-identities", "run the congruence identity suite");
    verify->add_option("--alpha-max", alpha_max, "largest alpha in the family checks");
    verify->add_option("--T", T, "truncation order");
    verify->add_flag("--negative-control", negative_control,
                     "corrupt an exponent map on purpose; the suite must fail");

    auto* eta = app.add_subcommand("eta-report", "modular metadata and cusp orders");
    eta->add_option("--builtin", builtin, "H, S, G, or R");
    eta->add_option("--alpha", alpha, "family parameter");
    eta->add_option("--spec-file", spec_file, "JSON eta-quotient file instead of a builtin");
    eta->add_option("--expansion", expansion_terms, "emit this many mod-2 expansion coefficients");

    auto* hecke = app.add_subcommand("hecke", "apply a Hecke chain mod 2");
    hecke->add_option("--builtin", builtin, "H or S")->required();
    hecke->add_option("--alpha", alpha, "family parameter");
    hecke->add_option("--primes", primes, "comma-separated chain, e.g. 5,7");
    hecke->add_option("--T", T, "initial truncation of the expansion");
    hecke->add_flag("--probe", probe, "search for an annihilating chain");
    hecke->add_option("--pool", pool, "probe prime pool");
    hecke->add_option("--max-len", max_len, "probe chain length cap");
    hecke->add_option("--window", window, "post-chain coefficients the probe must see vanish");

    auto* density = app.add_subcommand("density", "parity census of p_{t,t}(n), n <= X");
    density->add_option("--t", t, "the t in p_{t,t}")->required();
    density->add_option("--X", X, "scan bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        EngineConfig config;
        if (!config_path.empty()) config = load_config(config_path);
        config = apply_env_overrides(config);

        if (compute->parsed())
            return run_compute(t, n_max, parity, mod, oracle, oracle_cap, emit_series, out,
                               config);
        if (verify->parsed())
            return run_verify_identities(alpha_max, T, negative_control, out, config);
        if (eta->parsed()) return run_eta_report(builtin, alpha, spec_file, expansion_terms, out);
        if (hecke->parsed())
            return run_hecke(builtin, alpha, primes, T, probe, pool, max_len, window, out);
        if (density->parsed()) return run_density(t, X, out, config);
        return kExitUsage;
    } catch (const LimitExceededError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const TruncationError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const SearchCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const OverflowError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
