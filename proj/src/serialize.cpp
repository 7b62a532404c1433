#include "mexpart/serialize.hpp"

#include <cstdint>

#include "mexpart/errors.hpp"

namespace mexpart {

namespace {

ordered_json coeff_to_json(int128 v) {
    constexpr int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr int128 hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return dec_string(v);
}

int128 coeff_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return static_cast<int128>(j.get<std::int64_t>());
    if (j.is_string()) return parse_int128(j.get<std::string>());
    throw Error("coefficient must be an integer or a decimal string");
}

}  // namespace

ordered_json qseries_to_json(const QSeries& f) {
    ordered_json ring;
    if (f.ring().is_exact()) {
        ring = {{"kind", "exact"}};
    } else {
        ring = {{"kind", "mod"}, {"m", f.ring().modulus}};
    }
    ordered_json coeffs = ordered_json::array();
    for (std::size_t e = 0; e < f.trunc(); ++e) coeffs.push_back(coeff_to_json(f.at(e)));
    return ordered_json{{"ring", ring}, {"trunc", f.trunc()}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const ordered_json& j) {
    const auto& ring_j = j.at("ring");
    Ring ring = ring_j.at("kind").get<std::string>() == "exact"
                    ? Ring::exact()
                    : Ring::mod(ring_j.at("m").get<std::uint64_t>());
    std::size_t trunc = j.at("trunc").get<std::size_t>();
    QSeries f(ring, trunc);
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() > trunc) throw Error("more coefficients than the truncation order");
    for (std::size_t e = 0; e < coeffs.size(); ++e) f.set(e, coeff_from_json(coeffs[e]));
    return f;
}

ordered_json eta_quotient_to_json(const EtaQuotient& eq) {
    ordered_json exps = ordered_json::array();
    for (const auto& [delta, r] : eq.exps) exps.push_back({delta, r});
    return ordered_json{{"level", eq.level}, {"exps", exps}};
}

EtaQuotient eta_quotient_from_json(const ordered_json& j) {
    std::map<long, long> exps;
    for (const auto& pair : j.at("exps")) {
        if (!pair.is_array() || pair.size() != 2) throw Error("exps entries must be [delta, r]");
        long delta = pair[0].get<long>();
        if (exps.count(delta)) throw Error("duplicate eta argument in exps");
        exps[delta] = pair[1].get<long>();
    }
    return make_eta_quotient(j.at("level").get<long>(), std::move(exps));
}

ordered_json character_to_json(const KroneckerCharacter& chi) {
    return ordered_json{{"numerator", chi.numerator},
                        {"squarefree_kernel", chi.squarefree_kernel},
                        {"raw", chi.raw_string()},
                        {"dirichlet_valid", chi.dirichlet_valid}};
}

ordered_json cusp_report_to_json(const CuspReport& report) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : report.entries) entries.push_back({{"d", e.d}, {"order", e.order.str()}});
    return ordered_json{{"entries", entries},
                        {"min_order", report.min_order.str()},
                        {"holomorphic", report.holomorphic}};
}

ordered_json modular_meta_to_json(const ModularMeta& meta) {
    return ordered_json{{"weight", meta.weight},
                        {"level", meta.level},
                        {"character", character_to_json(meta.character)},
                        {"holomorphic", meta.holomorphic}};
}

ordered_json lemma_report_to_json(const LemmaReport& report) {
    ordered_json items = ordered_json::array();
    for (const auto& item : report.items)
        items.push_back({{"item", item.item}, {"pass", item.pass}, {"detail", item.detail}});
    return ordered_json{{"items", items}, {"all_pass", report.all_pass}};
}

ordered_json parity_scan_to_json(const ParityScanReport& report) {
    return ordered_json{{"t", report.t},
                        {"X", report.X},
                        {"even_count", report.even_count},
                        {"odd_count", report.odd_count},
                        {"claim", report.exploratory ? "exploratory" : "density-family"},
                        {"odd_indices", report.odd_indices}};
}

ordered_json chain_report_to_json(const ChainReport& report) {
    ordered_json surviving = ordered_json::array();
    for (std::size_t i = 0; i < report.surviving_exponents.size() && i < 50; ++i)
        surviving.push_back(report.surviving_exponents[i]);
    return ordered_json{{"primes", report.primes},
                        {"initial_trunc", report.initial_trunc},
                        {"trunc_after", report.trunc_after},
                        {"annihilated", report.annihilated},
                        {"surviving_count", report.surviving_exponents.size()},
                        {"surviving_exponents", surviving}};
}

ordered_json progression_report_to_json(const ProgressionReport& report) {
    return ordered_json{{"family", report.family == Family::H ? "H" : "S"},
                        {"alpha", report.alpha},
                        {"primes", report.primes},
                        {"n_bound", report.n_bound},
                        {"checked", report.checked},
                        {"violations", report.violations},
                        {"divisibility_empty", report.divisibility_empty}};
}

std::string json_digest(const ordered_json& j) {
    std::string dump = j.dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace mexpart
