#pragma once

#include <json.hpp>

#include "mexpart/etaquot.hpp"
#include "mexpart/genfun.hpp"
#include "mexpart/hecke.hpp"
#include "mexpart/qseries.hpp"

namespace mexpart {

using ordered_json = nlohmann::ordered_json;

// {ring, trunc, coeffs}: coefficients that fit in int64 are emitted as JSON
// numbers, anything wider as decimal strings.
ordered_json qseries_to_json(const QSeries& f);
QSeries qseries_from_json(const ordered_json& j);

// {"level": N, "exps": [[delta, r], ...]}
ordered_json eta_quotient_to_json(const EtaQuotient& eq);
EtaQuotient eta_quotient_from_json(const ordered_json& j);

ordered_json character_to_json(const KroneckerCharacter& chi);
ordered_json cusp_report_to_json(const CuspReport& report);
ordered_json modular_meta_to_json(const ModularMeta& meta);
ordered_json lemma_report_to_json(const LemmaReport& report);
ordered_json parity_scan_to_json(const ParityScanReport& report);
ordered_json chain_report_to_json(const ChainReport& report);
ordered_json progression_report_to_json(const ProgressionReport& report);

// FNV-1a 64 over a canonical dump; stable across runs for identical inputs.
std::string json_digest(const ordered_json& j);

}  // namespace mexpart
