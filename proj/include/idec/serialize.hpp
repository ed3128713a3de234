#pragma once

#include <string>

#include "json.hpp"

#include "idec/fourier.hpp"
#include "idec/period_type.hpp"
#include "idec/scan.hpp"
#include "idec/spectrum.hpp"

namespace idec {

// All float output is rounded to 6 significant digits ("%.6g"), which keeps
// byte output deterministic for identical inputs. A degenerate Z serializes
// as "nan" in TSV and null in JSON.
std::string format_double(double v);

// TSV with exactly the columns n, I_nats, J_nats, df, mc_mean, mc_sd, Z
// (header included, one row per period).
std::string spectrum_to_tsv(const IdSpectrum& spectrum);

// Same fields per entry, plus the harmonic flag and region metadata.
nlohmann::json spectrum_to_json(const IdSpectrum& spectrum);

// One JSON object per hit, on one line (JSON-lines for streaming scans).
std::string hit_to_jsonl(const ScanHit& hit, const std::string& sequence_id);

nlohmann::json period_type_to_json(const PeriodType& type, const Alphabet& alphabet,
                                   const std::string& sequence_id,
                                   std::size_t region_start, std::size_t region_end);

// TSV columns: period, power_x1000 (Fourier power scaled by 1000 in
// comparison outputs).
std::string power_spectrum_to_tsv(const PowerSpectrum& spectrum);

}  // namespace idec
