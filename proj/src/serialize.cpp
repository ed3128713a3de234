#include "idec/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace idec {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

namespace {

// JSON numbers rounded to the same 6 significant digits as the TSV output;
// nlohmann prints the shortest round-trip form of the rounded value.
nlohmann::json json_number(double v) {
    if (std::isnan(v)) return nullptr;
    return std::strtod(format_double(v).c_str(), nullptr);
}

nlohmann::json stat_to_json(const InfoStat& stat) {
    return {
        {"I_nats", json_number(stat.info_nats)},
        {"J_nats", json_number(stat.j_stat)},
        {"df", stat.df},
        {"mc_mean", json_number(stat.mc_mean)},
        {"mc_sd", json_number(stat.mc_sd)},
        {"Z", json_number(stat.z)},
    };
}

}  // namespace

std::string spectrum_to_tsv(const IdSpectrum& spectrum) {
    std::ostringstream out;
    out << "n\tI_nats\tJ_nats\tdf\tmc_mean\tmc_sd\tZ\n";
    for (const auto& entry : spectrum.entries) {
        out << entry.n << '\t' << format_double(entry.stat.info_nats) << '\t'
            << format_double(entry.stat.j_stat) << '\t' << entry.stat.df << '\t'
            << format_double(entry.stat.mc_mean) << '\t'
            << format_double(entry.stat.mc_sd) << '\t' << format_double(entry.stat.z)
            << '\n';
    }
    return out.str();
}

nlohmann::json spectrum_to_json(const IdSpectrum& spectrum) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& entry : spectrum.entries) {
        nlohmann::json e = stat_to_json(entry.stat);
        e["n"] = entry.n;
        e["harmonic"] = entry.harmonic;
        entries.push_back(std::move(e));
    }
    return {
        {"sequence_id", spectrum.sequence_id},
        {"region", {spectrum.region_start, spectrum.region_end}},
        {"entries", std::move(entries)},
    };
}

namespace {

// JSON number token at 6 significant digits; null for NaN. nlohmann's dump
// can render a rounded double with a long tail, so hit lines are assembled
// by hand to keep the byte format tight.
std::string json_number_text(double v) {
    if (std::isnan(v)) return "null";
    return format_double(v);
}

}  // namespace

std::string hit_to_jsonl(const ScanHit& hit, const std::string& sequence_id) {
    std::ostringstream out;
    out << "{\"sequence_id\":" << nlohmann::json(sequence_id).dump()
        << ",\"window\":[" << hit.window_start << ',' << hit.window_end << ']'
        << ",\"subseq\":[" << hit.sub_start << ',' << hit.sub_end << ']'
        << ",\"n\":" << hit.n
        << ",\"threshold\":" << json_number_text(hit.threshold_used)
        << ",\"I_nats\":" << json_number_text(hit.stat.info_nats)
        << ",\"J_nats\":" << json_number_text(hit.stat.j_stat)
        << ",\"df\":" << hit.stat.df
        << ",\"mc_mean\":" << json_number_text(hit.stat.mc_mean)
        << ",\"mc_sd\":" << json_number_text(hit.stat.mc_sd)
        << ",\"Z\":" << json_number_text(hit.stat.z) << '}';
    return out.str();
}

nlohmann::json period_type_to_json(const PeriodType& type, const Alphabet& alphabet,
                                   const std::string& sequence_id,
                                   std::size_t region_start, std::size_t region_end) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < type.n; ++i) {
        nlohmann::json t = nlohmann::json::array();
        nlohmann::json counts = nlohmann::json::array();
        for (std::size_t j = 0; j < type.k; ++j) {
            t.push_back(json_number(type.at(i, j)));
            counts.push_back(type.counts.at(i, j));
        }
        rows.push_back({
            {"position", i},
            {"x", type.counts.row_sums[i]},
            {"t", std::move(t)},
            {"counts", std::move(counts)},
        });
    }
    return {
        {"sequence_id", sequence_id},
        {"region", {region_start, region_end}},
        {"n", type.n},
        {"k", type.k},
        {"alphabet", alphabet.symbols()},
        {"rotation", type.rotation},
        {"rows", std::move(rows)},
    };
}

std::string power_spectrum_to_tsv(const PowerSpectrum& spectrum) {
    std::ostringstream out;
    out << "period\tpower_x1000\n";
    for (std::size_t i = 0; i < spectrum.period.size(); ++i) {
        out << format_double(spectrum.period[i]) << '\t'
            << format_double(spectrum.power[i] * 1000.0) << '\n';
    }
    return out.str();
}

}  // namespace idec
