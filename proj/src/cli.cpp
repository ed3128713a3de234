#include "idec/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "idec/fasta.hpp"
#include "idec/fourier.hpp"
#include "idec/generate.hpp"
#include "idec/parallel.hpp"
#include "idec/period_type.hpp"
#include "idec/rng.hpp"
#include "idec/serialize.hpp"

namespace idec {

namespace {

// Usage-level problem (exit 1) as opposed to a data problem (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned env_thread_cap() {
    const char* value = std::getenv("ID_THREADS");
    if (!value) return 0;
    const long parsed = std::strtol(value, nullptr, 10);
    return parsed > 0 ? static_cast<unsigned>(parsed) : 0;
}

unsigned resolve_threads(unsigned requested) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned threads = requested == 0 ? hw : requested;
    const unsigned cap = env_thread_cap();
    if (cap > 0) threads = std::min(threads, cap);
    return threads;
}

EncodeOptions encode_options(const RunConfig& cfg) {
    EncodeOptions opt;
    opt.policy = cfg.policy;
    opt.skip_unknown = cfg.skip_unknown;
    if (cfg.policy == AlphabetPolicy::custom) {
        if (cfg.custom_symbols.empty()) {
            throw UsageError("custom alphabet requires symbols, e.g. --alphabet custom=01");
        }
        opt.alphabet = std::make_shared<const Alphabet>(
            Alphabet::from_string(cfg.custom_symbols));
    }
    return opt;
}

void parse_alphabet_flag(const std::string& value, RunConfig& cfg) {
    if (value == "dna") {
        cfg.policy = AlphabetPolicy::dna;
    } else if (value == "protein") {
        cfg.policy = AlphabetPolicy::protein;
    } else if (value == "text") {
        cfg.policy = AlphabetPolicy::text;
    } else if (value.rfind("custom=", 0) == 0) {
        cfg.policy = AlphabetPolicy::custom;
        cfg.custom_symbols = value.substr(7);
    } else {
        throw UsageError("unknown alphabet '" + value +
                         "' (expected dna, protein, text or custom=<symbols>)");
    }
}

std::vector<SequenceRecord> load_records(const std::string& path, const RunConfig& cfg) {
    const EncodeOptions opt = encode_options(cfg);
    if (looks_like_fasta(path)) return read_fasta(path, opt);
    return {read_text_file(path, opt)};
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write output file: " + path);
    return file;
}

PeriodRange clamp_periods(const RunConfig& cfg, std::size_t length,
                          const std::string& id) {
    PeriodRange range = cfg.periods;
    if (range.n_min < 2) throw UsageError("--n-min must be >= 2");
    if (2 * range.n_max > length) {
        range.n_max = length / 2;
        std::cerr << "warning: " << id << ": n_max clamped to L/2 = " << range.n_max
                  << "\n";
    }
    if (range.n_max < range.n_min) {
        throw std::runtime_error(id + ": sequence too short for requested period range");
    }
    return range;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& alphabet_flag) {
    cmd->add_option("--alphabet", alphabet_flag,
                    "dna | protein | text | custom=<symbols>");
    cmd->add_flag("--skip-invalid", cfg.skip_unknown,
                  "drop characters outside the alphabet instead of failing");
    cmd->add_option("--n-min", cfg.periods.n_min, "smallest tested period");
    cmd->add_option("--n-max", cfg.periods.n_max, "largest tested period");
    cmd->add_option("--trials", cfg.trials, "Monte-Carlo trials per period");
    cmd->add_option("--seed", cfg.seed, "master seed (all randomness derives from it)");
    cmd->add_option("--threshold", cfg.threshold,
                    "Z threshold (default 7 DNA, 6 protein, 5 text)");
    cmd->add_flag("--triplet-aware", cfg.triplet_aware,
                  "absorb phase-3 composition for periods divisible by 3");
    cmd->add_option("--format", cfg.format, "tsv | json")
        ->check(CLI::IsMember({"tsv", "json"}));
}

BackgroundModel base_model(const RunConfig& cfg) {
    if (cfg.trials < 2) throw UsageError("--trials must be >= 2");
    return BackgroundModel::shuffled(cfg.trials, cfg.seed);
}

std::string record_label(const SequenceRecord& rec) {
    std::ostringstream label;
    label << rec.source_file << '#' << rec.record_index << ':' << rec.id;
    return label.str();
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const std::string& path, const std::string& out_path, RunConfig cfg) {
    const auto records = load_records(path, cfg);
    if (records.empty()) {
        std::cerr << "warning: " << path << ": no records\n";
        return 0;
    }
    const unsigned threads = resolve_threads(cfg.threads);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);

    nlohmann::json all = nlohmann::json::array();
    for (const auto& rec : records) {
        const PeriodRange range = clamp_periods(cfg, rec.seq.length(), rec.id);
        IdSpectrum spec =
            spectrum(rec.seq, range, base_model(cfg), cfg.triplet_aware, threads);
        spec.sequence_id = record_label(rec);
        if (cfg.format == "json") {
            all.push_back(spectrum_to_json(spec));
        } else {
            out << "# sequence\t" << spec.sequence_id << "\n";
            out << spectrum_to_tsv(spec);
        }
    }
    if (cfg.format == "json") out << all.dump(2) << "\n";
    return 0;
}

// -------------------------------------------------------------------- scan

int cmd_scan(const std::string& path, const std::string& out_path, RunConfig cfg) {
    const auto records = load_records(path, cfg);
    if (records.empty()) {
        std::cerr << "warning: " << path << ": no records\n";
        return 0;
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);

    for (const auto& rec : records) {
        ScanParams params;
        params.window_len = cfg.window_len;
        params.step = cfg.step;
        params.periods = clamp_periods(cfg, rec.seq.length(), rec.id);
        params.threshold = cfg.resolved_threshold();
        params.model = base_model(cfg);
        params.triplet_aware = cfg.triplet_aware;
        params.threads = resolve_threads(cfg.threads);
        const std::string label = record_label(rec);
        for (const ScanHit& hit : scan(rec.seq, params)) {
            out << hit_to_jsonl(hit, label) << "\n";
        }
    }
    return 0;
}

// -------------------------------------------------------------- typematrix

int cmd_typematrix(const std::string& path, const std::string& out_path, RunConfig cfg,
                   std::size_t n, std::size_t start, std::size_t end) {
    const auto records = load_records(path, cfg);
    if (records.empty()) {
        std::cerr << "warning: " << path << ": no records\n";
        return 0;
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);

    nlohmann::json all = nlohmann::json::array();
    for (const auto& rec : records) {
        std::size_t region_end = end == 0 ? rec.seq.length() : end;
        if (region_end > rec.seq.length() || start >= region_end) {
            throw std::runtime_error(rec.id + ": invalid region");
        }
        const EncodedSequence region = rec.seq.subsequence(start, region_end);
        const PeriodType type = period_type(region, n);
        all.push_back(period_type_to_json(type, rec.seq.alphabet(), record_label(rec),
                                          start, region_end));
    }
    out << (all.size() == 1 ? all[0].dump(2) : all.dump(2)) << "\n";
    return 0;
}

// ----------------------------------------------------------------- fourier

int cmd_fourier(const std::string& path, const std::string& out_path, RunConfig cfg) {
    const auto records = load_records(path, cfg);
    if (records.empty()) {
        std::cerr << "warning: " << path << ": no records\n";
        return 0;
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);

    nlohmann::json all = nlohmann::json::array();
    for (const auto& rec : records) {
        const PowerSpectrum spec = fourier_spectrum(rec.seq);
        if (cfg.format == "json") {
            nlohmann::json j;
            j["sequence_id"] = record_label(rec);
            j["length"] = spec.length;
            j["period"] = spec.period;
            nlohmann::json power = nlohmann::json::array();
            for (double p : spec.power) power.push_back(p * 1000.0);
            j["power_x1000"] = std::move(power);
            all.push_back(std::move(j));
        } else {
            out << "# sequence\t" << record_label(rec) << "\n";
            out << power_spectrum_to_tsv(spec);
        }
    }
    if (cfg.format == "json") out << all.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------- simulate

// The mutation convention of the original robustness experiments: the chosen
// positions are overwritten with a symbol drawn uniformly from the full
// alphabet, so a replacement may reproduce the original symbol and the
// realized change fraction is q*(k-1)/k. (core::mutate forces a different
// symbol; see README for when to use which.)
EncodedSequence random_replacements(const EncodedSequence& seq, double q,
                                    std::uint64_t seed) {
    if (q < 0.0 || q > 1.0) throw UsageError("--mutation must be in [0, 1]");
    const std::size_t length = seq.length();
    const auto replaced =
        static_cast<std::size_t>(std::llround(q * static_cast<double>(length)));
    std::vector<SymbolIndex> data = seq.data();
    if (replaced == 0) return EncodedSequence(std::move(data), seq.alphabet_ptr());

    Rng rng(seed);
    std::vector<std::uint32_t> positions(length);
    for (std::size_t i = 0; i < length; ++i) positions[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < replaced; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(length - i));
        std::swap(positions[i], positions[j]);
    }
    const std::size_t k = seq.alphabet_size();
    for (std::size_t i = 0; i < replaced; ++i) {
        data[positions[i]] = static_cast<SymbolIndex>(rng.below(k));
    }
    return EncodedSequence(std::move(data), seq.alphabet_ptr());
}

int cmd_simulate(const std::string& out_path, RunConfig cfg, const std::string& pattern,
                 std::size_t repeats, std::size_t tail, double mutation,
                 std::size_t replicates) {
    if (pattern.empty()) throw UsageError("--pattern must be non-empty");
    if (replicates < 1) throw UsageError("--replicates must be >= 1");

    // Alphabet = distinct symbols of the pattern, in code-point order.
    std::set<char> distinct(pattern.begin(), pattern.end());
    std::string symbols(distinct.begin(), distinct.end());
    auto alphabet = std::make_shared<const Alphabet>(Alphabet::from_string(symbols));
    EncodeOptions opt;
    opt.policy = AlphabetPolicy::custom;
    opt.alphabet = alphabet;
    const EncodedSequence base =
        generate_periodic(encode_text(pattern, opt), repeats, tail);

    const PeriodRange range = clamp_periods(cfg, base.length(), "pattern");
    const unsigned threads = resolve_threads(cfg.threads);

    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "replicate\tn\tI_nats\tJ_nats\tdf\tmc_mean\tmc_sd\tZ\n";

    const std::size_t n_count = range.n_max - range.n_min + 1;
    std::vector<double> z_sum(n_count, 0.0), i_sum(n_count, 0.0), j_sum(n_count, 0.0);
    std::vector<std::size_t> z_count(n_count, 0);
    std::vector<std::size_t> df(n_count, 0);

    for (std::size_t r = 0; r < replicates; ++r) {
        const EncodedSequence replicate =
            mutation > 0.0 ? random_replacements(base, mutation, mix_seed(cfg.seed, 2 * r))
                           : base;
        BackgroundModel model =
            BackgroundModel::shuffled(cfg.trials, mix_seed(cfg.seed, 2 * r + 1));
        const IdSpectrum spec = spectrum(replicate, range, model, cfg.triplet_aware, threads);
        for (std::size_t idx = 0; idx < spec.entries.size(); ++idx) {
            const SpectrumEntry& e = spec.entries[idx];
            out << r << '\t' << e.n << '\t' << format_double(e.stat.info_nats) << '\t'
                << format_double(e.stat.j_stat) << '\t' << e.stat.df << '\t'
                << format_double(e.stat.mc_mean) << '\t' << format_double(e.stat.mc_sd)
                << '\t' << format_double(e.stat.z) << '\n';
            df[idx] = e.stat.df;
            i_sum[idx] += e.stat.info_nats;
            j_sum[idx] += e.stat.j_stat;
            if (!e.stat.degenerate) {
                z_sum[idx] += e.stat.z;
                ++z_count[idx];
            }
        }
    }

    const auto reps = static_cast<double>(replicates);
    for (std::size_t idx = 0; idx < n_count; ++idx) {
        const double mean_z = z_count[idx] > 0
                                  ? z_sum[idx] / static_cast<double>(z_count[idx])
                                  : std::numeric_limits<double>::quiet_NaN();
        out << "mean\t" << (range.n_min + idx) << '\t' << format_double(i_sum[idx] / reps)
            << '\t' << format_double(j_sum[idx] / reps) << '\t' << df[idx] << '\t'
            << "-\t-\t" << format_double(mean_z) << '\n';
    }
    return 0;
}

// --------------------------------------------------------------- calibrate

int cmd_calibrate(const std::string& out_path, RunConfig cfg, std::size_t k,
                  std::vector<double> freqs, std::size_t length, std::size_t windows) {
    if (k < 2 || k > 26) throw UsageError("--k must be in [2, 26]");
    if (length < 8) throw UsageError("--length too small");
    if (windows < 1) throw UsageError("--windows must be >= 1");
    if (freqs.empty()) freqs.assign(k, 1.0 / static_cast<double>(k));
    if (freqs.size() != k) throw UsageError("--freqs must list exactly k values");

    std::string symbols;
    for (std::size_t j = 0; j < k; ++j) symbols += static_cast<char>('a' + j);
    auto alphabet = std::make_shared<const Alphabet>(Alphabet::from_string(symbols));

    const PeriodRange range = clamp_periods(cfg, length, "calibration window");
    const double threshold = cfg.resolved_threshold();
    const unsigned threads = resolve_threads(cfg.threads);

    struct WindowResult {
        double max_z = 0.0;
        std::size_t n_at_max = 0;
    };
    std::vector<WindowResult> results(windows);

    parallel_for(windows, threads, [&](std::size_t w) {
        const EncodedSequence seq =
            generate_random(freqs, length, mix_seed(cfg.seed, 2 * w), alphabet);
        const BackgroundModel model =
            BackgroundModel::shuffled(cfg.trials, mix_seed(cfg.seed, 2 * w + 1));
        const IdSpectrum spec = spectrum(seq, range, model, cfg.triplet_aware, 1);
        const std::size_t best = spec.global_max_index();
        if (best != static_cast<std::size_t>(-1)) {
            results[w].max_z = spec.entries[best].stat.z;
            results[w].n_at_max = spec.entries[best].n;
        }
    });

    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "window\tmax_z\tn_at_max\n";
    double overall_max = 0.0;
    std::size_t exceeding = 0;
    for (std::size_t w = 0; w < windows; ++w) {
        out << w << '\t' << format_double(results[w].max_z) << '\t'
            << results[w].n_at_max << '\n';
        overall_max = std::max(overall_max, results[w].max_z);
        if (results[w].max_z > threshold) ++exceeding;
    }
    const double fraction = static_cast<double>(exceeding) / static_cast<double>(windows);
    // Smallest one-decimal threshold no calibration window exceeds.
    const double suggested = std::ceil(overall_max * 10.0) / 10.0;
    out << "# windows\t" << windows << '\n';
    out << "# threshold\t" << format_double(threshold) << '\n';
    out << "# exceeding\t" << exceeding << '\n';
    out << "# fraction_above_threshold\t" << format_double(fraction) << '\n';
    out << "# suggested_threshold\t" << format_double(suggested) << '\n';
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"idec -- latent periodicity detection by information decomposition"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string alphabet_flag;
    std::string input_path;
    std::string out_path;

    auto* sp = app.add_subcommand("spectrum", "information decomposition of a sequence");
    sp->add_option("file", input_path, "FASTA or plain text input")->required();
    sp->add_option("--output", out_path, "output file (default stdout)");
    add_common_options(sp, cfg, alphabet_flag);

    auto* sc = app.add_subcommand("scan", "windowed scan emitting hits as JSON lines");
    sc->add_option("file", input_path, "FASTA or plain text input")->required();
    sc->add_option("--output", out_path, "output file (default stdout)");
    sc->add_option("--window", cfg.window_len, "window length (default 2000)");
    sc->add_option("--step", cfg.step, "window step (default 1000)");
    add_common_options(sc, cfg, alphabet_flag);

    std::size_t tm_n = 0, tm_start = 0, tm_end = 0;
    auto* tm = app.add_subcommand("typematrix", "period type matrix T of a region");
    tm->add_option("file", input_path, "FASTA or plain text input")->required();
    tm->add_option("--output", out_path, "output file (default stdout)");
    tm->add_option("--n", tm_n, "period length")->required();
    tm->add_option("--start", tm_start, "region start (0-based, default 0)");
    tm->add_option("--end", tm_end, "region end (half-open, default sequence end)");
    add_common_options(tm, cfg, alphabet_flag);

    auto* fo = app.add_subcommand("fourier", "indicator-sequence power spectrum");
    fo->add_option("file", input_path, "FASTA or plain text input")->required();
    fo->add_option("--output", out_path, "output file (default stdout)");
    add_common_options(fo, cfg, alphabet_flag);

    std::string pattern;
    std::size_t repeats = 100, sim_tail = 0, replicates = 1;
    double mutation = 0.0;
    auto* si = app.add_subcommand("simulate",
                                  "spectra of a synthetic periodic sequence under mutation");
    si->add_option("--pattern", pattern, "period pattern, e.g. ATAAACT")->required();
    si->add_option("--repeats", repeats, "number of pattern repeats (default 100)");
    si->add_option("--tail", sim_tail, "extra leading symbols of the pattern");
    si->add_option("--mutation", mutation, "fraction of positions randomly replaced");
    si->add_option("--replicates", replicates, "independent mutation replicates");
    si->add_option("--output", out_path, "output file (default stdout)");
    add_common_options(si, cfg, alphabet_flag);

    std::size_t cal_k = 4, cal_length = 2000, cal_windows = 100;
    std::vector<double> cal_freqs;
    auto* ca = app.add_subcommand("calibrate",
                                  "null max-Z distribution over random windows");
    ca->add_option("--k", cal_k, "alphabet size (default 4)");
    ca->add_option("--freqs", cal_freqs, "per-symbol probabilities (default uniform)")
        ->delimiter(',');
    ca->add_option("--length", cal_length, "window length (default 2000)");
    ca->add_option("--windows", cal_windows, "number of windows (default 100)");
    ca->add_option("--output", out_path, "output file (default stdout)");
    add_common_options(ca, cfg, alphabet_flag);

    // simulate/calibrate sweep short synthetic sequences; a 2..200 default
    // would immediately clamp, so narrow it unless overridden.
    si->callback([&]() {
        if (si->count("--n-max") == 0) cfg.periods.n_max = 28;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!alphabet_flag.empty()) parse_alphabet_flag(alphabet_flag, cfg);
        if (sp->parsed()) return cmd_spectrum(input_path, out_path, cfg);
        if (sc->parsed()) return cmd_scan(input_path, out_path, cfg);
        if (tm->parsed()) return cmd_typematrix(input_path, out_path, cfg, tm_n, tm_start, tm_end);
        if (fo->parsed()) return cmd_fourier(input_path, out_path, cfg);
        if (si->parsed())
            return cmd_simulate(out_path, cfg, pattern, repeats, sim_tail, mutation,
                                replicates);
        if (ca->parsed())
            return cmd_calibrate(out_path, cfg, cal_k, cal_freqs, cal_length, cal_windows);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace idec
