#pragma once

#include <string>
#include <vector>

#include "idec/zscore.hpp"

namespace idec {

struct PeriodRange {
    std::size_t n_min = 2;
    std::size_t n_max = 200;
};

struct SpectrumEntry {
    std::size_t n = 0;
    InfoStat stat;
    // n is a proper multiple of the spectrum's global-max period. Flagged,
    // never suppressed.
    bool harmonic = false;
};

// The information decomposition of one sequence (or region): one entry per
// period length, strictly increasing in n.
struct IdSpectrum {
    std::string sequence_id;
    std::size_t region_start = 0;
    std::size_t region_end = 0;
    std::vector<SpectrumEntry> entries;

    // Entry with the largest Z among non-degenerate entries, or npos.
    std::size_t global_max_index() const;
};

// One z_score per period in [range.n_min, range.n_max] (range must fit in
// [2, L/2]). With triplet_aware set, periods divisible by 3 -- except n == 3
// itself, which would degenerate -- are scored against phase-3-preserving
// backgrounds so that triplet composition is absorbed; all other periods use
// the base model. Deterministic for a fixed seed regardless of threads.
IdSpectrum spectrum(const EncodedSequence& seq, const PeriodRange& range,
                    const BackgroundModel& model, bool triplet_aware = false,
                    unsigned threads = 1);

// Background selection rule shared by spectrum() and the scanner.
BackgroundModel model_for_period(const BackgroundModel& base, std::size_t n,
                                 bool triplet_aware);

// Marks entries at proper multiples of the global-max period.
void annotate_harmonics(IdSpectrum& spectrum);

}  // namespace idec
