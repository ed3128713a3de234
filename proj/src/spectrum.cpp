#include "idec/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "idec/parallel.hpp"

namespace idec {

std::size_t IdSpectrum::global_max_index() const {
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].stat.degenerate) continue;
        if (best == static_cast<std::size_t>(-1) ||
            entries[i].stat.z > entries[best].stat.z) {
            best = i;
        }
    }
    return best;
}

BackgroundModel model_for_period(const BackgroundModel& base, std::size_t n,
                                 bool triplet_aware) {
    // A phase-3 background at n == 3 reproduces the observed table exactly
    // (within-class permutation never moves a symbol across phases), which
    // would make every spectrum degenerate there; period 3 itself keeps the
    // base model.
    if (triplet_aware && n % 3 == 0 && n != 3) {
        return BackgroundModel::phase_preserving(3, base.trials, base.seed);
    }
    return base;
}

IdSpectrum spectrum(const EncodedSequence& seq, const PeriodRange& range,
                    const BackgroundModel& model, bool triplet_aware, unsigned threads) {
    model.validate();
    if (range.n_min < 2 || range.n_min > range.n_max) {
        throw std::invalid_argument("empty or invalid period range");
    }
    if (2 * range.n_max > seq.length()) {
        throw std::invalid_argument("n_max must satisfy n_max <= L/2");
    }

    IdSpectrum result;
    result.region_start = 0;
    result.region_end = seq.length();
    result.entries.resize(range.n_max - range.n_min + 1);

    const XlnxTable table(seq.length());
    parallel_for(result.entries.size(), threads, [&](std::size_t idx) {
        const std::size_t n = range.n_min + idx;
        SpectrumEntry& entry = result.entries[idx];
        entry.n = n;
        entry.stat = detail::z_score_with_table(
            seq, n, model_for_period(model, n, triplet_aware), table);
    });

    annotate_harmonics(result);
    return result;
}

void annotate_harmonics(IdSpectrum& spectrum) {
    const std::size_t max_idx = spectrum.global_max_index();
    if (max_idx == static_cast<std::size_t>(-1)) return;
    const std::size_t main_period = spectrum.entries[max_idx].n;
    for (auto& entry : spectrum.entries) {
        entry.harmonic = entry.n != main_period && entry.n % main_period == 0;
    }
}

}  // namespace idec
