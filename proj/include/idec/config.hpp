#pragma once

#include <cstdint>
#include <string>

#include "idec/scan.hpp"
#include "idec/sequence.hpp"

namespace idec {

// Z thresholds calibrated against random text: 7.0 holds up to genome-scale
// DNA, 6.0 suits protein-length inputs, 5.0 short texts.
inline double default_threshold(AlphabetPolicy policy) {
    switch (policy) {
        case AlphabetPolicy::protein: return 6.0;
        case AlphabetPolicy::text: return 5.0;
        case AlphabetPolicy::dna:
        case AlphabetPolicy::custom: break;
    }
    return 7.0;
}

struct RunConfig {
    AlphabetPolicy policy = AlphabetPolicy::dna;
    std::string custom_symbols;          // for --alphabet custom=<symbols>
    bool skip_unknown = false;
    PeriodRange periods{2, 200};
    std::size_t window_len = 2000;
    std::size_t step = 1000;
    std::size_t trials = 100;
    std::uint64_t seed = 0;              // fixed default; reproducibility is a feature
    double threshold = 0.0;              // 0 = resolve from policy
    bool triplet_aware = false;
    std::string format = "tsv";          // tsv | json
    unsigned threads = 0;                // 0 = hardware, capped by ID_THREADS

    double resolved_threshold() const {
        return threshold > 0.0 ? threshold : default_threshold(policy);
    }
};

// Entry point behind the idec binary; exposed so tests can drive the full
// surface in-process. Returns 0 on success, 1 on usage errors, 2 on data
// errors.
int run_cli(int argc, const char* const* argv);

}  // namespace idec
