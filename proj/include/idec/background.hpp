#pragma once

#include <cstdint>

#include "idec/rng.hpp"
#include "idec/sequence.hpp"

namespace idec {

// Randomization ensemble used to normalize J into a Z-score. Backgrounds are
// permutations of the analyzed sequence, so the symbol counts y(j) are
// preserved exactly, and the phase counts x(i) of any tested period are
// preserved trivially (positions never move between phases).
//
// preserve_phase(d) permutes symbols only within each residue class of the
// position index mod d, keeping the per-phase symbol composition intact.
// That absorbs any divisor-d periodicity into the background (the DNA
// triplet case is d = 3). shuffle_all is the d = 1 special case.
struct BackgroundModel {
    enum class Kind { shuffle_all, preserve_phase };

    Kind kind = Kind::shuffle_all;
    std::size_t phase = 1;       // d; meaningful for preserve_phase
    std::size_t trials = 100;
    std::uint64_t seed = 0;

    static BackgroundModel shuffled(std::size_t trials = 100, std::uint64_t seed = 0) {
        return {Kind::shuffle_all, 1, trials, seed};
    }
    static BackgroundModel phase_preserving(std::size_t d, std::size_t trials = 100,
                                            std::uint64_t seed = 0) {
        return {Kind::preserve_phase, d, trials, seed};
    }

    std::size_t effective_phase() const { return kind == Kind::shuffle_all ? 1 : phase; }
    void validate() const;
};

// One background sample. The RNG stream is derived from (model.seed,
// trial_index) alone, so samples are reproducible independent of evaluation
// order. z_score() consumes the same machinery with a per-period derived
// seed; see zscore.hpp.
EncodedSequence sample_background(const EncodedSequence& seq, const BackgroundModel& model,
                                  std::size_t trial_index);

namespace detail {

// Fisher-Yates within each residue class mod d (d = 1 is a full shuffle).
void permute_within_phases(std::vector<SymbolIndex>& data, std::size_t d, Rng& rng);

}  // namespace detail

}  // namespace idec
