#pragma once

#include <cstdint>
#include <vector>

#include "idec/sequence.hpp"

namespace idec {

struct MutationSpec {
    double fraction = 0.0;      // in [0, 1]
    std::uint64_t seed = 0;
};

// pattern repeated `repeats` times followed by its first `tail` symbols.
// Length is repeats * n + tail; requires repeats >= 1 and tail < n.
EncodedSequence generate_periodic(const EncodedSequence& pattern, std::size_t repeats,
                                  std::size_t tail = 0);

// i.i.d. draws from per-symbol probabilities (must sum to 1 within 1e-9 and
// match the alphabet size). Deterministic for a given seed.
EncodedSequence generate_random(const std::vector<double>& freqs, std::size_t length,
                                std::uint64_t seed,
                                std::shared_ptr<const Alphabet> alphabet);

// Replaces exactly round(fraction * L) distinct positions, chosen uniformly
// without replacement; each chosen position receives a symbol drawn uniformly
// from the alphabet excluding its current one, so every selected position
// really changes. Deterministic for a given seed.
EncodedSequence mutate(const EncodedSequence& seq, const MutationSpec& spec);

// Hamming distance between equal-length sequences over the same alphabet.
std::size_t hamming_distance(const EncodedSequence& a, const EncodedSequence& b);

}  // namespace idec
