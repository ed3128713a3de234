#pragma once

#include <memory>
#include <string>
#include <vector>

#include "idec/generate.hpp"
#include "idec/sequence.hpp"

namespace idec::test {

// Sequence over the canonical DNA alphabet.
inline EncodedSequence dna(const std::string& s) {
    EncodeOptions opt;
    opt.policy = AlphabetPolicy::dna;
    return encode_text(s, opt);
}

// Sequence over a custom alphabet built from the distinct characters of
// `symbols` (code-point order).
inline EncodedSequence over(const std::string& symbols, const std::string& s) {
    EncodeOptions opt;
    opt.policy = AlphabetPolicy::custom;
    opt.alphabet = std::make_shared<const Alphabet>(Alphabet::from_string(symbols));
    return encode_text(s, opt);
}

// (pattern)^repeats over the pattern's own distinct symbols.
inline EncodedSequence repeat(const std::string& pattern, std::size_t repeats,
                              const std::string& symbols) {
    return generate_periodic(over(symbols, pattern), repeats);
}

inline std::shared_ptr<const Alphabet> dna_alphabet() {
    return std::make_shared<const Alphabet>(Alphabet::dna());
}

}  // namespace idec::test
