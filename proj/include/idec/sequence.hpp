#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "idec/alphabet.hpp"

namespace idec {

// A sequence of symbol indices over a shared alphabet. Immutable in spirit:
// every transformation returns a new sequence.
class EncodedSequence {
public:
    EncodedSequence() = default;
    EncodedSequence(std::vector<SymbolIndex> data, std::shared_ptr<const Alphabet> alphabet);

    std::size_t length() const { return data_.size(); }
    const std::vector<SymbolIndex>& data() const { return data_; }
    SymbolIndex operator[](std::size_t i) const { return data_[i]; }
    const Alphabet& alphabet() const { return *alphabet_; }
    std::shared_ptr<const Alphabet> alphabet_ptr() const { return alphabet_; }
    std::size_t alphabet_size() const { return alphabet_->size(); }

    EncodedSequence subsequence(std::size_t start, std::size_t end) const;

    // Maps indices back through the alphabet; inverse of encoding.
    std::string decode() const;

private:
    std::vector<SymbolIndex> data_;
    std::shared_ptr<const Alphabet> alphabet_;
};

enum class AlphabetPolicy { dna, protein, text, custom };

struct EncodeOptions {
    AlphabetPolicy policy = AlphabetPolicy::dna;
    // Required for custom; optional override for text (symbols outside it
    // follow skip_unknown).
    std::shared_ptr<const Alphabet> alphabet;
    // Drop characters outside the alphabet instead of failing.
    bool skip_unknown = false;
};

// Normalizes and encodes raw character data.
//
// dna/protein: case-insensitive over the fixed canonical alphabet; other
// characters (including whitespace) are dropped when skip_unknown is set and
// rejected otherwise.
//
// text: input is decoded as UTF-8, case-folded (ASCII, Latin-1 and Cyrillic
// ranges), and every code point that is not a letter or digit -- punctuation,
// whitespace, anything else -- becomes one word-space symbol. The space is a
// regular member of the alphabet and consecutive spaces are kept. The
// alphabet is built from the distinct observed symbols (sorted by code
// point) unless one is supplied.
//
// custom: requires options.alphabet; input is split into UTF-8 code points
// and mapped through it verbatim.
EncodedSequence encode_text(std::string_view raw, const EncodeOptions& options);

// Normalization step of the text policy, exposed for tests and for callers
// that want to inspect the cleaned character stream.
std::string normalize_text(std::string_view raw);

}  // namespace idec
