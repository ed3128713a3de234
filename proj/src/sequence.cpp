#include "idec/sequence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace idec {

EncodedSequence::EncodedSequence(std::vector<SymbolIndex> data,
                                 std::shared_ptr<const Alphabet> alphabet)
    : data_(std::move(data)), alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw std::invalid_argument("sequence without alphabet");
    const std::size_t k = alphabet_->size();
    for (SymbolIndex s : data_) {
        if (s >= k) throw std::invalid_argument("symbol index out of alphabet range");
    }
}

EncodedSequence EncodedSequence::subsequence(std::size_t start, std::size_t end) const {
    if (start > end || end > data_.size()) {
        throw std::invalid_argument("subsequence range out of bounds");
    }
    return EncodedSequence(
        std::vector<SymbolIndex>(data_.begin() + start, data_.begin() + end), alphabet_);
}

std::string EncodedSequence::decode() const {
    std::string out;
    out.reserve(data_.size());
    for (SymbolIndex s : data_) out += alphabet_->symbol(s);
    return out;
}

namespace {

// Minimal UTF-8 decoding. Malformed bytes are reported as U+FFFD, which the
// text policy later folds into the word space.
std::vector<char32_t> decode_utf8(std::string_view raw) {
    std::vector<char32_t> out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        unsigned char b = raw[i];
        char32_t cp = 0xFFFD;
        std::size_t len = 1;
        if (b < 0x80) {
            cp = b;
        } else if ((b & 0xE0) == 0xC0 && i + 1 < raw.size()) {
            cp = ((b & 0x1F) << 6) | (raw[i + 1] & 0x3F);
            len = 2;
        } else if ((b & 0xF0) == 0xE0 && i + 2 < raw.size()) {
            cp = ((b & 0x0F) << 12) | ((raw[i + 1] & 0x3F) << 6) | (raw[i + 2] & 0x3F);
            len = 3;
        } else if ((b & 0xF8) == 0xF0 && i + 3 < raw.size()) {
            cp = ((b & 0x07) << 18) | ((raw[i + 1] & 0x3F) << 12) |
                 ((raw[i + 2] & 0x3F) << 6) | (raw[i + 3] & 0x3F);
            len = 4;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
}

char32_t fold_case(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    // Latin-1 uppercase letters, excluding the multiplication sign.
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    // Cyrillic А..Я and the Ё row.
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    return cp;
}

bool is_word_char(char32_t cp) {
    if (cp >= U'0' && cp <= U'9') return true;
    if (cp >= U'a' && cp <= U'z') return true;
    // Latin-1 and Latin Extended-A letters (after folding).
    if (cp >= 0xC0 && cp <= 0x17F && cp != 0xD7 && cp != 0xF7) return true;
    // Cyrillic block.
    if (cp >= 0x400 && cp <= 0x4FF) return true;
    return false;
}

}  // namespace

std::string normalize_text(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char32_t cp : decode_utf8(raw)) {
        cp = fold_case(cp);
        if (is_word_char(cp)) {
            out += encode_utf8(cp);
        } else {
            out += ' ';
        }
    }
    return out;
}

namespace {

EncodedSequence encode_over_alphabet(const std::vector<std::string>& points,
                                     std::shared_ptr<const Alphabet> alphabet,
                                     bool skip_unknown) {
    std::vector<SymbolIndex> data;
    data.reserve(points.size());
    for (const std::string& p : points) {
        auto idx = alphabet->index_of(p);
        if (idx) {
            data.push_back(*idx);
        } else if (!skip_unknown) {
            throw std::runtime_error("symbol '" + p + "' not in alphabet '" +
                                     alphabet->name() + "'");
        }
    }
    if (data.empty()) {
        throw std::runtime_error("empty sequence after normalization");
    }
    return EncodedSequence(std::move(data), std::move(alphabet));
}

std::vector<std::string> split_code_points(std::string_view text) {
    std::vector<std::string> points;
    points.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        std::size_t len = 1;
        while (i + len < text.size() &&
               (static_cast<unsigned char>(text[i + len]) & 0xC0) == 0x80) {
            ++len;
        }
        points.emplace_back(text.substr(i, len));
        i += len;
    }
    return points;
}

}  // namespace

EncodedSequence encode_text(std::string_view raw, const EncodeOptions& options) {
    switch (options.policy) {
        case AlphabetPolicy::dna:
        case AlphabetPolicy::protein: {
            auto alphabet = options.alphabet
                                ? options.alphabet
                                : std::make_shared<const Alphabet>(
                                      options.policy == AlphabetPolicy::dna
                                          ? Alphabet::dna()
                                          : Alphabet::protein());
            std::vector<std::string> points;
            points.reserve(raw.size());
            for (char c : raw) {
                // Whitespace is never a residue; drop it regardless of skip_unknown.
                if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
                char lower = (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 0x20) : c;
                points.emplace_back(1, lower);
            }
            return encode_over_alphabet(points, std::move(alphabet), options.skip_unknown);
        }
        case AlphabetPolicy::text: {
            std::string normalized = normalize_text(raw);
            std::vector<std::string> points = split_code_points(normalized);
            std::shared_ptr<const Alphabet> alphabet = options.alphabet;
            if (!alphabet) {
                std::map<std::string, int> seen;  // ordered -> deterministic alphabet
                for (const auto& p : points) seen.emplace(p, 0);
                std::vector<std::string> symbols;
                symbols.reserve(seen.size());
                for (const auto& [sym, _] : seen) symbols.push_back(sym);
                if (symbols.size() < 2) {
                    throw std::runtime_error("text reduces to fewer than 2 distinct symbols");
                }
                alphabet = std::make_shared<const Alphabet>(std::move(symbols), "text");
            }
            return encode_over_alphabet(points, std::move(alphabet), options.skip_unknown);
        }
        case AlphabetPolicy::custom: {
            if (!options.alphabet) {
                throw std::invalid_argument("custom policy requires an alphabet");
            }
            // Whitespace is layout, not data, unless the alphabet claims it.
            std::vector<std::string> points = split_code_points(raw);
            std::erase_if(points, [&](const std::string& p) {
                return (p == " " || p == "\t" || p == "\n" || p == "\r") &&
                       !options.alphabet->index_of(p);
            });
            return encode_over_alphabet(points, options.alphabet, options.skip_unknown);
        }
    }
    throw std::invalid_argument("unknown alphabet policy");
}

}  // namespace idec
