#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace idec {

using SymbolIndex = std::uint8_t;

// An ordered set of distinct symbols. Each symbol is the UTF-8 encoding of a
// single code point (one byte for DNA/protein, possibly more for text
// alphabets). Symbol i of the sequence encoding is the i-th entry here.
class Alphabet {
public:
    static constexpr std::size_t max_size = 256;

    Alphabet() = default;
    Alphabet(std::vector<std::string> symbols, std::string name);

    // Canonical order a,c,g,t.
    static const Alphabet& dna();
    // The 20 standard amino acids in alphabetical order.
    static const Alphabet& protein();
    // Symbols given as a string of code points, e.g. "01" or "acgt".
    static Alphabet from_string(std::string_view symbols, std::string name = "custom");

    std::size_t size() const { return symbols_.size(); }
    const std::string& name() const { return name_; }
    const std::string& symbol(SymbolIndex i) const { return symbols_[i]; }
    const std::vector<std::string>& symbols() const { return symbols_; }

    std::optional<SymbolIndex> index_of(std::string_view symbol) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, SymbolIndex> index_;
    std::string name_;
};

}  // namespace idec
