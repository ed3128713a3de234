#include "idec/alphabet.hpp"

#include <stdexcept>

namespace idec {

Alphabet::Alphabet(std::vector<std::string> symbols, std::string name)
    : symbols_(std::move(symbols)), name_(std::move(name)) {
    if (symbols_.size() < 2) {
        throw std::invalid_argument("alphabet needs at least 2 symbols");
    }
    if (symbols_.size() > max_size) {
        throw std::invalid_argument("alphabet exceeds 256 symbols");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].empty()) {
            throw std::invalid_argument("empty alphabet symbol");
        }
        auto [it, inserted] = index_.emplace(symbols_[i], static_cast<SymbolIndex>(i));
        (void)it;
        if (!inserted) {
            throw std::invalid_argument("duplicate alphabet symbol: " + symbols_[i]);
        }
    }
}

const Alphabet& Alphabet::dna() {
    static const Alphabet a = from_string("acgt", "dna");
    return a;
}

const Alphabet& Alphabet::protein() {
    static const Alphabet a = from_string("acdefghiklmnpqrstvwy", "protein");
    return a;
}

Alphabet Alphabet::from_string(std::string_view symbols, std::string name) {
    std::vector<std::string> out;
    // Split into UTF-8 code points: a byte with the top two bits == 10 is a
    // continuation of the previous code point.
    for (std::size_t i = 0; i < symbols.size();) {
        std::size_t len = 1;
        while (i + len < symbols.size() &&
               (static_cast<unsigned char>(symbols[i + len]) & 0xC0) == 0x80) {
            ++len;
        }
        out.emplace_back(symbols.substr(i, len));
        i += len;
    }
    return Alphabet(std::move(out), std::move(name));
}

std::optional<SymbolIndex> Alphabet::index_of(std::string_view symbol) const {
    auto it = index_.find(std::string(symbol));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace idec
