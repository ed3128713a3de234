#include "idec/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "idec/rng.hpp"

namespace idec {

EncodedSequence generate_periodic(const EncodedSequence& pattern, std::size_t repeats,
                                  std::size_t tail) {
    const std::size_t n = pattern.length();
    if (n == 0) throw std::invalid_argument("empty pattern");
    if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
    if (tail >= n) throw std::invalid_argument("tail must be shorter than the pattern");

    std::vector<SymbolIndex> data;
    data.reserve(repeats * n + tail);
    for (std::size_t r = 0; r < repeats; ++r) {
        data.insert(data.end(), pattern.data().begin(), pattern.data().end());
    }
    data.insert(data.end(), pattern.data().begin(), pattern.data().begin() + tail);
    return EncodedSequence(std::move(data), pattern.alphabet_ptr());
}

EncodedSequence generate_random(const std::vector<double>& freqs, std::size_t length,
                                std::uint64_t seed,
                                std::shared_ptr<const Alphabet> alphabet) {
    if (!alphabet) throw std::invalid_argument("generate_random requires an alphabet");
    if (freqs.size() != alphabet->size()) {
        throw std::invalid_argument("frequency vector does not match alphabet size");
    }
    if (length < 1) throw std::invalid_argument("length must be >= 1");
    const double total = std::accumulate(freqs.begin(), freqs.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("frequencies must sum to 1");
    }
    std::vector<double> cumulative(freqs.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < freqs.size(); ++j) {
        if (freqs[j] < 0.0) throw std::invalid_argument("negative frequency");
        acc += freqs[j];
        cumulative[j] = acc;
    }
    cumulative.back() = 1.0;

    Rng rng(seed);
    std::vector<SymbolIndex> data(length);
    for (std::size_t p = 0; p < length; ++p) {
        const double u = rng.unit();
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        data[p] = static_cast<SymbolIndex>(it - cumulative.begin());
    }
    return EncodedSequence(std::move(data), std::move(alphabet));
}

EncodedSequence mutate(const EncodedSequence& seq, const MutationSpec& spec) {
    if (spec.fraction < 0.0 || spec.fraction > 1.0) {
        throw std::invalid_argument("mutation fraction must be in [0, 1]");
    }
    const std::size_t length = seq.length();
    const std::size_t k = seq.alphabet_size();
    const auto changes =
        static_cast<std::size_t>(std::llround(spec.fraction * static_cast<double>(length)));

    std::vector<SymbolIndex> data = seq.data();
    if (changes == 0) return EncodedSequence(std::move(data), seq.alphabet_ptr());

    Rng rng(spec.seed);
    // Partial Fisher-Yates: the first `changes` slots end up holding a
    // uniform sample of positions without replacement.
    std::vector<std::uint32_t> positions(length);
    std::iota(positions.begin(), positions.end(), 0);
    for (std::size_t i = 0; i < changes; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(length - i));
        std::swap(positions[i], positions[j]);
    }
    for (std::size_t i = 0; i < changes; ++i) {
        const std::uint32_t p = positions[i];
        // Uniform over the k-1 symbols that differ from the current one.
        auto r = static_cast<SymbolIndex>(rng.below(k - 1));
        data[p] = (r < data[p]) ? r : static_cast<SymbolIndex>(r + 1);
    }
    return EncodedSequence(std::move(data), seq.alphabet_ptr());
}

std::size_t hamming_distance(const EncodedSequence& a, const EncodedSequence& b) {
    if (a.length() != b.length()) {
        throw std::invalid_argument("hamming distance needs equal lengths");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (a[i] != b[i]) ++d;
    }
    return d;
}

}  // namespace idec
