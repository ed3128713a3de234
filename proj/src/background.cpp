#include "idec/background.hpp"

#include <stdexcept>
#include <utility>

namespace idec {

void BackgroundModel::validate() const {
    if (trials < 2) throw std::invalid_argument("background trials must be >= 2");
    if (kind == Kind::preserve_phase && phase < 1) {
        throw std::invalid_argument("preserved phase must be >= 1");
    }
}

namespace detail {

void permute_within_phases(std::vector<SymbolIndex>& data, std::size_t d, Rng& rng) {
    const std::size_t length = data.size();
    if (d <= 1) {
        for (std::size_t i = length; i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(rng.below(i));
            std::swap(data[i - 1], data[j]);
        }
        return;
    }
    for (std::size_t c = 0; c < d && c < length; ++c) {
        // Class c holds positions c, c+d, c+2d, ...
        const std::size_t count = (length - c + d - 1) / d;
        for (std::size_t i = count; i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(rng.below(i));
            std::swap(data[c + (i - 1) * d], data[c + j * d]);
        }
    }
}

}  // namespace detail

EncodedSequence sample_background(const EncodedSequence& seq, const BackgroundModel& model,
                                  std::size_t trial_index) {
    model.validate();
    std::vector<SymbolIndex> data = seq.data();
    Rng rng(mix_seed(model.seed, trial_index));
    detail::permute_within_phases(data, model.effective_phase(), rng);
    return EncodedSequence(std::move(data), seq.alphabet_ptr());
}

}  // namespace idec
