#include "idec/period_type.hpp"

#include <stdexcept>

namespace idec {

namespace {

// Lexicographic comparison of the flattened probability matrix under two row
// rotations, without materializing the rotated copies.
bool rotation_less(const std::vector<double>& probs, std::size_t n, std::size_t k,
                   std::size_t ra, std::size_t rb) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t row_a = ((i + ra) % n) * k;
        const std::size_t row_b = ((i + rb) % n) * k;
        for (std::size_t j = 0; j < k; ++j) {
            if (probs[row_a + j] < probs[row_b + j]) return true;
            if (probs[row_a + j] > probs[row_b + j]) return false;
        }
    }
    return false;
}

}  // namespace

PeriodType period_type(const EncodedSequence& region, std::size_t n) {
    if (n < 1) throw std::invalid_argument("period must be >= 1");
    if (region.length() < n) throw std::invalid_argument("region shorter than period");

    const ContingencyMatrix m = detail::count_contingency(region, n);
    const std::size_t k = m.k;

    std::vector<double> probs(n * k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (m.row_sums[i] == 0) continue;
        const double x = m.row_sums[i];
        for (std::size_t j = 0; j < k; ++j) probs[i * k + j] = m.at(i, j) / x;
    }

    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        if (rotation_less(probs, n, k, r, best)) best = r;
    }

    PeriodType type;
    type.n = n;
    type.k = k;
    type.rotation = best;
    type.probs.resize(n * k);
    type.counts.n = n;
    type.counts.k = k;
    type.counts.total = m.total;
    type.counts.counts.resize(n * k);
    type.counts.row_sums.resize(n);
    type.counts.col_sums = m.col_sums;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = (i + best) % n;
        for (std::size_t j = 0; j < k; ++j) {
            type.probs[i * k + j] = probs[src * k + j];
            type.counts.counts[i * k + j] = m.at(src, j);
        }
        type.counts.row_sums[i] = m.row_sums[src];
    }
    return type;
}

}  // namespace idec
