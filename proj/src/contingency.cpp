#include "idec/contingency.hpp"

#include <stdexcept>

namespace idec {

namespace detail {

ContingencyMatrix count_contingency(const EncodedSequence& seq, std::size_t n) {
    if (n < 1) throw std::invalid_argument("period must be >= 1");
    ContingencyMatrix m;
    m.n = n;
    m.k = seq.alphabet_size();
    m.total = seq.length();
    m.counts.assign(n * m.k, 0);
    m.row_sums.assign(n, 0);
    m.col_sums.assign(m.k, 0);

    const auto& data = seq.data();
    std::size_t phase = 0;
    for (std::size_t p = 0; p < data.size(); ++p) {
        ++m.counts[phase * m.k + data[p]];
        if (++phase == n) phase = 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t x = 0;
        for (std::size_t j = 0; j < m.k; ++j) x += m.counts[i * m.k + j];
        m.row_sums[i] = x;
    }
    for (std::size_t j = 0; j < m.k; ++j) {
        std::uint32_t y = 0;
        for (std::size_t i = 0; i < n; ++i) y += m.counts[i * m.k + j];
        m.col_sums[j] = y;
    }
    return m;
}

}  // namespace detail

ContingencyMatrix build_contingency(const EncodedSequence& seq, std::size_t n) {
    if (n < 2 || 2 * n > seq.length()) {
        throw std::invalid_argument("period must satisfy 2 <= n <= L/2");
    }
    return detail::count_contingency(seq, n);
}

}  // namespace idec
