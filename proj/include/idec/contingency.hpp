#pragma once

#include <cstdint>
#include <vector>

#include "idec/sequence.hpp"

namespace idec {

// Coincidence counts between the analyzed sequence and the artificial
// periodic sequence 1,2,...,n,1,2,...: cell (i, j) counts positions p with
// p mod n == i carrying symbol j. Row sums x(i) depend only on L and n;
// column sums y(j) are the symbol counts of the sequence.
struct ContingencyMatrix {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t total = 0;                 // L
    std::vector<std::uint32_t> counts;     // n * k, row-major
    std::vector<std::uint32_t> row_sums;   // x(i)
    std::vector<std::uint32_t> col_sums;   // y(j)

    std::uint32_t at(std::size_t i, std::size_t j) const { return counts[i * k + j]; }
};

// Requires 2 <= n <= L/2.
ContingencyMatrix build_contingency(const EncodedSequence& seq, std::size_t n);

namespace detail {

// Counting core without the spectral-range restriction on n (used by the
// period-type extractor, which only needs L >= n).
ContingencyMatrix count_contingency(const EncodedSequence& seq, std::size_t n);

}  // namespace detail

}  // namespace idec
