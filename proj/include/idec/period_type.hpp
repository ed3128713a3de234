#pragma once

#include <vector>

#include "idec/contingency.hpp"

namespace idec {

// The probability matrix t(i, j) = m(i, j) / x(i) describing which symbols a
// period position admits, in canonical cyclic rotation: rows are rotated so
// that the flattened probability vector is lexicographically minimal, making
// regions that are cyclic shifts of each other compare equal.
struct PeriodType {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<double> probs;  // n * k row-major, rows sum to 1 where defined
    ContingencyMatrix counts;   // source counts, rows rotated the same way
    std::size_t rotation = 0;   // left rotation applied to reach canonical form

    double at(std::size_t i, std::size_t j) const { return probs[i * k + j]; }
    // False only for phases that received no positions (possible only when
    // the region is shorter than n, which the constructor rejects).
    bool row_defined(std::size_t i) const { return counts.row_sums[i] > 0; }
};

// Requires region length >= n >= 1.
PeriodType period_type(const EncodedSequence& region, std::size_t n);

}  // namespace idec
