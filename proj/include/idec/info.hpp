#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "idec/contingency.hpp"

namespace idec {

// v * ln(v) with the convention 0 * ln 0 = 0.
inline double xlnx(std::uint64_t v) {
    return v == 0 ? 0.0 : static_cast<double>(v) * std::log(static_cast<double>(v));
}

// Precomputed v*ln(v) for integer counts up to a maximum; the Monte-Carlo
// loops evaluate it millions of times. Entries match xlnx() bit-for-bit.
class XlnxTable {
public:
    explicit XlnxTable(std::size_t max_value) : values_(max_value + 1) {
        values_[0] = 0.0;
        for (std::size_t v = 1; v < values_.size(); ++v) values_[v] = xlnx(v);
    }
    double operator[](std::uint64_t v) const { return values_[v]; }
    std::size_t max_value() const { return values_.size() - 1; }

private:
    std::vector<double> values_;
};

// Degrees of freedom of the n x k table, (n-1)(k-1). Also the linear
// correction subtracted from I to form J.
inline std::size_t chi2_reference(std::size_t n, std::size_t k) {
    return (n - 1) * (k - 1);
}

// Total mutual information of the table in nats:
//   I = sum m ln m - sum x ln x - sum y ln y + L ln L.
// Non-negative by construction; rounding error below 1e-9*L is clamped to 0,
// anything more negative indicates a broken table and throws.
double mutual_information(const ContingencyMatrix& m);
double mutual_information(const ContingencyMatrix& m, const XlnxTable& table);

// One spectral entry: the information statistics of a single period length.
struct InfoStat {
    double info_nats = 0.0;   // I
    double j_stat = 0.0;      // J = I - (n-1)(k-1)
    std::size_t df = 0;       // (n-1)(k-1)
    double mc_mean = 0.0;     // mean of background J over Monte-Carlo trials
    double mc_sd = 0.0;       // sample standard deviation (divisor trials-1)
    double z = 0.0;           // (J - mc_mean) / mc_sd; NaN when degenerate
    bool degenerate = false;  // background sd was exactly 0, Z undefined
};

}  // namespace idec
