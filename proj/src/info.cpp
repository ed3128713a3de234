#include "idec/info.hpp"

#include <stdexcept>

namespace idec {

namespace {

double clamp_info(double info, std::size_t total) {
    if (info >= 0.0) return info;
    if (-info < 1e-9 * static_cast<double>(total)) return 0.0;
    throw std::logic_error("mutual information negative beyond rounding tolerance");
}

}  // namespace

double mutual_information(const ContingencyMatrix& m) {
    double cells = 0.0;
    for (std::uint32_t c : m.counts) cells += xlnx(c);
    double rows = 0.0;
    for (std::uint32_t x : m.row_sums) rows += xlnx(x);
    double cols = 0.0;
    for (std::uint32_t y : m.col_sums) cols += xlnx(y);
    return clamp_info(cells - rows - cols + xlnx(m.total), m.total);
}

double mutual_information(const ContingencyMatrix& m, const XlnxTable& table) {
    double cells = 0.0;
    for (std::uint32_t c : m.counts) cells += table[c];
    double rows = 0.0;
    for (std::uint32_t x : m.row_sums) rows += table[x];
    double cols = 0.0;
    for (std::uint32_t y : m.col_sums) cols += table[y];
    return clamp_info(cells - rows - cols + table[m.total], m.total);
}

}  // namespace idec
