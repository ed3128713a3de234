#include "idec/zscore.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace idec {

namespace detail {

InfoStat z_score_with_table(const EncodedSequence& seq, std::size_t n,
                            const BackgroundModel& model, const XlnxTable& table) {
    model.validate();
    const std::size_t length = seq.length();
    const std::size_t k = seq.alphabet_size();
    if (n < 2 || 2 * n > length) {
        throw std::invalid_argument("period must satisfy 2 <= n <= L/2");
    }
    if (table.max_value() < length) {
        throw std::invalid_argument("xlnx table smaller than sequence length");
    }

    InfoStat stat;
    stat.df = chi2_reference(n, k);

    const ContingencyMatrix observed = build_contingency(seq, n);
    stat.info_nats = mutual_information(observed, table);
    stat.j_stat = stat.info_nats - static_cast<double>(stat.df);

    // Row sums are fixed by the position structure and column sums by the
    // symbol multiset, so only the cells change between trials.
    const std::uint64_t period_seed = mix_seed(model.seed, n);
    const std::size_t d = model.effective_phase();

    double marginal_terms = 0.0;
    for (std::uint32_t x : observed.row_sums) marginal_terms -= table[x];
    for (std::uint32_t y : observed.col_sums) marginal_terms -= table[y];
    marginal_terms += table[length];

    std::vector<SymbolIndex> perm(length);
    std::vector<std::uint32_t> cells(n * k);
    std::vector<double> j_values(model.trials);

    for (std::size_t t = 0; t < model.trials; ++t) {
        perm = seq.data();
        Rng rng(mix_seed(period_seed, t + 1));
        permute_within_phases(perm, d, rng);

        cells.assign(n * k, 0);
        std::size_t phase = 0;
        for (std::size_t p = 0; p < length; ++p) {
            ++cells[phase * k + perm[p]];
            if (++phase == n) phase = 0;
        }
        double cell_terms = 0.0;
        for (std::uint32_t c : cells) cell_terms += table[c];
        double info = cell_terms + marginal_terms;
        if (info < 0.0) info = 0.0;  // permutation cannot change marginals
        j_values[t] = info - static_cast<double>(stat.df);
    }

    double sum = 0.0;
    for (double j : j_values) sum += j;
    const double mean = sum / static_cast<double>(model.trials);
    double ss = 0.0;
    for (double j : j_values) ss += (j - mean) * (j - mean);
    const double sd = std::sqrt(ss / static_cast<double>(model.trials - 1));

    stat.mc_mean = mean;
    stat.mc_sd = sd;
    if (sd == 0.0) {
        stat.degenerate = true;
        stat.z = std::numeric_limits<double>::quiet_NaN();
    } else {
        stat.z = (stat.j_stat - mean) / sd;
    }
    return stat;
}

}  // namespace detail

InfoStat z_score(const EncodedSequence& seq, std::size_t n, const BackgroundModel& model) {
    const XlnxTable table(seq.length());
    return detail::z_score_with_table(seq, n, model, table);
}

}  // namespace idec
