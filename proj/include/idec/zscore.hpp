#pragma once

#include "idec/background.hpp"
#include "idec/info.hpp"

namespace idec {

// Monte-Carlo normalization of J(n, k) against the background model:
//
//   Z = (J_obs - mean_t J_t) / sd_t(J_t),   t = 1 .. trials,
//
// where trial t scores a background permutation drawn from the stream
// mix_seed(mix_seed(model.seed, n), t). Deriving the stream from
// (seed, n, trial) makes the result bit-identical for a fixed seed no matter
// how calls are scheduled, and lets a hit be re-validated later by calling
// z_score again on the stored subsequence.
//
// When every trial yields the same J (e.g. a constant sequence, or a
// preserve_phase(d) model tested at n == d) the background sd is exactly 0;
// the result is then flagged degenerate and Z is NaN.
//
// Requires 2 <= n <= L/2 and trials >= 2.
InfoStat z_score(const EncodedSequence& seq, std::size_t n, const BackgroundModel& model);

namespace detail {

// Same computation with a caller-provided x*ln(x) table (table.max_value()
// must be >= L) so spectral sweeps can share one table across periods.
InfoStat z_score_with_table(const EncodedSequence& seq, std::size_t n,
                            const BackgroundModel& model, const XlnxTable& table);

}  // namespace detail

}  // namespace idec
