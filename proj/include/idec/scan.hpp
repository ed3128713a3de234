#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idec/spectrum.hpp"

namespace idec {

// A located periodic sub-sequence. Offsets are half-open and global to the
// scanned sequence; subseq always lies inside window and spans at least two
// full periods. stat is the exact z_score of the stored subsequence, so
// re-running z_score(seq[sub_start, sub_end), n, model) reproduces it.
struct ScanHit {
    std::size_t window_start = 0;
    std::size_t window_end = 0;
    std::size_t sub_start = 0;
    std::size_t sub_end = 0;
    std::size_t n = 0;
    InfoStat stat;
    double threshold_used = 0.0;
};

struct BestInterval {
    std::size_t start = 0;  // window-relative
    std::size_t end = 0;
    InfoStat stat;
};

// Finds the sub-interval of the window with the largest Z at period n.
//
// Candidates put start and end on a grid of stride max(n, W/64) (plus the
// window end) and must span at least max(2n, 50) symbols; the full window is
// always a candidate. Scoring every candidate with its own permutation
// ensemble would cost O(candidates * trials * W), so the search stage ranks
// candidates against trials that permute the whole window once and reads
// interval tables from cumulative counts; the winner -- ties broken by
// longer interval, then smaller start -- is then re-scored exactly with
// z_score on the extracted subsequence, and that exact statistic is what the
// caller receives.
//
// Requires window length >= 2n.
BestInterval best_subsequence(const EncodedSequence& window, std::size_t n,
                              const BackgroundModel& model);

struct ScanParams {
    std::size_t window_len = 2000;
    std::size_t step = 1000;
    PeriodRange periods{2, 200};
    double threshold = 7.0;
    BackgroundModel model = BackgroundModel::shuffled();
    bool triplet_aware = false;
    unsigned threads = 1;
};

// Windowed scan: windows of window_len advanced by step (a final window is
// added flush with the end when the step grid overshoots; a sequence shorter
// than window_len is scanned as a single full-length window). For every
// (window, period) pair the best sub-interval is located and kept when its
// exact Z clears the threshold. Hits with identical (n, subseq) coordinates
// from overlapping windows are deduplicated keeping the max-Z instance.
// Output is ordered by (window start, n) regardless of thread count.
std::vector<ScanHit> scan(const EncodedSequence& seq, const ScanParams& params);

}  // namespace idec
