#include "idec/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include "idec/parallel.hpp"

namespace idec {

namespace {

constexpr std::size_t kGridCells = 64;
constexpr std::size_t kMinSubLen = 50;

struct Candidate {
    std::size_t start = 0;
    std::size_t end = 0;
};

std::vector<std::size_t> grid_points(std::size_t window_len, std::size_t stride) {
    std::vector<std::size_t> points;
    for (std::size_t p = 0; p < window_len; p += stride) points.push_back(p);
    points.push_back(window_len);
    return points;
}

// Cumulative phase-by-symbol counts at each grid boundary; the table of any
// candidate interval is the difference of two snapshots. Phases are counted
// relative to the window origin: re-anchoring an interval to its own start
// only rotates the rows, and mutual information is row-permutation
// invariant.
void build_snapshots(const std::vector<SymbolIndex>& data, std::size_t n, std::size_t k,
                     const std::vector<std::size_t>& points,
                     std::vector<std::uint32_t>& running,
                     std::vector<std::uint32_t>& snapshots) {
    const std::size_t cells = n * k;
    running.assign(cells, 0);
    std::size_t next = 0;
    std::size_t phase = 0;
    for (std::size_t p = 0; p < data.size(); ++p) {
        if (next < points.size() && points[next] == p) {
            std::copy(running.begin(), running.end(), snapshots.begin() + next * cells);
            ++next;
        }
        ++running[phase * k + data[p]];
        if (++phase == n) phase = 0;
    }
    std::copy(running.begin(), running.end(), snapshots.begin() + next * cells);
}

double interval_j(const std::uint32_t* lo, const std::uint32_t* hi, std::size_t n,
                  std::size_t k, std::size_t length, const XlnxTable& table,
                  std::vector<std::uint32_t>& col_scratch) {
    col_scratch.assign(k, 0);
    double cell_terms = 0.0;
    double row_terms = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t row = 0;
        const std::size_t base = i * k;
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint32_t m = hi[base + j] - lo[base + j];
            cell_terms += table[m];
            col_scratch[j] += m;
            row += m;
        }
        row_terms += table[row];
    }
    double col_terms = 0.0;
    for (std::size_t j = 0; j < k; ++j) col_terms += table[col_scratch[j]];
    double info = cell_terms - row_terms - col_terms + table[length];
    if (info < 0.0) info = 0.0;
    return info - static_cast<double>(chi2_reference(n, k));
}

}  // namespace

BestInterval best_subsequence(const EncodedSequence& window, std::size_t n,
                              const BackgroundModel& model) {
    model.validate();
    const std::size_t window_len = window.length();
    const std::size_t k = window.alphabet_size();
    if (window_len < 2 * n) throw std::invalid_argument("window shorter than 2n");

    const std::size_t stride = std::max(n, window_len / kGridCells);
    const std::vector<std::size_t> points = grid_points(window_len, stride);
    const std::size_t min_len = std::max(2 * n, kMinSubLen);

    std::vector<Candidate> candidates;
    for (std::size_t a = 0; a < points.size(); ++a) {
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            if (points[b] - points[a] >= min_len) {
                candidates.push_back({points[a], points[b]});
            }
        }
    }
    const bool have_full = std::any_of(
        candidates.begin(), candidates.end(),
        [&](const Candidate& c) { return c.start == 0 && c.end == window_len; });
    if (!have_full) candidates.push_back({0, window_len});

    const XlnxTable table(window_len);
    const std::size_t cells = n * k;
    std::vector<std::uint32_t> running(cells);
    std::vector<std::uint32_t> snapshots(points.size() * cells);
    std::vector<std::uint32_t> col_scratch(k);

    build_snapshots(window.data(), n, k, points, running, snapshots);

    // Snapshot index per grid offset (points are stride-spaced plus the end).
    auto point_index = [&](std::size_t offset) {
        return offset == window_len ? points.size() - 1 : offset / stride;
    };

    std::vector<double> j_observed(candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        j_observed[c] = interval_j(
            snapshots.data() + point_index(candidates[c].start) * cells,
            snapshots.data() + point_index(candidates[c].end) * cells, n, k,
            candidates[c].end - candidates[c].start, table, col_scratch);
    }

    // Ranking trials: one permutation of the whole window per trial, every
    // candidate scored from the same permuted snapshot set. Shifted sums of
    // squares keep the variance well conditioned.
    const std::uint64_t period_seed = mix_seed(model.seed, n);
    const std::size_t d = model.effective_phase();
    std::vector<double> j_first(candidates.size());
    std::vector<double> sum_delta(candidates.size(), 0.0);
    std::vector<double> sum_delta2(candidates.size(), 0.0);
    std::vector<SymbolIndex> perm(window_len);

    for (std::size_t t = 0; t < model.trials; ++t) {
        perm = window.data();
        Rng rng(mix_seed(period_seed, t + 1));
        detail::permute_within_phases(perm, d, rng);
        build_snapshots(perm, n, k, points, running, snapshots);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const double j = interval_j(
                snapshots.data() + point_index(candidates[c].start) * cells,
                snapshots.data() + point_index(candidates[c].end) * cells, n, k,
                candidates[c].end - candidates[c].start, table, col_scratch);
            if (t == 0) {
                j_first[c] = j;
            } else {
                const double delta = j - j_first[c];
                sum_delta[c] += delta;
                sum_delta2[c] += delta * delta;
            }
        }
    }

    const auto trials = static_cast<double>(model.trials);
    std::size_t best = candidates.size();
    double best_z = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const double mean = j_first[c] + sum_delta[c] / trials;
        double var = (sum_delta2[c] - sum_delta[c] * sum_delta[c] / trials) / (trials - 1.0);
        if (var <= 0.0) continue;
        const double z = (j_observed[c] - mean) / std::sqrt(var);
        const std::size_t len = candidates[c].end - candidates[c].start;
        if (best == candidates.size() || z > best_z) {
            best = c;
            best_z = z;
        } else if (z == best_z) {
            const std::size_t best_len = candidates[best].end - candidates[best].start;
            if (len > best_len ||
                (len == best_len && candidates[c].start < candidates[best].start)) {
                best = c;
            }
        }
    }
    if (best == candidates.size()) {
        // Every candidate had a flat background (e.g. constant window); fall
        // back to the full window and let the exact re-score flag it.
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (candidates[c].start == 0 && candidates[c].end == window_len) best = c;
        }
        if (best == candidates.size()) best = candidates.size() - 1;
    }

    BestInterval result;
    result.start = candidates[best].start;
    result.end = candidates[best].end;
    result.stat =
        z_score(window.subsequence(result.start, result.end), n, model);
    return result;
}

std::vector<ScanHit> scan(const EncodedSequence& seq, const ScanParams& params) {
    params.model.validate();
    if (params.threshold <= 0.0) throw std::invalid_argument("threshold must be positive");
    if (params.periods.n_min < 2 || params.periods.n_min > params.periods.n_max) {
        throw std::invalid_argument("empty or invalid period range");
    }

    const std::size_t length = seq.length();
    const std::size_t window_len = std::min(params.window_len, length);
    const std::size_t step = std::max<std::size_t>(1, params.step);

    std::vector<std::size_t> starts;
    for (std::size_t s = 0; s + window_len <= length; s += step) starts.push_back(s);
    if (starts.empty()) starts.push_back(0);
    if (starts.back() + window_len < length) starts.push_back(length - window_len);

    std::vector<EncodedSequence> windows;
    windows.reserve(starts.size());
    for (std::size_t s : starts) windows.push_back(seq.subsequence(s, s + window_len));

    struct Task {
        std::size_t window_idx;
        std::size_t n;
    };
    std::vector<Task> tasks;
    for (std::size_t w = 0; w < starts.size(); ++w) {
        for (std::size_t n = params.periods.n_min; n <= params.periods.n_max; ++n) {
            if (2 * n <= window_len) tasks.push_back({w, n});
        }
    }

    std::vector<std::optional<ScanHit>> slots(tasks.size());
    parallel_for(tasks.size(), params.threads, [&](std::size_t idx) {
        const Task& task = tasks[idx];
        const BackgroundModel model =
            model_for_period(params.model, task.n, params.triplet_aware);
        const BestInterval best = best_subsequence(windows[task.window_idx], task.n, model);
        if (best.stat.degenerate || !(best.stat.z >= params.threshold)) return;
        ScanHit hit;
        hit.window_start = starts[task.window_idx];
        hit.window_end = starts[task.window_idx] + window_len;
        hit.sub_start = hit.window_start + best.start;
        hit.sub_end = hit.window_start + best.end;
        hit.n = task.n;
        hit.stat = best.stat;
        hit.threshold_used = params.threshold;
        slots[idx] = hit;
    });

    // Overlapping windows can rediscover the same region; keep the best copy.
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, ScanHit> dedup;
    for (const auto& slot : slots) {
        if (!slot) continue;
        const auto key = std::make_tuple(slot->n, slot->sub_start, slot->sub_end);
        auto it = dedup.find(key);
        if (it == dedup.end() || slot->stat.z > it->second.stat.z) {
            dedup[key] = *slot;
        }
    }

    std::vector<ScanHit> hits;
    hits.reserve(dedup.size());
    for (const auto& [key, hit] : dedup) hits.push_back(hit);
    std::sort(hits.begin(), hits.end(), [](const ScanHit& a, const ScanHit& b) {
        return std::tie(a.window_start, a.n, a.sub_start) <
               std::tie(b.window_start, b.n, b.sub_start);
    });
    return hits;
}

}  // namespace idec
