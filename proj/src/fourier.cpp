#include "idec/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace idec {

namespace {

// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

struct FftwBuffers {
    double* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan plan = nullptr;
    std::size_t length = 0;

    FftwBuffers(std::size_t n) : length(n) {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        in = fftw_alloc_real(n);
        out = fftw_alloc_complex(n / 2 + 1);
        if (!in || !out) throw std::bad_alloc();
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
        if (!plan) throw std::runtime_error("fftw plan creation failed");
    }
    ~FftwBuffers() {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan);
        fftw_free(in);
        fftw_free(out);
    }
    FftwBuffers(const FftwBuffers&) = delete;
    FftwBuffers& operator=(const FftwBuffers&) = delete;
};

}  // namespace

double PowerSpectrum::power_at_period(double target) const {
    if (period.empty()) return 0.0;
    std::size_t best = 0;
    for (std::size_t i = 1; i < period.size(); ++i) {
        if (std::abs(period[i] - target) < std::abs(period[best] - target)) best = i;
    }
    return power[best];
}

PowerSpectrum fourier_spectrum(const EncodedSequence& seq) {
    const std::size_t length = seq.length();
    if (length < 4) throw std::invalid_argument("fourier_spectrum needs L >= 4");
    const std::size_t k = seq.alphabet_size();
    const std::size_t bins = length / 2;  // f = 1 .. floor(L/2)

    PowerSpectrum spectrum;
    spectrum.length = length;
    spectrum.period.resize(bins);
    spectrum.power.assign(bins, 0.0);
    spectrum.per_symbol.assign(k, std::vector<double>(bins, 0.0));
    for (std::size_t f = 1; f <= bins; ++f) {
        spectrum.period[f - 1] = static_cast<double>(length) / static_cast<double>(f);
    }

    FftwBuffers buffers(length);
    std::vector<std::size_t> symbol_counts(k, 0);
    for (SymbolIndex s : seq.data()) ++symbol_counts[s];

    for (std::size_t j = 0; j < k; ++j) {
        const double mean =
            static_cast<double>(symbol_counts[j]) / static_cast<double>(length);
        for (std::size_t p = 0; p < length; ++p) {
            buffers.in[p] = (seq[p] == j ? 1.0 : 0.0) - mean;
        }
        fftw_execute(buffers.plan);
        for (std::size_t f = 1; f <= bins; ++f) {
            const double re = buffers.out[f][0];
            const double im = buffers.out[f][1];
            const double power = (re * re + im * im) / static_cast<double>(length);
            spectrum.per_symbol[j][f - 1] = power;
            spectrum.power[f - 1] += power;
        }
    }
    return spectrum;
}

}  // namespace idec
