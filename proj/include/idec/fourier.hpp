#pragma once

#include <vector>

#include "idec/sequence.hpp"

namespace idec {

// Indicator-sequence Fourier baseline. For each symbol j the 0/1 indicator
// sequence is mean-subtracted (the DC term would otherwise dominate) and
// transformed; power at frequency f is |X_f|^2 / L, and the total spectrum
// sums the k per-symbol spectra. Frequencies f = 1 .. floor(L/2) are
// reported against period = L / f.
struct PowerSpectrum {
    std::size_t length = 0;                      // L
    std::vector<double> period;                  // L / f
    std::vector<double> power;                   // total over symbols
    std::vector<std::vector<double>> per_symbol; // k spectra, same layout

    // Power of the frequency bin whose period is closest to `target`.
    double power_at_period(double target) const;
};

// Requires L >= 4.
PowerSpectrum fourier_spectrum(const EncodedSequence& seq);

}  // namespace idec
