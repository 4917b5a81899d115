#pragma once

#include <span>
#include <vector>

namespace motionplat {

struct FilterParams {
    double cutoff = 50.0;    ///< Hz
    int order = 4;           ///< even
    bool zero_phase = true;  ///< forward-backward pass
};

/// Second-order section, transposed direct form II, a0 normalised to 1.
struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
};

/// Digital Butterworth low-pass via the bilinear transform with cutoff pre-warping, so the
/// response is exactly -3.01 dB at `cutoff`. Each section has unity DC gain.
std::vector<Biquad> butterworth_lowpass(int order, double cutoff, double fs);

/// Throws InvalidArgumentError for an odd/non-positive order or cutoff outside (0, fs/2).
void validate(const FilterParams& p, double fs);

/// Filters a uniformly sampled sequence. Output has the input's length. The filter state
/// starts at the steady state of the first sample, so constant inputs pass unchanged.
/// Zero-phase mode pads both ends with an odd reflection, then runs forward and backward.
/// Throws InvalidArgumentError when the sequence has no more than 3 * order samples.
std::vector<double> butterworth_filter(std::span<const double> x, double fs, const FilterParams& p);

}  // namespace motionplat
