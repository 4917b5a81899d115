#include "motionplat/butterworth.hpp"

#include "motionplat/errors.hpp"
#include "motionplat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace motionplat {

namespace {

void run_sections(const std::vector<Biquad>& sections, std::vector<double>& x) {
    if (x.empty()) return;
    const double x0 = x.front();
    for (const Biquad& s : sections) {
        // Steady state for a constant input x0 (unity DC gain, so y = x0).
        double z2 = (s.b2 - s.a2) * x0;
        double z1 = (s.b1 - s.a1) * x0 + z2;
        for (double& v : x) {
            const double in = v;
            const double out = s.b0 * in + z1;
            z1 = s.b1 * in - s.a1 * out + z2;
            z2 = s.b2 * in - s.a2 * out;
            v = out;
        }
    }
}

}  // namespace

void validate(const FilterParams& p, double fs) {
    if (p.order <= 0 || p.order % 2 != 0) {
        throw InvalidArgumentError("filter.order: must be a positive even integer, got " + std::to_string(p.order));
    }
    if (!(fs > 0.0) || !std::isfinite(fs)) throw InvalidArgumentError("filter: sample rate must be > 0");
    if (!(p.cutoff > 0.0) || !(p.cutoff < 0.5 * fs)) {
        throw InvalidArgumentError("filter.cutoff: " + std::to_string(p.cutoff) + " Hz must lie in (0, " +
                                   std::to_string(0.5 * fs) + ") Hz");
    }
}

std::vector<Biquad> butterworth_lowpass(int order, double cutoff, double fs) {
    validate(FilterParams{cutoff, order, false}, fs);
    const double k = std::tan(kPi * cutoff / fs);
    const double k2 = k * k;
    std::vector<Biquad> out;
    for (int i = 0; i < order / 2; ++i) {
        // Conjugate pole pair of the analog prototype: s^2 + q s + 1.
        const double q = 2.0 * std::sin(kPi * (2.0 * i + 1.0) / (2.0 * order));
        const double a0 = 1.0 + q * k + k2;
        Biquad s;
        s.b0 = k2 / a0;
        s.b1 = 2.0 * k2 / a0;
        s.b2 = k2 / a0;
        s.a1 = 2.0 * (k2 - 1.0) / a0;
        s.a2 = (1.0 - q * k + k2) / a0;
        out.push_back(s);
    }
    return out;
}

std::vector<double> butterworth_filter(std::span<const double> x, double fs, const FilterParams& p) {
    validate(p, fs);
    if (x.size() <= static_cast<std::size_t>(3 * p.order)) {
        throw InvalidArgumentError("filter: sequence of " + std::to_string(x.size()) +
                                   " samples is too short for order " + std::to_string(p.order));
    }
    const auto sections = butterworth_lowpass(p.order, p.cutoff, fs);
    if (!p.zero_phase) {
        std::vector<double> y(x.begin(), x.end());
        run_sections(sections, y);
        return y;
    }

    const std::size_t n = x.size();
    const std::size_t pad = std::min<std::size_t>(3 * (p.order + 1), n - 1);
    std::vector<double> ext;
    ext.reserve(n + 2 * pad);
    for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x[0] - x[i]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (std::size_t i = 1; i <= pad; ++i) ext.push_back(2.0 * x[n - 1] - x[n - 1 - i]);

    run_sections(sections, ext);
    std::reverse(ext.begin(), ext.end());
    run_sections(sections, ext);
    std::reverse(ext.begin(), ext.end());
    return {ext.begin() + static_cast<std::ptrdiff_t>(pad), ext.begin() + static_cast<std::ptrdiff_t>(pad + n)};
}

}  // namespace motionplat
