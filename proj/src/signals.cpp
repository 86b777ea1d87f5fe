/*
Copyright 2026 The lpef-denoise Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include "denoise/signals.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace denoise {

namespace {

// Uniform double in (0, 1] from the top 53 bits; keeps the Gaussian mapping
// independent of library distribution internals.
double next_unit(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

NoiseShaper::NoiseShaper(bool is_fir, std::vector<double> coeffs)
    : is_fir_(is_fir), coeffs_(std::move(coeffs)) {}

NoiseShaper NoiseShaper::fir(std::vector<double> taps) {
    if (taps.empty()) {
        throw std::invalid_argument("FIR shaper needs at least one tap");
    }
    return NoiseShaper(true, std::move(taps));
}

NoiseShaper NoiseShaper::ar(std::vector<double> coeffs) {
    if (coeffs.empty()) {
        throw std::invalid_argument("AR shaper needs at least one coefficient");
    }
    if (!ar_stable(coeffs)) {
        throw std::invalid_argument("AR shaper is unstable: characteristic roots on or outside the unit circle");
    }
    return NoiseShaper(false, std::move(coeffs));
}

bool ar_stable(std::span<const double> coeffs) {
    // Step-down (reverse Levinson) recursion on A(z) = 1 - sum a_k z^-k:
    // stable iff every reflection coefficient has magnitude < 1.
    std::vector<double> a(coeffs.begin(), coeffs.end());
    for (double& c : a) {
        c = -c;
    }
    for (int m = static_cast<int>(a.size()); m > 0; --m) {
        const double k = a[static_cast<std::size_t>(m - 1)];
        if (!(std::fabs(k) < 1.0)) {
            return false;
        }
        const double denom = 1.0 - k * k;
        std::vector<double> next(static_cast<std::size_t>(m - 1));
        for (int i = 0; i < m - 1; ++i) {
            next[static_cast<std::size_t>(i)] =
                (a[static_cast<std::size_t>(i)] - k * a[static_cast<std::size_t>(m - 2 - i)]) / denom;
        }
        a = std::move(next);
    }
    return true;
}

Signal gen_white_noise(std::size_t n, std::uint64_t seed, double variance, int sample_rate) {
    if (n == 0) {
        throw std::invalid_argument("white noise length must be > 0");
    }
    if (variance < 0.0) {
        throw std::invalid_argument("variance must be >= 0");
    }
    Signal out;
    out.sample_rate = sample_rate;
    out.samples.resize(n);
    const double sigma = std::sqrt(variance);
    std::mt19937_64 rng(seed);
    double cached = 0.0;
    bool have_cached = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (have_cached) {
            out.samples[i] = sigma * cached;
            have_cached = false;
            continue;
        }
        const double u1 = next_unit(rng);
        const double u2 = next_unit(rng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        out.samples[i] = sigma * (r * std::cos(theta));
        cached = r * std::sin(theta);
        have_cached = true;
    }
    return out;
}

Signal shape_noise(const Signal& white, const NoiseShaper& shaper) {
    const auto& c = shaper.coeffs();
    Signal out;
    out.sample_rate = white.sample_rate;
    out.samples.assign(white.size(), 0.0);
    const std::size_t n = white.size();
    if (shaper.is_fir()) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            const std::size_t jmax = std::min(c.size() - 1, i);
            for (std::size_t j = 0; j <= jmax; ++j) {
                acc += c[j] * white.samples[i - j];
            }
            out.samples[i] = acc;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = white.samples[i];
            const std::size_t kmax = std::min(c.size(), i);
            for (std::size_t k = 0; k < kmax; ++k) {
                acc += c[k] * out.samples[i - k - 1];
            }
            out.samples[i] = acc;
        }
    }
    return out;
}

Signal gen_voiced(double f0_hz, double duration_s, int sample_rate,
                  std::span<const double> formant_taps, std::uint64_t seed) {
    (void)seed;
    if (sample_rate <= 0) {
        throw std::invalid_argument("sample rate must be > 0");
    }
    if (!(f0_hz > 0.0 && f0_hz < sample_rate / 2.0)) {
        throw std::invalid_argument("f0 must lie in (0, sample_rate/2)");
    }
    const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate));
    if (n == 0) {
        throw std::invalid_argument("duration too short: no samples");
    }
    const auto period = static_cast<std::size_t>(std::llround(sample_rate / f0_hz));

    Signal train;
    train.sample_rate = sample_rate;
    train.samples.assign(n, 0.0);
    for (std::size_t i = 0; i < n; i += period) {
        train.samples[i] = 1.0;
    }

    Signal out = formant_taps.empty()
                     ? std::move(train)
                     : shape_noise(train, NoiseShaper::fir(std::vector<double>(
                                              formant_taps.begin(), formant_taps.end())));
    double peak = 0.0;
    for (double s : out.samples) {
        peak = std::max(peak, std::fabs(s));
    }
    if (peak > 0.0) {
        for (double& s : out.samples) {
            s /= peak;
        }
    }
    return out;
}

MixResult mix_at_snr(const Signal& clean, const Signal& noise, double snr_db) {
    if (clean.size() != noise.size()) {
        throw std::invalid_argument("clean and noise must have equal length");
    }
    if (clean.sample_rate != noise.sample_rate) {
        throw std::invalid_argument("clean and noise must have equal sample rate");
    }
    double e_clean = 0.0, e_noise = 0.0;
    for (std::size_t i = 0; i < clean.size(); ++i) {
        e_clean += clean.samples[i] * clean.samples[i];
        e_noise += noise.samples[i] * noise.samples[i];
    }
    if (e_clean <= 0.0 || e_noise <= 0.0) {
        throw std::invalid_argument("mix_at_snr requires nonzero-energy clean and noise");
    }
    const double alpha = std::sqrt(e_clean / e_noise * std::pow(10.0, -snr_db / 10.0));

    MixResult r;
    r.scaled_noise.sample_rate = clean.sample_rate;
    r.mixed.sample_rate = clean.sample_rate;
    r.scaled_noise.samples.resize(clean.size());
    r.mixed.samples.resize(clean.size());
    for (std::size_t i = 0; i < clean.size(); ++i) {
        r.scaled_noise.samples[i] = alpha * noise.samples[i];
        r.mixed.samples[i] = clean.samples[i] + r.scaled_noise.samples[i];
    }
    return r;
}

}  // namespace denoise
