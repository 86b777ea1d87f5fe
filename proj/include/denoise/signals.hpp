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
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace denoise {

struct Signal {
    std::vector<double> samples;
    int sample_rate = 8000;

    std::size_t size() const { return samples.size(); }
};

// Linear system that colors white noise, either as an FIR impulse-response
// prefix or as a stable all-pole (autoregressive) recursion. Exactly one
// form is present.
class NoiseShaper {
  public:
    // v(n) = sum_j taps[j] * w(n-j)
    static NoiseShaper fir(std::vector<double> taps);
    // v(n) = sum_k coeffs[k] * v(n-k-1) + w(n); rejected unless all
    // characteristic roots lie strictly inside the unit circle.
    static NoiseShaper ar(std::vector<double> coeffs);

    bool is_fir() const { return is_fir_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

  private:
    NoiseShaper(bool is_fir, std::vector<double> coeffs);

    bool is_fir_;
    std::vector<double> coeffs_;
};

// True when the AR recursion v(n) = sum coeffs[k] v(n-k-1) + w(n) is stable.
bool ar_stable(std::span<const double> coeffs);

// n zero-mean Gaussian samples of the given variance. Fully determined by
// seed (Box-Muller over a fixed 64-bit engine), so identical calls are
// bitwise identical on any platform.
Signal gen_white_noise(std::size_t n, std::uint64_t seed, double variance,
                       int sample_rate = 8000);

// Drive the shaper with the given excitation, zero initial conditions.
// Output length equals input length.
Signal shape_noise(const Signal& white, const NoiseShaper& shaper);

// Voiced-speech surrogate: impulse train at period round(sample_rate/f0)
// run through formant_taps, normalized to unit peak. Deterministic; the
// seed is accepted for run-spec uniformity and does not affect the output.
Signal gen_voiced(double f0_hz, double duration_s, int sample_rate,
                  std::span<const double> formant_taps, std::uint64_t seed);

struct MixResult {
    Signal mixed;
    Signal scaled_noise;
};

// Scale the noise so that 10*log10(||clean||^2 / ||scaled||^2) == snr_db,
// then add. Both inputs need nonzero energy and matching length/rate.
MixResult mix_at_snr(const Signal& clean, const Signal& noise, double snr_db);

}  // namespace denoise
