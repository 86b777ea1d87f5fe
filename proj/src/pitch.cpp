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
#include "denoise/pitch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace denoise {

PitchEstimate estimate_pitch(std::span<const double> window, int lag_min, int lag_max,
                             double voiced_threshold) {
    if (!(0 < lag_min && lag_min < lag_max)) {
        throw std::invalid_argument("require 0 < lag_min < lag_max");
    }
    const int n = static_cast<int>(window.size());
    if (n <= 2 * lag_max) {
        throw std::invalid_argument("pitch window too short: need more than 2 * lag_max samples");
    }

    double best_rho = 0.0;
    int best_lag = lag_min;
    for (int tau = lag_min; tau <= lag_max; ++tau) {
        double num = 0.0, e_cur = 0.0, e_lag = 0.0;
        for (int i = tau; i < n; ++i) {
            num += window[i] * window[i - tau];
            e_cur += window[i] * window[i];
            e_lag += window[i - tau] * window[i - tau];
        }
        const double denom = e_cur * e_lag;
        const double rho = denom > 0.0 ? num / std::sqrt(denom) : 0.0;
        if (rho > best_rho) { // strict: first (smallest) lag wins ties
            best_rho = rho;
            best_lag = tau;
        }
    }

    PitchEstimate est;
    est.lag = best_lag;
    est.confidence = std::clamp(best_rho, 0.0, 1.0);
    est.voiced = est.confidence >= voiced_threshold;
    return est;
}

StepSizeProfile make_step_profile(int order, const PitchEstimate& pitch, int neighborhood,
                                  double mu_large, double mu_small, double eps) {
    if (order < 1) {
        throw std::invalid_argument("profile order must be >= 1");
    }
    if (!(0.0 <= mu_small && mu_small <= mu_large && mu_large < 2.0)) {
        throw std::invalid_argument("require 0 <= mu_small <= mu_large < 2");
    }
    if (neighborhood < 0) {
        throw std::invalid_argument("neighborhood must be >= 0");
    }
    std::vector<double> mu(static_cast<std::size_t>(order), mu_small);
    if (pitch.voiced && pitch.lag <= order) {
        // Tap k (1-based) delays by k samples; fast taps are those within
        // `neighborhood` of the pitch lag, clamped to the filter span.
        const int lo = std::max(1, pitch.lag - neighborhood);
        const int hi = std::min(order, pitch.lag + neighborhood);
        for (int k = lo; k <= hi; ++k) {
            mu[static_cast<std::size_t>(k - 1)] = mu_large;
        }
    }
    return StepSizeProfile(std::move(mu), eps);
}

}  // namespace denoise
