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

#include <span>

#include "denoise/filters.hpp"

namespace denoise {

struct PitchEstimate {
    int lag = 0;             // pitch period in samples, valid when voiced
    double confidence = 0.0; // normalized autocorrelation peak, in [0, 1]
    bool voiced = false;
};

// Pick the lag in [lag_min, lag_max] with the highest normalized
// autocorrelation
//   rho(t) = sum w(n) w(n-t) / sqrt(sum w(n)^2 * sum w(n-t)^2)
// over the window (chronological order, oldest first). Ties go to the
// smallest lag so the fundamental wins over sub-octaves. An all-zero
// window comes back unvoiced with confidence 0.
// Requires window.size() > 2 * lag_max and 0 < lag_min < lag_max.
PitchEstimate estimate_pitch(std::span<const double> window, int lag_min, int lag_max,
                             double voiced_threshold);

// Build the dual-step profile: taps within `neighborhood` of the pitch lag
// get mu_large, all others mu_small. Unvoiced input, or a lag beyond the
// filter order, falls back to mu_small everywhere.
// Requires 0 <= mu_small <= mu_large < 2 and neighborhood >= 0.
StepSizeProfile make_step_profile(int order, const PitchEstimate& pitch, int neighborhood,
                                  double mu_large, double mu_small, double eps);

}  // namespace denoise
