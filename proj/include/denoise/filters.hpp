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

#include <vector>

namespace denoise {

// One transversal adaptive FIR filter: tap weights plus the input history
// they act on. delay_line[0] holds x(n-1), delay_line[order-1] holds
// x(n-order). Both vectors always have the same length and finite entries.
struct FilterState {
    std::vector<double> taps;
    std::vector<double> delay_line;

    explicit FilterState(int order);

    int order() const { return static_cast<int>(taps.size()); }
};

// Per-tap NLMS step sizes, each in [0, 2). Taps given the large step follow
// fast signal changes; the rest trade tracking for estimation fidelity.
struct StepSizeProfile {
    std::vector<double> per_tap_mu;
    double regularization_eps;

    StepSizeProfile(std::vector<double> mu, double eps);

    static StepSizeProfile uniform(int order, double mu, double eps = 1e-8);

    int order() const { return static_cast<int>(per_tap_mu.size()); }
};

struct LpefStep {
    double prediction;
    double error;
};

// y(n) = sum_k taps[k] * delay_line[k]. State unchanged.
double filter_output(const FilterState& state);

// Shift the delay line one sample and insert x at the front; the oldest
// sample falls off. Rejects non-finite x.
void push_sample(FilterState& state, double x);

// Normalized LMS update:
//   taps[k] += mu[k] * error * delay_line[k] / (eps + ||delay_line||^2)
// Taps whose magnitude falls below 1e-30 are flushed to zero so long runs
// stay out of denormal range.
void nlms_update(FilterState& state, double error, const StepSizeProfile& profile);

// One prediction-error step: predict x(n) from x(n-1)..x(n-M), adapt on the
// error, then absorb x(n) into the delay line.
// Always returns error == x_now - prediction.
LpefStep lpef_step(FilterState& state, double x_now, const StepSizeProfile& profile);

}  // namespace denoise
