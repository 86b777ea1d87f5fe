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
#include "denoise/filters.hpp"

#include <cmath>
#include <stdexcept>

namespace denoise {

namespace {
constexpr double kDenormalFloor = 1e-30;
}

FilterState::FilterState(int order) {
    if (order < 1) {
        throw std::invalid_argument("filter order must be >= 1");
    }
    taps.assign(static_cast<std::size_t>(order), 0.0);
    delay_line.assign(static_cast<std::size_t>(order), 0.0);
}

StepSizeProfile::StepSizeProfile(std::vector<double> mu, double eps)
    : per_tap_mu(std::move(mu)), regularization_eps(eps) {
    if (per_tap_mu.empty()) {
        throw std::invalid_argument("step-size profile must not be empty");
    }
    for (double m : per_tap_mu) {
        if (!(m >= 0.0 && m < 2.0)) {
            throw std::invalid_argument("per-tap step size must lie in [0, 2)");
        }
    }
    if (!(regularization_eps > 0.0)) {
        throw std::invalid_argument("regularization eps must be > 0");
    }
}

StepSizeProfile StepSizeProfile::uniform(int order, double mu, double eps) {
    if (order < 1) {
        throw std::invalid_argument("profile order must be >= 1");
    }
    return StepSizeProfile(std::vector<double>(static_cast<std::size_t>(order), mu), eps);
}

double filter_output(const FilterState& state) {
    double y = 0.0;
    const std::size_t m = state.taps.size();
    for (std::size_t k = 0; k < m; ++k) {
        y += state.taps[k] * state.delay_line[k];
    }
    return y;
}

void push_sample(FilterState& state, double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("input sample must be finite");
    }
    auto& d = state.delay_line;
    for (std::size_t k = d.size() - 1; k > 0; --k) {
        d[k] = d[k - 1];
    }
    d[0] = x;
}

void nlms_update(FilterState& state, double error, const StepSizeProfile& profile) {
    if (profile.order() != state.order()) {
        throw std::invalid_argument("step-size profile length does not match filter order");
    }
    if (!std::isfinite(error)) {
        throw std::invalid_argument("adaptation error must be finite");
    }
    double energy = 0.0;
    for (double d : state.delay_line) {
        energy += d * d;
    }
    const double scale = error / (profile.regularization_eps + energy);
    const std::size_t m = state.taps.size();
    for (std::size_t k = 0; k < m; ++k) {
        double t = state.taps[k] + profile.per_tap_mu[k] * scale * state.delay_line[k];
        state.taps[k] = (std::fabs(t) < kDenormalFloor) ? 0.0 : t;
    }
}

LpefStep lpef_step(FilterState& state, double x_now, const StepSizeProfile& profile) {
    if (!std::isfinite(x_now)) {
        throw std::invalid_argument("input sample must be finite");
    }
    const double prediction = filter_output(state);
    const double error = x_now - prediction;
    nlms_update(state, error, profile);
    push_sample(state, x_now);
    return LpefStep{prediction, error};
}

}  // namespace denoise
