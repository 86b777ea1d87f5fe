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

#include <filesystem>
#include <stdexcept>

#include "denoise/signals.hpp"

namespace denoise {

// Malformed or unsupported WAV input/output. The message names the
// offending feature (e.g. channel count, format tag, bit depth).
struct WavError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Read a RIFF/WAVE file. Only PCM (format 1), 16-bit, mono is accepted;
// anything else raises WavError. Samples map to [-1, 1) via 1/32768.
Signal read_wav(const std::filesystem::path& path);

// Write PCM16 mono. Samples are scaled by 32768, rounded, and clamped to
// the int16 range; the return value counts samples that had to be clamped
// (nonzero means the signal exceeded [-1, 1]).
std::size_t write_wav(const std::filesystem::path& path, const Signal& signal);

}  // namespace denoise
