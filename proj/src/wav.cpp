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
#include "denoise/wav.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

namespace denoise {

namespace {

constexpr std::uint16_t kFormatPcm = 1;

std::uint16_t read_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void write_u16(std::ofstream& out, std::uint16_t v) {
    const unsigned char b[2] = {static_cast<unsigned char>(v & 0xff),
                                static_cast<unsigned char>((v >> 8) & 0xff)};
    out.write(reinterpret_cast<const char*>(b), 2);
}

void write_u32(std::ofstream& out, std::uint32_t v) {
    const unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                                static_cast<unsigned char>((v >> 8) & 0xff),
                                static_cast<unsigned char>((v >> 16) & 0xff),
                                static_cast<unsigned char>((v >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

Signal read_wav(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw WavError("cannot open WAV file: " + path.string());
    }

    unsigned char riff[12];
    if (!in.read(reinterpret_cast<char*>(riff), sizeof riff)) {
        throw WavError("malformed WAV header: file shorter than RIFF header");
    }
    if (std::memcmp(riff, "RIFF", 4) != 0 || std::memcmp(riff + 8, "WAVE", 4) != 0) {
        throw WavError("not a RIFF/WAVE file: " + path.string());
    }

    bool have_fmt = false;
    std::uint16_t channels = 0, bits = 0, format = 0;
    std::uint32_t rate = 0;
    std::vector<char> data;
    bool have_data = false;

    unsigned char chunk[8];
    while (in.read(reinterpret_cast<char*>(chunk), sizeof chunk)) {
        const std::uint32_t size = read_u32(chunk + 4);
        if (std::memcmp(chunk, "fmt ", 4) == 0) {
            if (size < 16) {
                throw WavError("malformed fmt chunk: shorter than 16 bytes");
            }
            std::array<unsigned char, 16> fmt;
            if (!in.read(reinterpret_cast<char*>(fmt.data()), fmt.size())) {
                throw WavError("malformed fmt chunk: truncated");
            }
            format = read_u16(fmt.data() + 0);
            channels = read_u16(fmt.data() + 2);
            rate = read_u32(fmt.data() + 4);
            bits = read_u16(fmt.data() + 14);
            in.seekg(size - 16 + (size & 1u), std::ios::cur);
            have_fmt = true;
        } else if (std::memcmp(chunk, "data", 4) == 0) {
            data.resize(size);
            if (!in.read(data.data(), size)) {
                throw WavError("malformed data chunk: truncated");
            }
            if (size & 1u) {
                in.seekg(1, std::ios::cur);
            }
            have_data = true;
        } else {
            in.seekg(size + (size & 1u), std::ios::cur);
        }
    }

    if (!have_fmt) {
        throw WavError("malformed WAV file: missing fmt chunk");
    }
    if (!have_data) {
        throw WavError("malformed WAV file: missing data chunk");
    }
    if (format != kFormatPcm) {
        throw WavError("unsupported WAV format tag " + std::to_string(format) +
                       " (only PCM, tag 1, is supported)");
    }
    if (channels != 1) {
        throw WavError("unsupported channel count " + std::to_string(channels) +
                       " (only mono is supported)");
    }
    if (bits != 16) {
        throw WavError("unsupported bit depth " + std::to_string(bits) +
                       " (only 16-bit is supported)");
    }
    if (rate == 0) {
        throw WavError("malformed fmt chunk: zero sample rate");
    }

    Signal out;
    out.sample_rate = static_cast<int>(rate);
    const std::size_t n = data.size() / 2;
    out.samples.resize(n);
    const auto* raw = reinterpret_cast<const unsigned char*>(data.data());
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::int16_t>(read_u16(raw + 2 * i));
        out.samples[i] = static_cast<double>(v) / 32768.0;
    }
    return out;
}

std::size_t write_wav(const std::filesystem::path& path, const Signal& signal) {
    if (signal.sample_rate <= 0) {
        throw std::invalid_argument("sample rate must be > 0");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw WavError("cannot open WAV file for writing: " + path.string());
    }

    const auto n = static_cast<std::uint32_t>(signal.size());
    const std::uint32_t data_bytes = n * 2;
    const auto rate = static_cast<std::uint32_t>(signal.sample_rate);

    out.write("RIFF", 4);
    write_u32(out, 36 + data_bytes);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    write_u32(out, 16);
    write_u16(out, kFormatPcm);
    write_u16(out, 1);            // mono
    write_u32(out, rate);
    write_u32(out, rate * 2);     // byte rate
    write_u16(out, 2);            // block align
    write_u16(out, 16);           // bits per sample
    out.write("data", 4);
    write_u32(out, data_bytes);

    std::size_t clipped = 0;
    for (double s : signal.samples) {
        auto q = std::llround(s * 32768.0);
        if (q > 32767) {
            q = 32767;
            ++clipped;
        } else if (q < -32768) {
            q = -32768;
            ++clipped;
        }
        write_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    }
    out.flush();
    if (!out) {
        throw WavError("failed writing WAV file: " + path.string());
    }
    return clipped;
}

}  // namespace denoise
