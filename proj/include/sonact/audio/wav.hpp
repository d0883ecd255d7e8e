#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace sonact::audio {

struct Waveform {
  std::vector<double> samples;  // amplitudes in [-1, 1]
  int sample_rate = 0;

  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

// Decodes a RIFF/WAVE container holding mono 16-bit PCM. Samples are
// normalized by 32768. Throws std::runtime_error on malformed headers,
// non-PCM or non-16-bit encodings, and multi-channel input.
Waveform decode_wav(const std::vector<std::uint8_t>& bytes);

// Encodes mono 16-bit PCM. Samples are clamped to [-1, 1] and quantized
// with round-to-nearest at 32767 full scale.
std::vector<std::uint8_t> encode_wav(const Waveform& w);

Waveform read_wav_file(const std::filesystem::path& path);
void write_wav_file(const std::filesystem::path& path, const Waveform& w);

}  // namespace sonact::audio
