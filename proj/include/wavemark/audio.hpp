#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavemark/errors.hpp"

namespace wavemark {

// Mono 8-bit PCM. Samples are signed in memory; the WAV container stores
// them unsigned with a +128 bias per the RIFF spec.
struct PcmAudio {
  static constexpr int channels = 1;

  std::uint32_t sample_rate = 8000;
  std::vector<std::int8_t> samples;

  bool operator==(const PcmAudio&) const = default;
};

// RIFF WAVE, PCM format tag 1, mono, 8 bits per sample. Anything else is
// rejected with a descriptive error. Round trips are bit-exact.
PcmAudio load_wav(const std::string& path);
void save_wav(const PcmAudio& audio, const std::string& path);

}  // namespace wavemark
