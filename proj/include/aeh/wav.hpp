#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aeh {

// Mono audio buffer; multi-channel sources are downmixed by averaging.
// Samples are scaled by the source type's maximum magnitude (16-bit: /32768)
// and therefore lie in [-1, 1].
struct AudioClip {
    int sample_rate = 0;          // Hz
    std::vector<double> samples;
};

// Parses a RIFF/WAVE stream holding integer PCM (format tag 1) at 8, 16 or
// 24 bits, mono or stereo. Anything else raises ParseError with the byte
// offset where the problem was found.
AudioClip load_wav(std::istream& in);
AudioClip load_wav_file(const std::string& path);

}  // namespace aeh
