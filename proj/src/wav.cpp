#include "aeh/wav.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include "aeh/errors.hpp"

namespace aeh {
namespace {

// Sequential little-endian reader that tracks the absolute byte offset so
// parse errors can point at the exact spot.
class ByteReader {
public:
    explicit ByteReader(std::istream& in) : in_(in) {}

    std::size_t offset() const noexcept { return offset_; }

    void read(void* dst, std::size_t n, const std::string& what) {
        in_.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
        const std::size_t got = static_cast<std::size_t>(in_.gcount());
        if (got < n)
            throw ParseError(offset_, "truncated " + what + ": expected " +
                                          std::to_string(n) + " bytes, got " +
                                          std::to_string(got));
        offset_ += n;
    }

    void skip(std::size_t n, const std::string& what) {
        in_.ignore(static_cast<std::streamsize>(n));
        const std::size_t got = static_cast<std::size_t>(in_.gcount());
        if (got < n)
            throw ParseError(offset_, "truncated " + what + ": expected " +
                                          std::to_string(n) + " bytes, got " +
                                          std::to_string(got));
        offset_ += n;
    }

    std::uint16_t u16(const std::string& what) {
        unsigned char b[2];
        read(b, 2, what);
        return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
    }

    std::uint32_t u32(const std::string& what) {
        unsigned char b[4];
        read(b, 4, what);
        return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
               (static_cast<std::uint32_t>(b[2]) << 16) |
               (static_cast<std::uint32_t>(b[3]) << 24);
    }

    bool at_eof() {
        return in_.peek() == std::char_traits<char>::eof();
    }

private:
    std::istream& in_;
    std::size_t offset_ = 0;
};

struct FormatChunk {
    std::uint16_t format = 0;
    std::uint16_t channels = 0;
    std::uint32_t sample_rate = 0;
    std::uint16_t bits_per_sample = 0;
};

double decode_sample(const unsigned char* frame, int bits) {
    switch (bits) {
        case 8:
            // 8-bit WAV is unsigned with midpoint 128.
            return (static_cast<int>(frame[0]) - 128) / 128.0;
        case 16: {
            const std::int16_t v = static_cast<std::int16_t>(frame[0] | (frame[1] << 8));
            return v / 32768.0;
        }
        default: {  // 24
            std::int32_t v = frame[0] | (frame[1] << 8) | (frame[2] << 16);
            if (v & 0x800000) v -= 0x1000000;  // sign-extend
            return v / 8388608.0;
        }
    }
}

}  // namespace

AudioClip load_wav(std::istream& in) {
    ByteReader reader(in);

    char tag[4];
    reader.read(tag, 4, "RIFF header");
    if (std::memcmp(tag, "RIFF", 4) != 0)
        throw ParseError(0, "not a RIFF container (missing 'RIFF' tag)");
    reader.u32("RIFF size");
    const std::size_t form_offset = reader.offset();
    reader.read(tag, 4, "form type");
    if (std::memcmp(tag, "WAVE", 4) != 0)
        throw ParseError(form_offset, "not a WAVE file (missing 'WAVE' form type)");

    FormatChunk fmt;
    bool have_fmt = false;

    // Walk chunks until the data chunk; anything else is skipped (chunks are
    // word-aligned, so odd sizes carry a pad byte).
    for (;;) {
        if (reader.at_eof())
            throw ParseError(reader.offset(), "missing 'data' chunk");
        const std::size_t chunk_offset = reader.offset();
        reader.read(tag, 4, "chunk id");
        const std::uint32_t chunk_size = reader.u32("chunk size");

        if (std::memcmp(tag, "fmt ", 4) == 0) {
            if (chunk_size < 16)
                throw ParseError(chunk_offset, "format chunk too small (" +
                                                   std::to_string(chunk_size) + " bytes)");
            fmt.format = reader.u16("format tag");
            fmt.channels = reader.u16("channel count");
            fmt.sample_rate = reader.u32("sample rate");
            reader.u32("byte rate");
            reader.u16("block align");
            fmt.bits_per_sample = reader.u16("bits per sample");
            if (chunk_size > 16) reader.skip(chunk_size - 16, "format chunk extension");

            if (fmt.format != 1)
                throw ParseError(chunk_offset,
                                 "unsupported format tag " + std::to_string(fmt.format) +
                                     " (only integer PCM is supported)");
            if (fmt.channels < 1 || fmt.channels > 2)
                throw ParseError(chunk_offset, "unsupported channel count " +
                                                   std::to_string(fmt.channels) +
                                                   " (mono or stereo only)");
            if (fmt.bits_per_sample != 8 && fmt.bits_per_sample != 16 &&
                fmt.bits_per_sample != 24)
                throw ParseError(chunk_offset, "unsupported bit depth " +
                                                   std::to_string(fmt.bits_per_sample) +
                                                   " (8, 16 or 24 expected)");
            if (fmt.sample_rate == 0)
                throw ParseError(chunk_offset, "sample rate must be positive");
            have_fmt = true;
        } else if (std::memcmp(tag, "data", 4) == 0) {
            if (!have_fmt)
                throw ParseError(chunk_offset, "'data' chunk before 'fmt ' chunk");
            if (chunk_size == 0)
                throw ParseError(chunk_offset, "empty 'data' chunk");

            const std::size_t frame_size =
                static_cast<std::size_t>(fmt.channels) * (fmt.bits_per_sample / 8);
            if (chunk_size % frame_size != 0)
                throw ParseError(chunk_offset,
                                 "data size " + std::to_string(chunk_size) +
                                     " is not a multiple of the frame size " +
                                     std::to_string(frame_size));

            std::vector<unsigned char> raw(chunk_size);
            reader.read(raw.data(), raw.size(), "'data' chunk payload");

            const std::size_t frames = chunk_size / frame_size;
            const std::size_t bytes_per_sample = fmt.bits_per_sample / 8;
            AudioClip clip;
            clip.sample_rate = static_cast<int>(fmt.sample_rate);
            clip.samples.resize(frames);
            for (std::size_t i = 0; i < frames; ++i) {
                const unsigned char* frame = raw.data() + i * frame_size;
                double acc = 0.0;
                for (std::uint16_t c = 0; c < fmt.channels; ++c)
                    acc += decode_sample(frame + c * bytes_per_sample,
                                         fmt.bits_per_sample);
                clip.samples[i] = acc / fmt.channels;
            }
            return clip;
        } else {
            reader.skip(chunk_size, "chunk payload");
        }
        if (chunk_size % 2 == 1 && !reader.at_eof()) reader.skip(1, "chunk pad byte");
    }
}

AudioClip load_wav_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return load_wav(in);
}

}  // namespace aeh
