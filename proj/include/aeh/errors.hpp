#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aeh {

// Malformed or out-of-range configuration. `field` names the offending entry
// using the dotted path that appears in config files (e.g. "beam.length").
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Malformed input data (e.g. a broken WAV file). `offset` is the byte
// position in the stream where the problem was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : std::runtime_error("byte " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace aeh
