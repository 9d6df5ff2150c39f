#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stegmatch {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

// Unsupported or lossy image format, or an unusable file layout.
class FormatError : public Error {
public:
    using Error::Error;
};

// Channel depth other than 8 bits.
class DepthError : public FormatError {
public:
    using FormatError::FormatError;
};

// File claims a supported format but cannot be decoded.
class DecodeError : public FormatError {
public:
    using FormatError::FormatError;
};

// Payload (plus header) does not fit the cover. Sizes are in bits.
class CapacityError : public Error {
public:
    CapacityError(std::uint64_t required_bits, std::uint64_t available_bits)
        : Error("capacity exceeded: need " + std::to_string(required_bits) +
                " bits, cover holds " + std::to_string(available_bits) + " bits"),
          required_bits_(required_bits),
          available_bits_(available_bits) {}

    std::uint64_t required_bits() const { return required_bits_; }
    std::uint64_t available_bits() const { return available_bits_; }

private:
    std::uint64_t required_bits_;
    std::uint64_t available_bits_;
};

// Stego image does not carry a consistent embedded stream.
class CorruptStegoError : public Error {
public:
    using Error::Error;
};

// Bit sequence violates a stream precondition (length, header width, range).
class StreamError : public Error {
public:
    using Error::Error;
};

// Image dimensions differ where they must match.
class ShapeError : public Error {
public:
    using Error::Error;
};

}  // namespace stegmatch
