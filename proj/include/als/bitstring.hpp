#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "als/natural.hpp"

namespace als {

// Fixed-length sequence of bits. Bit 0 is the leftmost (most significant)
// bit; byte serialization is MSB-first within each byte and the final byte
// is zero-padded. Zero-length strings are valid. Immutable in spirit: all
// operations that "modify" are only used while building a value.
class BitString {
public:
    BitString() = default;

    // len zero bits.
    explicit BitString(size_t len) : len_(len), data_((len + 7) / 8, 0) {}

    // Parse from a literal like "01101". Throws on other characters.
    explicit BitString(std::string_view bits);

    size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(size_t i) const;
    void set(size_t i, bool b);

    void push_back(bool b);
    void append(const BitString& other);

    BitString slice(size_t pos, size_t len) const;

    // Little helpers for fixed-width integer fields inside labels.
    uint64_t read_u64(size_t pos, size_t width) const;
    void write_u64(size_t pos, size_t width, uint64_t value);

    // Big-endian interpretation of the whole string.
    Natural to_natural() const;
    static BitString from_natural(const Natural& value, size_t width);
    static BitString from_u64(uint64_t value, size_t width);

    // Byte serialization (MSB-first, zero-padded final byte).
    const std::vector<uint8_t>& bytes() const { return data_; }
    static BitString from_bytes(const std::vector<uint8_t>& bytes, size_t bit_len);
    static BitString from_bytes(const uint8_t* bytes, size_t byte_len, size_t bit_len);

    std::string to_string() const;

    bool operator==(const BitString& other) const {
        return len_ == other.len_ && data_ == other.data_;
    }
    bool operator!=(const BitString& other) const { return !(*this == other); }

private:
    size_t len_ = 0;
    std::vector<uint8_t> data_;
};

// Sequential reader over a BitString. Reads past the end throw.
class BitCursor {
public:
    explicit BitCursor(const BitString& target, size_t position = 0);

    bool read_bit();
    uint64_t read_u64(size_t width);
    BitString read_bits(size_t len);
    void skip(size_t len);

    size_t position() const { return pos_; }
    size_t remaining() const;

private:
    const BitString* target_;
    size_t pos_;
};

// Number of maximal blocks of equal consecutive bits; 0 for the empty string.
size_t count_runs(const BitString& s);

}  // namespace als
