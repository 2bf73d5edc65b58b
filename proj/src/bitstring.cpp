#include "als/bitstring.hpp"

#include <stdexcept>

namespace als {

BitString::BitString(std::string_view bits) : len_(bits.size()), data_((bits.size() + 7) / 8, 0) {
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            data_[i >> 3] |= uint8_t(0x80u >> (i & 7));
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitString: expected '0' or '1'");
        }
    }
}

bool BitString::get(size_t i) const {
    if (i >= len_) throw std::out_of_range("BitString::get: index past end");
    return (data_[i >> 3] >> (7 - (i & 7))) & 1u;
}

void BitString::set(size_t i, bool b) {
    if (i >= len_) throw std::out_of_range("BitString::set: index past end");
    uint8_t mask = uint8_t(0x80u >> (i & 7));
    if (b)
        data_[i >> 3] |= mask;
    else
        data_[i >> 3] &= uint8_t(~mask);
}

void BitString::push_back(bool b) {
    if ((len_ & 7) == 0) data_.push_back(0);
    ++len_;
    if (b) set(len_ - 1, true);
}

void BitString::append(const BitString& other) {
    if ((len_ & 7) == 0) {
        // Byte-aligned fast path.
        data_.insert(data_.end(), other.data_.begin(), other.data_.end());
        len_ += other.len_;
        return;
    }
    for (size_t i = 0; i < other.len_; ++i) push_back(other.get(i));
}

BitString BitString::slice(size_t pos, size_t len) const {
    if (pos + len > len_) throw std::out_of_range("BitString::slice: range past end");
    BitString out(len);
    for (size_t i = 0; i < len; ++i) out.set(i, get(pos + i));
    return out;
}

uint64_t BitString::read_u64(size_t pos, size_t width) const {
    if (width > 64) throw std::invalid_argument("BitString::read_u64: width > 64");
    if (pos + width > len_) throw std::out_of_range("BitString::read_u64: range past end");
    uint64_t v = 0;
    for (size_t i = 0; i < width; ++i) v = (v << 1) | uint64_t(get(pos + i));
    return v;
}

void BitString::write_u64(size_t pos, size_t width, uint64_t value) {
    if (width > 64) throw std::invalid_argument("BitString::write_u64: width > 64");
    if (pos + width > len_) throw std::out_of_range("BitString::write_u64: range past end");
    if (width < 64 && (value >> width) != 0)
        throw std::invalid_argument("BitString::write_u64: value too wide");
    for (size_t i = 0; i < width; ++i) set(pos + i, (value >> (width - 1 - i)) & 1u);
}

Natural BitString::to_natural() const {
    Natural v = 0;
    for (uint8_t byte : data_) {
        v <<= 8;
        v |= byte;
    }
    size_t pad = data_.size() * 8 - len_;
    v >>= pad;
    return v;
}

BitString BitString::from_natural(const Natural& value, size_t width) {
    if (bit_length(value) > width)
        throw std::invalid_argument("BitString::from_natural: value too wide");
    BitString out(width);
    for (size_t i = 0; i < width; ++i)
        if (boost::multiprecision::bit_test(value, unsigned(width - 1 - i))) out.set(i, true);
    return out;
}

BitString BitString::from_u64(uint64_t value, size_t width) {
    if (width < 64 && (value >> width) != 0)
        throw std::invalid_argument("BitString::from_u64: value too wide");
    BitString out(width);
    out.write_u64(0, width, value);
    return out;
}

BitString BitString::from_bytes(const std::vector<uint8_t>& bytes, size_t bit_len) {
    return from_bytes(bytes.data(), bytes.size(), bit_len);
}

BitString BitString::from_bytes(const uint8_t* bytes, size_t byte_len, size_t bit_len) {
    if ((bit_len + 7) / 8 != byte_len)
        throw std::invalid_argument("BitString::from_bytes: length mismatch");
    BitString out(bit_len);
    out.data_.assign(bytes, bytes + byte_len);
    // Mask padding so equality stays structural.
    if (bit_len & 7) out.data_.back() &= uint8_t(0xffu << (8 - (bit_len & 7)));
    return out;
}

std::string BitString::to_string() const {
    std::string s(len_, '0');
    for (size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitCursor::BitCursor(const BitString& target, size_t position) : target_(&target), pos_(position) {
    if (position > target.size()) throw std::out_of_range("BitCursor: position past end");
}

bool BitCursor::read_bit() {
    if (pos_ >= target_->size()) throw std::out_of_range("BitCursor: read past end");
    return target_->get(pos_++);
}

uint64_t BitCursor::read_u64(size_t width) {
    uint64_t v = target_->read_u64(pos_, width);
    pos_ += width;
    return v;
}

BitString BitCursor::read_bits(size_t len) {
    BitString out = target_->slice(pos_, len);
    pos_ += len;
    return out;
}

void BitCursor::skip(size_t len) {
    if (pos_ + len > target_->size()) throw std::out_of_range("BitCursor: skip past end");
    pos_ += len;
}

size_t BitCursor::remaining() const { return target_->size() - pos_; }

size_t count_runs(const BitString& s) {
    if (s.empty()) return 0;
    size_t runs = 1;
    bool prev = s.get(0);
    for (size_t i = 1; i < s.size(); ++i) {
        bool cur = s.get(i);
        if (cur != prev) ++runs;
        prev = cur;
    }
    return runs;
}

}  // namespace als
