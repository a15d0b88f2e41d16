#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pace/error.hpp"

namespace pace {

/// MSB-first bit writer backing the codec payload format.
class BitWriter {
public:
    void put_bit(unsigned b) {
        if (fill_ == 0) {
            bytes_.push_back(0);
            fill_ = 8;
        }
        --fill_;
        if (b) bytes_.back() |= static_cast<std::uint8_t>(1u << fill_);
    }

    void put_bits(std::uint32_t v, unsigned n) {
        for (unsigned i = n; i-- > 0;) put_bit((v >> i) & 1u);
    }

    /// Exp-Golomb code for v >= 0: the binary form of v+1 (N bits) is
    /// preceded by N-1 zeros. A canonical prefix code over the naturals.
    void put_ue(std::uint32_t v) {
        std::uint64_t x = static_cast<std::uint64_t>(v) + 1;
        unsigned n = 0;
        while ((x >> n) > 1) ++n; // n = floor(log2(x))
        for (unsigned i = 0; i < n; ++i) put_bit(0);
        for (unsigned i = n + 1; i-- > 0;) put_bit((x >> i) & 1u);
    }

    /// Signed mapping: 1 -> 1, -1 -> 2, 2 -> 3, -2 -> 4, ... (0 -> 0).
    void put_se(std::int32_t v) {
        std::uint32_t u = v > 0 ? static_cast<std::uint32_t>(2 * v - 1)
                                : static_cast<std::uint32_t>(-2 * static_cast<std::int64_t>(v));
        put_ue(u);
    }

    std::size_t bit_size() const { return bytes_.size() * 8 - fill_; }
    std::size_t byte_size() const { return bytes_.size(); }

    /// Finish the stream; trailing bits of the last byte stay zero.
    std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    unsigned fill_ = 0; // free bits in the last byte
};

/// MSB-first reader; throws on exhaustion so truncated payloads surface
/// as explicit decode errors.
class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    unsigned get_bit() {
        std::size_t byte = pos_ >> 3;
        if (byte >= bytes_.size()) throw Error("bitstream exhausted");
        unsigned b = (bytes_[byte] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return b;
    }

    std::uint32_t get_bits(unsigned n) {
        std::uint32_t v = 0;
        for (unsigned i = 0; i < n; ++i) v = (v << 1) | get_bit();
        return v;
    }

    std::uint32_t get_ue() {
        unsigned zeros = 0;
        while (get_bit() == 0) {
            if (++zeros > 32) throw Error("bitstream: exp-golomb prefix too long");
        }
        std::uint64_t x = 1;
        for (unsigned i = 0; i < zeros; ++i) x = (x << 1) | get_bit();
        return static_cast<std::uint32_t>(x - 1);
    }

    std::int32_t get_se() {
        std::uint32_t u = get_ue();
        if (u == 0) return 0;
        return (u & 1u) ? static_cast<std::int32_t>((u + 1) / 2)
                        : -static_cast<std::int32_t>(u / 2);
    }

    std::size_t bit_pos() const { return pos_; }
    std::size_t bits_left() const { return bytes_.size() * 8 - pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

} // namespace pace
