#ifndef LEVRECON_WORD_HPP
#define LEVRECON_WORD_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "levrecon/errors.hpp"

namespace levrecon {

inline constexpr int kMaxWordLength = 512;
inline constexpr int kWordBlocks = kMaxWordLength / 64;

/// Fixed-length binary word. Coordinates are 1-based; coordinate 1 is the
/// leftmost symbol of the ASCII serialization. Bits are packed LSB-first
/// into 64-bit blocks, so coordinate i lives at block (i-1)/64, bit (i-1)%64.
class Word {
public:
    Word() = default; // length 0; only useful as a placeholder

    explicit Word(int n) : len_(check_length(n)) {}

    static Word zeros(int n) { return Word(n); }

    static Word ones(int n) {
        Word w(n);
        for (int b = 0; b < w.block_count(); ++b) w.bits_[b] = ~0ULL;
        w.trim();
        return w;
    }

    /// Unit word e_i: 1 in coordinate i, zeros elsewhere.
    static Word unit(int n, int i) {
        Word w(n);
        w.set(i, true);
        return w;
    }

    static Word from_string(std::string_view s);
    static Word from_support(int n, std::span<const int> support);

    /// Interprets the low n bits of v with coordinate 1 as the MOST
    /// significant bit, matching ASCII order. Requires n <= 64.
    static Word from_uint_msb(int n, std::uint64_t v);
    std::uint64_t to_uint_msb() const;

    int length() const { return len_; }
    int block_count() const { return (len_ + 63) / 64; }
    std::uint64_t block(int b) const { return bits_[static_cast<std::size_t>(b)]; }

    bool get(int i) const {
        check_index(i);
        return (bits_[static_cast<std::size_t>((i - 1) >> 6)] >> ((i - 1) & 63)) & 1ULL;
    }
    void set(int i, bool v) {
        check_index(i);
        const std::uint64_t mask = 1ULL << ((i - 1) & 63);
        auto& blk = bits_[static_cast<std::size_t>((i - 1) >> 6)];
        blk = v ? (blk | mask) : (blk & ~mask);
    }
    void flip(int i) {
        check_index(i);
        bits_[static_cast<std::size_t>((i - 1) >> 6)] ^= 1ULL << ((i - 1) & 63);
    }

    int weight() const {
        int w = 0;
        for (int b = 0; b < block_count(); ++b) w += std::popcount(bits_[static_cast<std::size_t>(b)]);
        return w;
    }

    Word& operator^=(const Word& o) {
        check_same_length(o);
        for (int b = 0; b < block_count(); ++b) bits_[static_cast<std::size_t>(b)] ^= o.bits_[static_cast<std::size_t>(b)];
        return *this;
    }
    Word operator^(const Word& o) const {
        Word r = *this;
        r ^= o;
        return r;
    }

    bool operator==(const Word& o) const {
        if (len_ != o.len_) return false;
        for (int b = 0; b < block_count(); ++b)
            if (bits_[static_cast<std::size_t>(b)] != o.bits_[static_cast<std::size_t>(b)]) return false;
        return true;
    }

    /// Lexicographic by serialization: the first differing coordinate
    /// decides, '0' < '1'.
    std::strong_ordering operator<=>(const Word& o) const {
        if (len_ != o.len_) return len_ <=> o.len_;
        for (int b = 0; b < block_count(); ++b) {
            const std::uint64_t diff = bits_[static_cast<std::size_t>(b)] ^ o.bits_[static_cast<std::size_t>(b)];
            if (diff) {
                const int bit = std::countr_zero(diff);
                const bool mine = (bits_[static_cast<std::size_t>(b)] >> bit) & 1ULL;
                return mine ? std::strong_ordering::greater : std::strong_ordering::less;
            }
        }
        return std::strong_ordering::equal;
    }

    std::string to_string() const;
    std::vector<int> support() const;

    friend int distance(const Word& x, const Word& y);

private:
    static int check_length(int n) {
        if (n < 1 || n > kMaxWordLength)
            throw precondition_error("word length must be in [1, " + std::to_string(kMaxWordLength) + "]");
        return n;
    }
    void check_index(int i) const {
        if (i < 1 || i > len_) throw precondition_error("coordinate index out of range");
    }
    void check_same_length(const Word& o) const {
        if (len_ != o.len_) throw precondition_error("word length mismatch");
    }
    void trim() {
        const int rem = len_ & 63;
        if (rem) bits_[static_cast<std::size_t>(block_count() - 1)] &= (~0ULL >> (64 - rem));
    }

    int len_ = 0;
    std::array<std::uint64_t, kWordBlocks> bits_{};
};

inline int weight(const Word& w) { return w.weight(); }

inline int distance(const Word& x, const Word& y) {
    x.check_same_length(y);
    int d = 0;
    for (int b = 0; b < x.block_count(); ++b)
        d += std::popcount(x.bits_[static_cast<std::size_t>(b)] ^ y.bits_[static_cast<std::size_t>(b)]);
    return d;
}

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(w.length());
        for (int b = 0; b < w.block_count(); ++b) {
            h ^= w.block(b) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Set of coordinates, a subset of [1, n]. Stored sorted; duplicates are
/// rejected at construction.
class CoordSet {
public:
    CoordSet() = default;
    CoordSet(int n, std::vector<int> indices);

    int universe() const { return n_; }
    int size() const { return static_cast<int>(indices_.size()); }
    bool empty() const { return indices_.empty(); }
    const std::vector<int>& indices() const { return indices_; }
    bool contains(int i) const;

    /// Indicator word s with supp(s) = this set.
    Word indicator() const;

private:
    int n_ = 0;
    std::vector<int> indices_;
};

CoordSet support_set(const Word& w);

} // namespace levrecon

#endif
