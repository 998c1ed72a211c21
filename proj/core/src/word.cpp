#include "levrecon/word.hpp"

#include <algorithm>

namespace levrecon {

Word Word::from_string(std::string_view s) {
    Word w(static_cast<int>(s.size()));
    for (int i = 1; i <= w.len_; ++i) {
        const char c = s[static_cast<std::size_t>(i - 1)];
        if (c == '1')
            w.set(i, true);
        else if (c != '0')
            throw precondition_error("word string must contain only '0'/'1'");
    }
    return w;
}

Word Word::from_support(int n, std::span<const int> support) {
    Word w(n);
    for (int i : support) w.set(i, true);
    return w;
}

Word Word::from_uint_msb(int n, std::uint64_t v) {
    if (n < 1 || n > 64) throw precondition_error("from_uint_msb requires 1 <= n <= 64");
    if (n < 64 && (v >> n) != 0) throw precondition_error("value has bits beyond length n");
    Word w(n);
    for (int i = 1; i <= n; ++i)
        if ((v >> (n - i)) & 1ULL) w.set(i, true);
    return w;
}

std::uint64_t Word::to_uint_msb() const {
    if (len_ > 64) throw precondition_error("to_uint_msb requires n <= 64");
    std::uint64_t v = 0;
    for (int i = 1; i <= len_; ++i) v = (v << 1) | (get(i) ? 1ULL : 0ULL);
    return v;
}

std::string Word::to_string() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (int i = 1; i <= len_; ++i)
        if (get(i)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

std::vector<int> Word::support() const {
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(weight()));
    for (int b = 0; b < block_count(); ++b) {
        std::uint64_t blk = bits_[static_cast<std::size_t>(b)];
        while (blk) {
            const int bit = std::countr_zero(blk);
            idx.push_back(b * 64 + bit + 1);
            blk &= blk - 1;
        }
    }
    return idx;
}

CoordSet::CoordSet(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices)) {
    if (n < 0 || n > kMaxWordLength) throw precondition_error("coordinate universe out of range");
    std::sort(indices_.begin(), indices_.end());
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 1 || indices_[i] > n_) throw precondition_error("coordinate outside [1, n]");
        if (i > 0 && indices_[i] == indices_[i - 1]) throw precondition_error("duplicate coordinate");
    }
}

bool CoordSet::contains(int i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

Word CoordSet::indicator() const {
    Word s(n_);
    for (int i : indices_) s.set(i, true);
    return s;
}

CoordSet support_set(const Word& w) { return CoordSet(w.length(), w.support()); }

} // namespace levrecon
