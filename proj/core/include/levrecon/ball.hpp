#ifndef LEVRECON_BALL_HPP
#define LEVRECON_BALL_HPP

#include <vector>

#include "levrecon/math.hpp"
#include "levrecon/rng.hpp"
#include "levrecon/word.hpp"

namespace levrecon {

/// Visits every word of B_t(c) exactly once in weight-then-lexicographic
/// order: flip sets of size 0, 1, ..., t, and within one size the flip
/// coordinate sets in lexicographic order ({1} < {2} < ... < {1,2} < {1,3}).
/// The callback may return void, or bool where false stops the walk.
template <typename F>
void for_each_in_ball(const Word& c, int t, F&& f) {
    const int n = c.length();
    if (t < 0 || t > n) throw precondition_error("ball radius must satisfy 0 <= t <= n");

    auto emit = [&](const Word& w) -> bool {
        if constexpr (std::is_void_v<decltype(f(w))>) {
            f(w);
            return true;
        } else {
            return f(w);
        }
    };

    if (!emit(c)) return;
    std::vector<int> idx;
    for (int r = 1; r <= t; ++r) {
        idx.resize(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
        Word w = c;
        for (int i : idx) w.flip(i);
        for (;;) {
            if (!emit(w)) return;
            // advance to the next r-combination in lexicographic order
            int pos = r - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - (r - 1 - pos)) --pos;
            if (pos < 0) break;
            w.flip(idx[static_cast<std::size_t>(pos)]);
            ++idx[static_cast<std::size_t>(pos)];
            w.flip(idx[static_cast<std::size_t>(pos)]);
            for (int j = pos + 1; j < r; ++j) {
                w.flip(idx[static_cast<std::size_t>(j)]);
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                w.flip(idx[static_cast<std::size_t>(j)]);
            }
        }
    }
}

/// Materialized B_t(c) in enumeration order. Guarded so a careless call
/// cannot try to hold 2^100 words.
std::vector<Word> ball(const Word& c, int t, std::size_t max_words = 1u << 26);

/// Uniform sampling over B_t(c): draw a distance r with probability
/// C(n,r)/V(n,t), then flip a uniform r-subset of coordinates. The weight
/// CDF is computed once from exact rationals.
class BallSampler {
public:
    BallSampler(int n, int t);

    int length() const { return n_; }
    int radius() const { return t_; }

    Word sample(const Word& center, Rng& rng) const;
    int sample_weight(Rng& rng) const;

private:
    int n_;
    int t_;
    std::vector<double> cdf_;
};

Word sample_ball_uniform(const Word& c, int t, Rng& rng);

} // namespace levrecon

#endif
