#include "levrecon/ball.hpp"

#include <array>

namespace levrecon {

std::vector<Word> ball(const Word& c, int t, std::size_t max_words) {
    const Bigint volume = ball_volume(c.length(), t);
    if (volume > Bigint(static_cast<unsigned long>(max_words)))
        throw budget_error("ball too large to materialize");
    std::vector<Word> words;
    words.reserve(volume.get_ui());
    for_each_in_ball(c, t, [&](const Word& w) { words.push_back(w); });
    return words;
}

BallSampler::BallSampler(int n, int t) : n_(n), t_(t) {
    if (n < 1 || n > kMaxWordLength || t < 0 || t > n)
        throw precondition_error("BallSampler requires 1 <= n <= 512 and 0 <= t <= n");
    const Bigint volume = ball_volume(n, t);
    cdf_.reserve(static_cast<std::size_t>(t) + 1);
    Bigint cumulative = 0;
    for (int r = 0; r <= t; ++r) {
        cumulative += binomial(n, r);
        cdf_.push_back(to_double(Rational(cumulative, volume)));
    }
    cdf_.back() = 1.0;
}

int BallSampler::sample_weight(Rng& rng) const {
    const double u = rng.next_double();
    int lo = 0, hi = t_;
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (u < cdf_[static_cast<std::size_t>(mid)])
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

Word BallSampler::sample(const Word& center, Rng& rng) const {
    if (center.length() != n_) throw precondition_error("center length mismatch");
    const int r = sample_weight(rng);
    Word w = center;
    // partial Fisher-Yates over coordinate indices
    std::array<std::uint16_t, kMaxWordLength> coords;
    for (int i = 0; i < n_; ++i) coords[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i + 1);
    for (int j = 0; j < r; ++j) {
        const auto pick = j + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_ - j)));
        std::swap(coords[static_cast<std::size_t>(j)], coords[static_cast<std::size_t>(pick)]);
        w.flip(coords[static_cast<std::size_t>(j)]);
    }
    return w;
}

Word sample_ball_uniform(const Word& c, int t, Rng& rng) {
    return BallSampler(c.length(), t).sample(c, rng);
}

} // namespace levrecon
