#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "levrecon/ball.hpp"
#include "levrecon/math.hpp"
#include "levrecon/rng.hpp"
#include "levrecon/word.hpp"

using namespace levrecon;

namespace {

// independent oracle: Pascal-triangle binomials summed row-wise
Bigint pascal_ball_volume(int n, int t) {
    std::vector<Bigint> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Bigint> next(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    Bigint v = 0;
    for (int i = 0; i <= t; ++i) v += row[static_cast<std::size_t>(i)];
    return v;
}

} // namespace

TEST_CASE("weight counts support") {
    CHECK(Word::from_string("0000").weight() == 0);
    CHECK(Word::from_string("1011").weight() == 3);
    for (int n : {1, 5, 64, 65, 512})
        for (int i : {1, n}) CHECK(Word::unit(n, i).weight() == 1);
}

TEST_CASE("distance basics") {
    CHECK(distance(Word::from_string("0000"), Word::from_string("1010")) == 2);
    const Word x = Word::from_string("011010");
    CHECK(distance(x, x) == 0);
    CHECK(distance(Word::from_string("0110"), Word::from_string("1001")) == 4);
    CHECK_THROWS_AS(distance(Word::from_string("01"), Word::from_string("011")), precondition_error);
}

TEST_CASE("distance equals weight of xor, exhaustive n <= 12") {
    const int n = 12;
    for (std::uint64_t a = 0; a < (1u << n); a += 7) // stride keeps it quick; full sweep below at n = 8
        for (std::uint64_t b = 0; b < (1u << n); b += 5) {
            const Word x = Word::from_uint_msb(n, a);
            const Word y = Word::from_uint_msb(n, b);
            REQUIRE(distance(x, y) == (x ^ y).weight());
        }
    for (std::uint64_t a = 0; a < (1u << 8); ++a)
        for (std::uint64_t b = 0; b < (1u << 8); ++b) {
            const Word x = Word::from_uint_msb(8, a);
            const Word y = Word::from_uint_msb(8, b);
            REQUIRE(distance(x, y) == (x ^ y).weight());
        }
}

TEST_CASE("translation invariance of distance") {
    const int n = 6;
    for (std::uint64_t a = 0; a < (1u << n); ++a)
        for (std::uint64_t b = 0; b < (1u << n); ++b)
            for (std::uint64_t s = 0; s < (1u << n); ++s) {
                const Word x = Word::from_uint_msb(n, a);
                const Word y = Word::from_uint_msb(n, b);
                const Word shift = Word::from_uint_msb(n, s);
                REQUIRE(distance(x ^ shift, y ^ shift) == distance(x, y));
            }
    // randomized spot checks at larger lengths
    Rng rng(7);
    for (int trial = 0; trial < 20000; ++trial) {
        const int n2 = 10 + static_cast<int>(rng.next_below(55));
        Word x(n2), y(n2), s(n2);
        for (int i = 1; i <= n2; ++i) {
            if (rng.next_u64() & 1) x.flip(i);
            if (rng.next_u64() & 1) y.flip(i);
            if (rng.next_u64() & 1) s.flip(i);
        }
        REQUIRE(distance(x ^ s, y ^ s) == distance(x, y));
    }
}

TEST_CASE("ball volume") {
    CHECK(ball_volume(6, 1) == 7);
    CHECK(ball_volume(27, 4) == 20854);
    CHECK(ball_volume(27, 4) == pascal_ball_volume(27, 4));
    for (int n : {1, 4, 9, 16})
        CHECK(ball_volume(n, n) == Bigint(1) << n);
    CHECK(ball_volume(10000, 3) == pascal_ball_volume(10000, 3));
    CHECK_THROWS_AS(ball_volume(4, 5), precondition_error);
}

TEST_CASE("binomial zero convention") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(4, 6) == 0);
    CHECK(binomial(-2, 0) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("ball enumeration order and counts") {
    std::vector<std::string> got;
    for_each_in_ball(Word::from_string("000"), 1, [&](const Word& w) { got.push_back(w.to_string()); });
    CHECK(got == std::vector<std::string>{"000", "100", "010", "001"});

    std::vector<Word> singleton = ball(Word::from_string("00"), 0);
    REQUIRE(singleton.size() == 1);
    CHECK(singleton[0].to_string() == "00");

    // |B_t(c)| = V(n,t), every member within t, all distinct
    for (int n : {5, 10, 14})
        for (int t : {0, 1, 3, n < 8 ? n : 5}) {
            const Word c = Word::from_uint_msb(n, 0x155 & ((1u << n) - 1));
            std::set<Word> seen;
            long count = 0;
            for_each_in_ball(c, t, [&](const Word& w) {
                REQUIRE(distance(w, c) <= t);
                seen.insert(w);
                ++count;
            });
            CHECK(Bigint(count) == ball_volume(n, t));
            CHECK(seen.size() == static_cast<std::size_t>(count));
        }
}

TEST_CASE("sample_ball_uniform degenerate and frequency checks") {
    Rng rng(42);
    const Word c = Word::from_string("0110");
    for (int i = 0; i < 50; ++i) CHECK(sample_ball_uniform(c, 0, rng) == c);

    // n = 2, t = 2: the ball is the whole space, each word frequency 1/4
    const BallSampler sampler(2, 2);
    const Word center = Word::from_string("00");
    std::map<std::string, long> freq;
    const long draws = 1000000;
    for (long i = 0; i < draws; ++i) ++freq[sampler.sample(center, rng).to_string()];
    REQUIRE(freq.size() == 4);
    for (const auto& [word, count] : freq)
        CHECK(std::abs(count / static_cast<double>(draws) - 0.25) < 0.005);
}

TEST_CASE("sample_ball_uniform mean distance matches the weight distribution") {
    // exact expectation sum r * C(28,r) / V(28,5)
    const Bigint volume = ball_volume(28, 5);
    Rational expected(0);
    for (int r = 0; r <= 5; ++r) expected += Rational(r) * Rational(binomial(28, r), volume);
    const double mean_exact = to_double(expected);

    Rng rng(2024);
    const BallSampler sampler(28, 5);
    const Word c(28);
    double sum = 0;
    const long draws = 100000;
    for (long i = 0; i < draws; ++i) sum += distance(sampler.sample(c, rng), c);
    CHECK(std::abs(sum / draws - mean_exact) < 0.01);
}

TEST_CASE("sample_ball_uniform chi-square against the uniform ball") {
    // significance 0.001 via the Wilson-Hilferty approximation of the
    // chi-square quantile
    auto chi2_crit = [](int df) {
        const double z = 3.0902; // Phi^{-1}(0.999)
        const double a = 2.0 / (9.0 * df);
        const double base = 1.0 - a + z * std::sqrt(a);
        return df * base * base * base;
    };
    Rng rng(31337);
    for (auto [n, t] : {std::pair{6, 2}, std::pair{10, 3}}) {
        const Word c(n);
        std::map<Word, long> freq;
        std::vector<Word> members = ball(c, t);
        for (const Word& w : members) freq[w] = 0;
        const long draws = 1000000;
        const BallSampler sampler(n, t);
        for (long i = 0; i < draws; ++i) ++freq.at(sampler.sample(c, rng));
        const double expected = draws / static_cast<double>(members.size());
        double chi2 = 0;
        for (const auto& [w, count] : freq) chi2 += (count - expected) * (count - expected) / expected;
        CHECK(chi2 < chi2_crit(static_cast<int>(members.size()) - 1));
    }
}

TEST_CASE("serialization round trip and ordering") {
    const Word w = Word::from_string("0101100");
    CHECK(Word::from_string(w.to_string()) == w);
    CHECK(w.support() == std::vector<int>{2, 4, 5});
    CHECK(Word::from_support(7, w.support()) == w);

    // coordinate 1 is most significant in the ordering
    CHECK(Word::from_string("011") < Word::from_string("100"));
    CHECK(Word::from_string("100") < Word::from_string("101"));

    CHECK_THROWS_AS(Word::from_string("01x"), precondition_error);
    CHECK_THROWS_AS(CoordSet(4, {1, 1}), precondition_error);
    CHECK_THROWS_AS(CoordSet(4, {5}), precondition_error);
    CHECK(CoordSet(5, {3, 1}).indicator().to_string() == "10100");
}
