#include <doctest.h>

#include <set>

#include "levrecon/ball.hpp"
#include "levrecon/channels.hpp"
#include "levrecon/io.hpp"
#include "levrecon/math.hpp"

using namespace levrecon;

TEST_CASE("noiseless channels replicate the source") {
    Rng rng(1);
    const Word x = Word::from_string("10110");
    for (ChannelModel model : {ChannelModel::UniformBall, ChannelModel::ExactWeight}) {
        const OutputBatch batch = transmit(x, 0, 8, model, rng);
        for (const Word& y : batch.outputs) CHECK(y == x);
    }
}

TEST_CASE("adversarial set exhausts small balls") {
    Rng rng(1);
    const Word x = Word::from_string("0110");
    const OutputBatch batch = transmit(x, 1, 5, ChannelModel::AdversarialSet, rng);
    const std::set<Word> got(batch.outputs.begin(), batch.outputs.end());
    const std::vector<Word> expect = ball(x, 1);
    CHECK(got == std::set<Word>(expect.begin(), expect.end()));
    CHECK_THROWS_AS(transmit(x, 1, 6, ChannelModel::AdversarialSet, rng), precondition_error);
}

TEST_CASE("exact weight outputs sit on the sphere") {
    Rng rng(9);
    const Word x(28);
    const OutputBatch batch = transmit(x, 5, 200, ChannelModel::ExactWeight, rng);
    for (const Word& y : batch.outputs) CHECK(distance(y, x) == 5);
}

TEST_CASE("every output lies in the ball") {
    Rng rng(77);
    for (int t : {1, 3}) {
        const Word x = Word::from_string("110010101");
        for (ChannelModel model :
             {ChannelModel::UniformBall, ChannelModel::ExactWeight, ChannelModel::AdversarialSet}) {
            const OutputBatch batch = transmit(x, t, 9, model, rng);
            CHECK(batch.size() == 9);
            for (const Word& y : batch.outputs) CHECK(distance(y, x) <= t);
        }
    }
}

TEST_CASE("custom adversary strategies plug in") {
    Rng rng(5);
    const Word x(6);
    const std::vector<Word> fixed{Word::from_string("000001"), Word::from_string("000010"),
                                  Word::from_string("000100")};
    const FixedSetAdversary adversary(fixed);
    const OutputBatch batch = transmit(x, 2, 3, ChannelModel::AdversarialSet, rng, &adversary);
    CHECK(batch.outputs == fixed);

    // a strategy returning words outside the ball must be rejected
    const FixedSetAdversary bad({Word::from_string("111111")});
    CHECK_THROWS_AS(transmit(x, 2, 1, ChannelModel::AdversarialSet, rng, &bad), diagnostic_error);
}

TEST_CASE("adversarial intersection examples") {
    // single center: the whole ball
    const Word c0 = Word::from_string("010010");
    CHECK(Bigint(adversarial_intersection({c0}, 2).size()) == ball_volume(6, 2));

    // three unit-weight-or-zero centers in F^6 at t = 2
    const std::vector<Word> centers{Word::from_string("000000"), Word::from_string("100000"),
                                    Word::from_string("010000")};
    const auto inter = adversarial_intersection(centers, 2);
    CHECK(inter.size() == 8);

    // three weight-2 disjoint-support centers in F^12 at t = 3
    std::vector<Word> trio;
    for (int i = 0; i < 3; ++i) {
        Word w(12);
        w.set(2 * i + 1, true);
        w.set(2 * i + 2, true);
        trio.push_back(w);
    }
    CHECK(adversarial_intersection(trio, 3).size() == 21);
}

TEST_CASE("adversarial intersection equals the whole-space filter") {
    Rng rng(2025);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 6 + static_cast<int>(rng.next_below(5)); // 6..10
        const int t = 1 + static_cast<int>(rng.next_below(3)); // 1..3
        std::vector<Word> centers;
        const int count = 2 + static_cast<int>(rng.next_below(2));
        for (int i = 0; i < count; ++i)
            centers.push_back(Word::from_uint_msb(n, rng.next_below(1ULL << n)));
        const auto fast = adversarial_intersection(centers, t);
        std::set<Word> brute;
        for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
            const Word w = Word::from_uint_msb(n, v);
            bool inside = true;
            for (const Word& c : centers)
                if (distance(w, c) > t) {
                    inside = false;
                    break;
                }
            if (inside) brute.insert(w);
        }
        CHECK(std::set<Word>(fast.begin(), fast.end()) == brute);
        for (const Word& w : fast)
            for (const Word& c : centers) CHECK(distance(w, c) <= t);
    }
}

TEST_CASE("batch JSON round trip") {
    Rng rng(11);
    const Word x = Word::from_string("0101010");
    const OutputBatch batch = transmit(x, 2, 4, ChannelModel::UniformBall, rng);
    const OutputBatch parsed = io::batch_from_json(io::batch_to_json(batch));
    CHECK(parsed.n == batch.n);
    CHECK(parsed.t == batch.t);
    CHECK(parsed.model == batch.model);
    CHECK(parsed.source == batch.source);
    CHECK(parsed.outputs == batch.outputs);

    CHECK_THROWS_AS(io::batch_from_json("{not json"), precondition_error);
    CHECK_THROWS_AS(io::batch_from_json(R"({"n":3,"t":1,"model":"uniform_ball","outputs":["01"]})"),
                    precondition_error);
}
