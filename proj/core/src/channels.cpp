#include "levrecon/channels.hpp"

#include <array>
#include <unordered_set>

#include "levrecon/ball.hpp"
#include "levrecon/math.hpp"

namespace levrecon {

std::string to_string(ChannelModel m) {
    switch (m) {
        case ChannelModel::UniformBall: return "uniform_ball";
        case ChannelModel::ExactWeight: return "exact_weight";
        case ChannelModel::AdversarialSet: return "adversarial_set";
    }
    return "unknown";
}

ChannelModel channel_model_from_string(const std::string& s) {
    if (s == "uniform_ball") return ChannelModel::UniformBall;
    if (s == "exact_weight") return ChannelModel::ExactWeight;
    if (s == "adversarial_set") return ChannelModel::AdversarialSet;
    throw precondition_error("unknown channel model: " + s);
}

std::vector<Word> BallFillingAdversary::choose(const Word& x, int t, int N) const {
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(N));
    for_each_in_ball(x, t, [&](const Word& w) {
        out.push_back(w);
        return static_cast<int>(out.size()) < N;
    });
    return out;
}

std::vector<Word> FixedSetAdversary::choose(const Word&, int, int N) const {
    if (static_cast<int>(words_.size()) < N) throw precondition_error("adversary set smaller than N");
    return std::vector<Word>(words_.begin(), words_.begin() + N);
}

OutputBatch transmit(const Word& x, int t, int N, ChannelModel model, Rng& rng,
                     const AdversaryStrategy* adversary) {
    const int n = x.length();
    if (t < 0 || t > n) throw precondition_error("transmit requires 0 <= t <= n");
    if (N < 1) throw precondition_error("transmit requires N >= 1");

    OutputBatch batch;
    batch.n = n;
    batch.t = t;
    batch.model = model;
    batch.source = x;
    batch.outputs.reserve(static_cast<std::size_t>(N));

    switch (model) {
        case ChannelModel::UniformBall: {
            const BallSampler sampler(n, t);
            for (int i = 0; i < N; ++i) batch.outputs.push_back(sampler.sample(x, rng));
            break;
        }
        case ChannelModel::ExactWeight: {
            std::array<std::uint16_t, kMaxWordLength> coords;
            for (int i = 0; i < N; ++i) {
                Word w = x;
                for (int j = 0; j < n; ++j) coords[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(j + 1);
                for (int j = 0; j < t; ++j) {
                    const auto pick = j + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - j)));
                    std::swap(coords[static_cast<std::size_t>(j)], coords[static_cast<std::size_t>(pick)]);
                    w.flip(coords[static_cast<std::size_t>(j)]);
                }
                batch.outputs.push_back(w);
            }
            break;
        }
        case ChannelModel::AdversarialSet: {
            if (Bigint(N) > ball_volume(n, t))
                throw precondition_error("adversarial batch cannot exceed V(n,t) distinct outputs");
            const BallFillingAdversary fallback;
            const AdversaryStrategy& strategy = adversary ? *adversary : fallback;
            batch.outputs = strategy.choose(x, t, N);
            if (static_cast<int>(batch.outputs.size()) != N)
                throw precondition_error("adversary produced wrong output count");
            std::unordered_set<Word, WordHash> seen;
            for (const Word& w : batch.outputs)
                if (!seen.insert(w).second) throw precondition_error("adversarial outputs must be distinct");
            break;
        }
    }

    for (const Word& w : batch.outputs)
        if (distance(w, x) > t) throw diagnostic_error("channel output outside B_t(x)");
    return batch;
}

std::vector<Word> adversarial_intersection(const std::vector<Word>& codewords, int t) {
    if (codewords.empty()) throw precondition_error("need at least one center");
    const Word& anchor = codewords.front();
    const int n = anchor.length();
    if (t < 0 || t > n) throw precondition_error("radius out of range");
    // Enumeration of B_t(anchor) costs V(n,t) regardless of 2^n.
    if (ball_volume(n, t) > (Bigint(1) << 26))
        throw budget_error("intersection enumeration budget exceeded");
    std::vector<Word> result;
    for_each_in_ball(anchor, t, [&](const Word& w) {
        for (std::size_t i = 1; i < codewords.size(); ++i)
            if (distance(w, codewords[i]) > t) return;
        result.push_back(w);
    });
    return result;
}

} // namespace levrecon
