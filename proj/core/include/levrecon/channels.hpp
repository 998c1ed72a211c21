#ifndef LEVRECON_CHANNELS_HPP
#define LEVRECON_CHANNELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "levrecon/rng.hpp"
#include "levrecon/word.hpp"

namespace levrecon {

/// UniformBall:    i.i.d. uniform draws from B_t(x); duplicates allowed.
/// ExactWeight:    i.i.d. draws at distance exactly t from x.
/// AdversarialSet: N distinct words of B_t(x) chosen by a strategy.
enum class ChannelModel { UniformBall, ExactWeight, AdversarialSet };

std::string to_string(ChannelModel m);
ChannelModel channel_model_from_string(const std::string& s);

/// The multiset Y of channel outputs plus the model that produced it.
struct OutputBatch {
    int n = 0;
    int t = 0;
    ChannelModel model = ChannelModel::UniformBall;
    std::optional<Word> source;
    std::vector<Word> outputs;

    int size() const { return static_cast<int>(outputs.size()); }
};

/// Picks the N distinct outputs of an adversarial batch. The default
/// strategy takes the first N words of B_t(x) in enumeration order; proofs'
/// worst-case constructions (ball fillings, intersection fillings) plug in
/// through this interface.
class AdversaryStrategy {
public:
    virtual ~AdversaryStrategy() = default;
    virtual std::vector<Word> choose(const Word& x, int t, int N) const = 0;
};

class BallFillingAdversary final : public AdversaryStrategy {
public:
    std::vector<Word> choose(const Word& x, int t, int N) const override;
};

/// Emits a fixed word list (e.g. a ball intersection) regardless of x.
class FixedSetAdversary final : public AdversaryStrategy {
public:
    explicit FixedSetAdversary(std::vector<Word> words) : words_(std::move(words)) {}
    std::vector<Word> choose(const Word& x, int t, int N) const override;

private:
    std::vector<Word> words_;
};

/// Sends x through N channels, each flipping at most t coordinates.
/// Every output is checked to lie in B_t(x).
OutputBatch transmit(const Word& x, int t, int N, ChannelModel model, Rng& rng,
                     const AdversaryStrategy* adversary = nullptr);

/// The exact intersection of the balls B_t(c) over the given centers, in
/// B_t(first center) enumeration order. This set is the extremal output
/// multiset for the channel-count bounds. Enumeration anchors on the first
/// center and filters, so cost is V(n,t), not 2^n.
std::vector<Word> adversarial_intersection(const std::vector<Word>& codewords, int t);

} // namespace levrecon

#endif
