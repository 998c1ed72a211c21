#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <set>

#include "levrecon/ball.hpp"
#include "levrecon/io.hpp"
#include "levrecon/math.hpp"
#include "levrecon/reconstruct.hpp"
#include "levrecon/rng.hpp"

using namespace levrecon;

namespace {

OutputBatch batch_from_words(int n, int t, std::vector<Word> words, std::optional<Word> source = std::nullopt) {
    OutputBatch b;
    b.n = n;
    b.t = t;
    b.model = ChannelModel::AdversarialSet;
    b.source = std::move(source);
    b.outputs = std::move(words);
    return b;
}

bool subset_of(const std::vector<Word>& small, const CandidateList& big) {
    return std::all_of(small.begin(), small.end(), [&](const Word& w) { return big.contains(w); });
}

std::vector<Word> random_distinct_words(int n, int count, Rng& rng) {
    std::set<Word> words;
    while (static_cast<int>(words.size()) < count) words.insert(Word::from_uint_msb(n, rng.next_below(1ULL << n)));
    return {words.begin(), words.end()};
}

} // namespace

TEST_CASE("intersect_list") {
    const Code rep(6, {Word(6), Word::from_string("110000")});
    // Y = {x} keeps x for any t
    CHECK(intersect_list(rep, batch_from_words(6, 0, {Word(6)}), 0).contains(Word(6)));

    // every word within 2 of both codewords keeps both
    const auto inter = adversarial_intersection({Word(6), Word::from_string("110000")}, 2);
    REQUIRE(!inter.empty());
    const auto both = intersect_list(rep, batch_from_words(6, 2, inter), 2);
    CHECK(both.size() == 2);

    // continuation of the F^6 intersection example: three codewords survive
    std::vector<Word> c3{Word(6), Word::from_string("100000"), Word::from_string("010000")};
    std::vector<Word> extra;
    for (std::uint64_t v : {0b111111ULL, 0b001111ULL}) extra.push_back(Word::from_uint_msb(6, v));
    std::vector<Word> codewords = c3;
    codewords.insert(codewords.end(), extra.begin(), extra.end());
    const Code c(6, codewords);
    const auto y = adversarial_intersection(c3, 2);
    REQUIRE(y.size() == 8);
    const auto t_of_y = intersect_list(c, batch_from_words(6, 2, y), 2);
    CHECK(t_of_y.size() >= 3);
    CHECK(subset_of(c3, t_of_y));
}

TEST_CASE("find_shattered_set") {
    std::vector<Word> y;
    for (const char* s : {"000", "100", "010", "001", "110"}) y.push_back(Word::from_string(s));
    const auto found = find_shattered_set(y, 2);
    REQUIRE(found.has_value());
    CHECK(found->indices() == std::vector<int>{1, 2});

    CHECK(find_shattered_set(y, 0).has_value());
    CHECK(find_shattered_set(y, 0)->size() == 0);

    std::vector<Word> antichain{Word::from_string("000"), Word::from_string("111")};
    CHECK_FALSE(find_shattered_set(antichain, 2).has_value());
}

TEST_CASE("shattering threshold always admits a witness") {
    Rng rng(404);
    for (int n : {6, 8, 10})
        for (int k : {1, 2, 3}) {
            const Bigint needed = ball_volume(n, k - 1) + 1;
            REQUIRE(needed.fits_slong_p());
            for (int trial = 0; trial < 30; ++trial) {
                const auto y = random_distinct_words(n, static_cast<int>(needed.get_si()), rng);
                REQUIRE(find_shattered_set(y, k).has_value());
            }
        }
}

TEST_CASE("shatter_decode on full-ball batches") {
    const Code c = greedy_code(12, 3, 0);
    REQUIRE(c.capability() == 1);
    const int t = 3, a = 1; // ell = 2
    const long m = max_ball_count(c, 2);
    Rng rng(808);
    for (int trial = 0; trial < 100; ++trial) {
        const Word x = c.codewords()[rng.next_below(c.codewords().size())];
        const auto y_words = ball(x, t);
        const OutputBatch y = batch_from_words(12, t, y_words, x);
        const CandidateList result = shatter_decode(c, y, t, a);
        REQUIRE(result.contains(x));
        REQUIRE(result.size() <= 2 * m);
        for (const Word& w : result.candidates) REQUIRE(c.contains(w));
        // structural decoders over-approximate T(Y)
        const CandidateList naive = intersect_list(c, y, t);
        REQUIRE(subset_of(naive.candidates, result));
        const auto* cert = std::get_if<ShatterCertificate>(&result.certificate);
        REQUIRE(cert != nullptr);
        CHECK(cert->shattered.size() == 1); // ell - a
        CHECK(cert->betas.size() == 2);
    }
}

TEST_CASE("shatter_decode preconditions") {
    const Code c = greedy_code(8, 3, 0);
    const OutputBatch y = batch_from_words(8, 1, {Word(8)});
    // t = capability: degenerate, one channel is enough
    CHECK_THROWS_AS(shatter_decode(c, y, 1, 0), precondition_error);
    // threshold unmet
    const OutputBatch tiny = batch_from_words(8, 3, {Word(8)});
    CHECK_THROWS_AS(shatter_decode(c, tiny, 3, 0), precondition_error);
    // duplicates can starve the shattering search: N >= threshold but all equal
    std::vector<Word> dupes(ball_volume(8, 1).get_si() + 1, Word(8));
    OutputBatch dup_batch;
    dup_batch.n = 8;
    dup_batch.t = 3;
    dup_batch.model = ChannelModel::UniformBall;
    dup_batch.outputs = dupes;
    CHECK_THROWS_AS(shatter_decode(c, dup_batch, 3, 0), diagnostic_error);
}

TEST_CASE("covering_decode on nearly-full balls") {
    const Code c = single_error_code(14).to_code();
    REQUIRE(c.capability() == 1);
    const int t = 3, R = 1; // ell = 2, window = 4
    const auto dim = covering_dimension(4, 1);
    REQUIRE(dim.k == 2);
    const Bigint threshold = ball_volume(14, 3) - (Bigint(1) << (4 - dim.k)) + 2;

    Rng rng(909);
    for (int trial = 0; trial < 60; ++trial) {
        const Word x = c.codewords()[rng.next_below(c.codewords().size())];
        auto y_words = ball(x, t);
        // drop two random outputs; the batch stays above the threshold
        for (int drop = 0; drop < 2; ++drop) y_words.erase(y_words.begin() + static_cast<long>(rng.next_below(y_words.size())));
        REQUIRE(Bigint(static_cast<long>(y_words.size())) >= threshold);
        const OutputBatch y = batch_from_words(14, t, y_words, x);
        const CandidateList result = covering_decode(c, y, t, R, dim.witness);
        REQUIRE(result.contains(x));
        REQUIRE(result.size() <= 1 << dim.k);
        for (const Word& w : result.candidates) REQUIRE(c.contains(w));
        const CandidateList naive = intersect_list(c, y, t);
        REQUIRE(subset_of(naive.candidates, result));
        const auto* cert = std::get_if<CoveringCertificate>(&result.certificate);
        REQUIRE(cert != nullptr);
        CHECK(cert->coset_words.size() == 4);
        CHECK(cert->betas.size() == 4);
    }
}

TEST_CASE("covering_decode parameter validation") {
    const Code c = single_error_code(14).to_code();
    const auto dim = covering_dimension(4, 1);
    const OutputBatch tiny = batch_from_words(14, 3, {Word(14)});
    CHECK_THROWS_AS(covering_decode(c, tiny, 3, 1, dim.witness), precondition_error);

    // full-space D is rejected for R > 0 and accepted for R = 0
    std::vector<Word> unit_rows;
    for (int i = 1; i <= 4; ++i) unit_rows.push_back(Word::unit(4, i));
    const LinearCode full(4, unit_rows);
    CHECK_THROWS_AS(covering_decode(c, tiny, 3, 1, full), precondition_error);

    // R = 0 with D = full space degenerates to the shattering route (a = 0):
    // build the full-ball batch so both decoders run
    const Word x = *decode_unique(c, Word(14), 0);
    const auto y_words = ball(x, 3);
    const OutputBatch y = batch_from_words(14, 3, y_words, x);
    std::vector<Word> rows2;
    for (int i = 1; i <= 2; ++i) rows2.push_back(Word::unit(2, i));
    const CandidateList via_covering = covering_decode(c, y, 3, 0, LinearCode(2, rows2));
    const CandidateList via_shatter = shatter_decode(c, y, 3, 0);
    CHECK(via_covering.candidates == via_shatter.candidates);
}

TEST_CASE("ball_union_decode") {
    const Code rep(5, {Word(5), Word::from_string("11111")});
    const CandidateList hit = ball_union_decode(rep, {Word(5)}, 2);
    CHECK(hit.candidates == std::vector<Word>{Word(5)});

    const CandidateList miss = ball_union_decode(rep, {Word::from_string("11000")}, 1);
    CHECK(miss.size() == 0);

    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Word> centers;
        const int k = 1 + static_cast<int>(rng.next_below(4));
        for (int i = 0; i < k; ++i) centers.push_back(Word::from_uint_msb(5, rng.next_below(32)));
        CHECK(ball_union_decode(rep, centers, 2).size() <= k);
    }
}

TEST_CASE("candidate list JSON carries the certificate") {
    const Code c = greedy_code(10, 3, 0);
    const Word x = c.codewords().front();
    const OutputBatch y = batch_from_words(10, 2, ball(x, 2), x);
    const CandidateList result = shatter_decode(c, y, 2, 0);
    const auto doc = nlohmann::json::parse(io::candidates_to_json(result));
    CHECK(doc.at("decoder") == "shatter");
    CHECK(doc.at("certificate").contains("S"));
    CHECK(doc.at("certificate").at("beta").size() == 2);
    CHECK(!doc.at("candidates").empty());
}
