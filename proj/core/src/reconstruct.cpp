#include "levrecon/reconstruct.hpp"

#include <algorithm>

#include "levrecon/ball.hpp"
#include "levrecon/math.hpp"

namespace levrecon {

std::string to_string(DecoderKind k) {
    switch (k) {
        case DecoderKind::Naive: return "naive";
        case DecoderKind::Shatter: return "shatter";
        case DecoderKind::Covering: return "covering";
        case DecoderKind::BallUnion: return "ball_union";
    }
    return "unknown";
}

bool CandidateList::contains(const Word& w) const {
    return std::binary_search(candidates.begin(), candidates.end(), w);
}

namespace {

std::vector<Word> sorted_unique(std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

void check_batch(const Code& c, const OutputBatch& y) {
    if (y.n != c.length()) throw precondition_error("batch length does not match code length");
    if (y.outputs.empty()) throw precondition_error("batch has no outputs");
}

/// Colex enumeration over k-subsets of [1,n]. Returns false when exhausted.
bool next_colex(std::vector<int>& s, int n) {
    const int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i) {
        const int cap = (i + 1 < k) ? s[static_cast<std::size_t>(i + 1)] - 1 : n;
        if (s[static_cast<std::size_t>(i)] < cap) {
            ++s[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) s[static_cast<std::size_t>(j)] = j + 1;
            return true;
        }
    }
    return false;
}

std::uint64_t project(const Word& w, const std::vector<int>& coords) {
    std::uint64_t p = 0;
    for (std::size_t j = 0; j < coords.size(); ++j)
        if (w.get(coords[j])) p |= 1ULL << j;
    return p;
}

} // namespace

CandidateList intersect_list(const Code& c, const OutputBatch& y, int t) {
    check_batch(c, y);
    if (t < 0 || t > y.n) throw precondition_error("radius out of range");
    CandidateList out;
    out.decoder = DecoderKind::Naive;
    for (const Word& cw : c.codewords()) {
        bool inside = true;
        for (const Word& output : y.outputs)
            if (distance(cw, output) > t) {
                inside = false;
                break;
            }
        if (inside) out.candidates.push_back(cw);
    }
    return out; // codewords() is sorted, so candidates are too
}

std::optional<CoordSet> find_shattered_set(const std::vector<Word>& y, int k) {
    const int n = y.empty() ? 0 : y.front().length();
    if (k < 0 || k > n) {
        if (k == 0) return CoordSet(n, {});
        return std::nullopt;
    }
    if (k == 0) return CoordSet(n, {});
    if (k > 20) throw budget_error("shattering search budget is k <= 20");

    const std::uint64_t want = 1ULL << k;
    std::vector<char> seen(want);
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i + 1;
    do {
        std::fill(seen.begin(), seen.end(), 0);
        std::uint64_t found = 0;
        for (const Word& w : y) {
            const std::uint64_t p = project(w, s);
            if (!seen[p]) {
                seen[p] = 1;
                if (++found == want) return CoordSet(n, s);
            }
        }
    } while (next_colex(s, n));
    return std::nullopt;
}

CandidateList shatter_decode(const Code& c, const OutputBatch& y, int t, int a) {
    check_batch(c, y);
    const int e = c.capability();
    const int ell = t - e;
    if (ell < 1) throw precondition_error("shatter_decode requires t > capability");
    if (a < 0 || a > ell - 1) throw precondition_error("shatter_decode requires 0 <= a <= ell-1");
    if (Bigint(y.size()) < ball_volume(y.n, ell - a - 1) + 1)
        throw precondition_error("shatter_decode requires N >= V(n, ell-a-1) + 1");

    const int k = ell - a;
    const auto shattered = find_shattered_set(y.outputs, k);
    if (!shattered)
        throw diagnostic_error("no shattered coordinate set despite meeting the channel threshold "
                               "(duplicate outputs shrink the effective batch)");

    const std::vector<int>& coords = shattered->indices();
    const Word s = shattered->indicator();

    // first output realizing each of the 2^k patterns
    std::vector<int> pattern_rep(static_cast<std::size_t>(1) << k, -1);
    for (std::size_t i = 0; i < y.outputs.size(); ++i) {
        const std::uint64_t p = project(y.outputs[i], coords);
        if (pattern_rep[p] < 0) pattern_rep[p] = static_cast<int>(i);
    }

    CandidateList out;
    out.decoder = DecoderKind::Shatter;
    ShatterCertificate cert;
    cert.shattered = *shattered;
    cert.search_radius = e + a;
    std::vector<Word> collected;
    for (std::uint64_t p = 0; p < (1ULL << k); ++p) {
        const Word beta = y.outputs[static_cast<std::size_t>(pattern_rep[p])] ^ s;
        cert.betas.push_back(beta);
        for (Word& cw : list_in_ball(c, beta, e + a)) collected.push_back(std::move(cw));
    }
    out.candidates = sorted_unique(std::move(collected));
    out.certificate = std::move(cert);
    return out;
}

CandidateList covering_decode(const Code& c, const OutputBatch& y, int t, int R, const LinearCode& d) {
    check_batch(c, y);
    const int e = c.capability();
    const int ell = t - e;
    if (ell < 1) throw precondition_error("covering_decode requires t > capability");
    if (R < 0) throw precondition_error("covering radius must be nonnegative");
    const int window = ell + 2 * R;
    if (window > y.n) throw precondition_error("window ell + 2R exceeds word length");
    if (window > 20) throw budget_error("covering_decode window budget is ell + 2R <= 20");
    if (d.length() != window) throw precondition_error("covering code length must be ell + 2R");
    if (R > 0 && d.dimension() == window)
        throw precondition_error("full-space covering code is only meaningful for R = 0");
    if (!is_R_covering(d, R)) throw precondition_error("D is not an R-covering code");
    if (Bigint(y.size()) <
        ball_volume(y.n, window - 1) - (Bigint(1) << (window - d.dimension())) + 2)
        throw precondition_error("covering_decode requires N >= V(n, ell+2R-1) - 2^(ell+2R-dim D) + 2");

    const std::uint64_t pattern_space = 1ULL << window;
    const std::vector<Word> d_codewords = d.codewords();

    // cosets keyed by syndrome; members listed in ascending pattern order
    const std::uint64_t coset_count = 1ULL << (window - d.dimension());
    std::vector<std::vector<std::uint64_t>> coset_members(coset_count);
    for (std::uint64_t v = 0; v < pattern_space; ++v) {
        const Word pattern = Word::from_uint_msb(window, v);
        coset_members[d.syndrome(pattern)].push_back(v);
    }

    std::vector<int> pattern_rep(pattern_space);
    std::vector<int> s(static_cast<std::size_t>(window));
    for (int i = 0; i < window; ++i) s[static_cast<std::size_t>(i)] = i + 1;
    do {
        std::fill(pattern_rep.begin(), pattern_rep.end(), -1);
        for (std::size_t i = 0; i < y.outputs.size(); ++i) {
            // project with coordinate s_1 as the most significant pattern bit,
            // matching Word::from_uint_msb
            std::uint64_t p = 0;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (y.outputs[i].get(s[j])) p |= 1ULL << (window - 1 - static_cast<int>(j));
            if (pattern_rep[p] < 0) pattern_rep[p] = static_cast<int>(i);
        }
        for (std::uint64_t syn = 0; syn < coset_count; ++syn) {
            bool complete = true;
            for (std::uint64_t member : coset_members[syn])
                if (pattern_rep[member] < 0) {
                    complete = false;
                    break;
                }
            if (!complete) continue;

            const CoordSet window_set(y.n, s);
            const Word shift = window_set.indicator();
            CandidateList out;
            out.decoder = DecoderKind::Covering;
            CoveringCertificate cert;
            cert.window = window_set;
            cert.coset_syndrome = syn;
            std::vector<Word> collected;
            for (std::uint64_t member : coset_members[syn]) {
                cert.coset_words.push_back(Word::from_uint_msb(window, member));
                const Word beta = y.outputs[static_cast<std::size_t>(pattern_rep[member])] ^ shift;
                cert.betas.push_back(beta);
                if (auto cw = decode_unique(c, beta, e)) collected.push_back(*cw);
            }
            out.candidates = sorted_unique(std::move(collected));
            out.certificate = std::move(cert);
            return out;
        }
    } while (next_colex(s, y.n));
    throw diagnostic_error("no coordinate window carries a complete coset despite meeting the "
                           "channel threshold (duplicate outputs shrink the effective batch)");
}

CandidateList ball_union_decode(const Code& c, const std::vector<Word>& centers, int e) {
    CandidateList out;
    out.decoder = DecoderKind::BallUnion;
    BallUnionCertificate cert;
    cert.centers = centers;
    cert.radius = e;
    std::vector<Word> collected;
    for (const Word& center : centers)
        if (auto cw = decode_unique(c, center, e)) collected.push_back(*cw);
    out.candidates = sorted_unique(std::move(collected));
    out.certificate = std::move(cert);
    return out;
}

} // namespace levrecon
