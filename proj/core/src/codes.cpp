#include "levrecon/codes.hpp"

#include <algorithm>
#include <cassert>

#include "levrecon/ball.hpp"
#include "levrecon/math.hpp"
#include "levrecon/rng.hpp"

namespace levrecon {

namespace {

void check_codeword_lengths(int n, const std::vector<Word>& words) {
    for (const Word& w : words)
        if (w.length() != n) throw precondition_error("codeword length mismatch");
}

int pairwise_min_distance(const std::vector<Word>& words) {
    int best = -1;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const int d = distance(words[i], words[j]);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

} // namespace

Code::Code(int n, std::vector<Word> codewords) : n_(n), words_(std::move(codewords)) {
    if (words_.empty()) throw precondition_error("code must be nonempty");
    check_codeword_lengths(n_, words_);
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
        throw precondition_error("duplicate codeword");
    min_distance_ = pairwise_min_distance(words_);
}

Code code_with_known_distance(int n, std::vector<Word> codewords, int min_distance) {
    Code c;
    c.n_ = n;
    c.words_ = std::move(codewords);
    check_codeword_lengths(n, c.words_);
    std::sort(c.words_.begin(), c.words_.end());
    if (std::adjacent_find(c.words_.begin(), c.words_.end()) != c.words_.end())
        throw precondition_error("duplicate codeword");
    c.min_distance_ = c.words_.size() >= 2 ? min_distance : -1;
    assert(c.words_.size() < 2 || c.words_.size() > 4096 ||
           pairwise_min_distance(c.words_) == min_distance);
    return c;
}

int Code::min_distance() const {
    if (min_distance_ < 0) throw precondition_error("minimum distance undefined for a singleton code");
    return min_distance_;
}

int Code::capability() const { return (min_distance() - 1) / 2; }

bool Code::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

int min_distance(const Code& c) { return c.min_distance(); }

// ---------------------------------------------------------------------------
// LinearCode

LinearCode::LinearCode(int n, std::vector<Word> generator_rows) : n_(n), rows_(std::move(generator_rows)) {
    check_codeword_lengths(n_, rows_);
    // Gaussian elimination to reduced row echelon form; rows must be
    // independent, so no row may vanish.
    std::vector<Word> rref;
    std::vector<int> pivots;
    for (Word row : rows_) {
        for (std::size_t r = 0; r < rref.size(); ++r)
            if (row.get(pivots[r])) row ^= rref[r];
        int pivot = 0;
        for (int i = 1; i <= n_; ++i)
            if (row.get(i)) {
                pivot = i;
                break;
            }
        if (pivot == 0) throw precondition_error("generator rows are linearly dependent");
        for (std::size_t r = 0; r < rref.size(); ++r)
            if (rref[r].get(pivot)) rref[r] ^= row;
        rref.push_back(row);
        pivots.push_back(pivot);
    }
    // sort rows by pivot column
    std::vector<std::size_t> order(rref.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    rows_.clear();
    pivots_.clear();
    for (std::size_t i : order) {
        rows_.push_back(rref[i]);
        pivots_.push_back(pivots[i]);
    }

    // Parity check: for each non-pivot column j, the word with 1 at j and at
    // every pivot column whose row has a 1 in column j is orthogonal to all
    // generators.
    std::vector<char> is_pivot(static_cast<std::size_t>(n_) + 1, 0);
    for (int p : pivots_) is_pivot[static_cast<std::size_t>(p)] = 1;
    for (int j = 1; j <= n_; ++j) {
        if (is_pivot[static_cast<std::size_t>(j)]) continue;
        Word h(n_);
        h.set(j, true);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (rows_[r].get(j)) h.set(pivots_[r], true);
        check_rows_.push_back(h);
    }
}

bool LinearCode::contains(const Word& w) const {
    if (w.length() != n_) throw precondition_error("word length mismatch");
    Word rem = w;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rem.get(pivots_[r])) rem ^= rows_[r];
    return rem.weight() == 0;
}

std::vector<Word> LinearCode::codewords() const {
    const int k = dimension();
    if (k > 24) throw budget_error("too many codewords to enumerate");
    std::vector<Word> words;
    words.reserve(1u << k);
    Word current(n_);
    words.push_back(current);
    // Gray-code walk: word i differs from word i-1 by one generator.
    for (std::uint64_t i = 1; i < (1ULL << k); ++i) {
        const int bit = std::countr_zero(i);
        current ^= rows_[static_cast<std::size_t>(bit)];
        words.push_back(current);
    }
    return words;
}

std::uint64_t LinearCode::syndrome(const Word& w) const {
    if (static_cast<int>(check_rows_.size()) > 64) throw budget_error("syndrome wider than 64 bits");
    if (w.length() != n_) throw precondition_error("word length mismatch");
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < check_rows_.size(); ++j) {
        int par = 0;
        for (int b = 0; b < w.block_count(); ++b)
            par ^= std::popcount(check_rows_[j].block(b) & w.block(b)) & 1;
        if (par) s |= 1ULL << j;
    }
    return s;
}

int LinearCode::covering_radius() const {
    const int redundancy = n_ - dimension();
    if (redundancy > 26) throw budget_error("syndrome space too large");
    const std::size_t space = 1ULL << redundancy;
    // column syndromes: syndrome of each unit word
    std::vector<std::uint64_t> col(static_cast<std::size_t>(n_));
    for (int j = 1; j <= n_; ++j) col[static_cast<std::size_t>(j - 1)] = syndrome(Word::unit(n_, j));
    std::vector<std::uint8_t> dist(space, 0xFF);
    std::vector<std::uint32_t> frontier{0};
    dist[0] = 0;
    int radius = 0;
    std::size_t seen = 1;
    while (seen < space) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t s : frontier)
            for (int j = 0; j < n_; ++j) {
                const std::uint32_t u = s ^ static_cast<std::uint32_t>(col[static_cast<std::size_t>(j)]);
                if (dist[u] == 0xFF) {
                    dist[u] = static_cast<std::uint8_t>(radius + 1);
                    next.push_back(u);
                    ++seen;
                }
            }
        ++radius;
        frontier = std::move(next);
        if (frontier.empty() && seen < space)
            throw diagnostic_error("syndrome space not spanned by columns"); // unreachable for valid codes
    }
    return radius;
}

Code LinearCode::to_code() const {
    std::vector<Word> words = codewords();
    int min_weight = n_ + 1;
    for (const Word& w : words) {
        const int wt = w.weight();
        if (wt > 0 && wt < min_weight) min_weight = wt;
    }
    return code_with_known_distance(n_, std::move(words), min_weight);
}

LinearCode hamming_code(int r) {
    if (r < 2 || r > 16) throw precondition_error("hamming_code requires 2 <= r <= 16");
    const int n = (1 << r) - 1;
    if (n > kMaxWordLength) throw precondition_error("hamming_code length exceeds word capacity");
    return single_error_code(n);
}

LinearCode single_error_code(int n) {
    if (n < 3) throw precondition_error("single_error_code requires n >= 3");
    // Parity-check column j is the binary expansion of j; pivot positions are
    // the powers of two. Each non-power j contributes the generator row
    // e_j + sum of e_{2^b} over set bits b of j.
    std::vector<Word> rows;
    for (int j = 1; j <= n; ++j) {
        if ((j & (j - 1)) == 0) continue; // power of two: check position
        Word row(n);
        row.set(j, true);
        for (int b = 0; (1 << b) <= j; ++b)
            if (j & (1 << b)) row.set(1 << b, true);
        rows.push_back(row);
    }
    return LinearCode(n, std::move(rows));
}

// ---------------------------------------------------------------------------
// Greedy codes

Code greedy_code(int n, int d, std::uint64_t seed) {
    if (n < 1 || n > 16) throw budget_error("greedy_code budget is n <= 16");
    if (d < 1 || d > n) throw precondition_error("greedy_code requires 1 <= d <= n");
    const std::uint64_t space = 1ULL << n;

    if (d == 1) {
        // whole space; scanning is pointless
        std::vector<Word> all;
        all.reserve(space);
        for (std::uint64_t v = 0; v < space; ++v) all.push_back(Word::from_uint_msb(n, v));
        return code_with_known_distance(n, std::move(all), 1);
    }

    std::vector<std::uint32_t> order(space);
    for (std::uint64_t v = 0; v < space; ++v) order[v] = static_cast<std::uint32_t>(v);
    if (seed != 0) {
        Rng rng(seed);
        for (std::size_t i = space - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
            std::swap(order[i], order[j]);
        }
    }

    std::vector<Word> accepted;
    int actual_min = n + 1;
    for (std::uint32_t v : order) {
        const Word cand = Word::from_uint_msb(n, v);
        bool ok = true;
        int closest = n + 1;
        for (const Word& c : accepted) {
            const int dist = distance(cand, c);
            if (dist < d) {
                ok = false;
                break;
            }
            closest = std::min(closest, dist);
        }
        if (ok) {
            accepted.push_back(cand);
            actual_min = std::min(actual_min, closest);
        }
    }
    // min over "closest previous accepted" at each acceptance is the exact
    // pairwise minimum
    return code_with_known_distance(n, std::move(accepted), actual_min <= n ? actual_min : d);
}

// ---------------------------------------------------------------------------
// Covering checks

namespace {

int covering_radius_exhaustive(const std::vector<Word>& words, int n) {
    if (n > 26) throw budget_error("covering sweep budget is n <= 26");
    const std::size_t space = 1ULL << n;
    std::vector<std::uint8_t> dist(space, 0xFF);
    std::vector<std::uint32_t> frontier;
    frontier.reserve(words.size());
    for (const Word& w : words) {
        const std::uint32_t v = static_cast<std::uint32_t>(w.to_uint_msb());
        if (dist[v] == 0xFF) {
            dist[v] = 0;
            frontier.push_back(v);
        }
    }
    int radius = 0;
    std::size_t seen = frontier.size();
    while (seen < space && !frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t v : frontier)
            for (int b = 0; b < n; ++b) {
                const std::uint32_t u = v ^ (1u << b);
                if (dist[u] == 0xFF) {
                    dist[u] = static_cast<std::uint8_t>(radius + 1);
                    next.push_back(u);
                    ++seen;
                }
            }
        ++radius;
        frontier = std::move(next);
    }
    return radius;
}

} // namespace

bool is_R_covering(const Code& c, int R) {
    if (R < 0) throw precondition_error("covering radius must be nonnegative");
    if (R >= c.length()) return true;
    return covering_radius_exhaustive(c.codewords(), c.length()) <= R;
}

bool is_R_covering(const LinearCode& c, int R) {
    if (R < 0) throw precondition_error("covering radius must be nonnegative");
    return c.covering_radius() <= R;
}

// ---------------------------------------------------------------------------
// k[n,R] search

namespace {

/// Covering radius of the [n,k] code with systematic generator [I_k | A],
/// where A's rows are given as (n-k)-bit integers. BFS over syndromes with
/// parity-check H = [A^T | I_{n-k}].
int systematic_covering_radius(int n, int k, const std::vector<std::uint32_t>& a_rows) {
    const int r = n - k;
    const std::size_t space = 1ULL << r;
    std::vector<std::uint32_t> cols(static_cast<std::size_t>(n));
    for (int j = 0; j < k; ++j) cols[static_cast<std::size_t>(j)] = a_rows[static_cast<std::size_t>(j)];
    for (int j = 0; j < r; ++j) cols[static_cast<std::size_t>(k + j)] = 1u << j;
    std::vector<std::uint8_t> dist(space, 0xFF);
    dist[0] = 0;
    std::vector<std::uint32_t> frontier{0};
    int radius = 0;
    std::size_t seen = 1;
    while (seen < space) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t s : frontier)
            for (int j = 0; j < n; ++j) {
                const std::uint32_t u = s ^ cols[static_cast<std::size_t>(j)];
                if (dist[u] == 0xFF) {
                    dist[u] = static_cast<std::uint8_t>(radius + 1);
                    next.push_back(u);
                    ++seen;
                }
            }
        ++radius;
        if (next.empty()) break; // columns do not span: radius is infinite for covering purposes
        frontier = std::move(next);
    }
    return seen == space ? radius : kMaxWordLength;
}

/// Enumerates the rows of A as a non-increasing sequence of (n-k)-bit
/// values (row permutations of A give equivalent codes) and reports the
/// first R-covering witness found.
bool find_covering_code(int n, int k, int R, std::vector<std::uint32_t>& a_rows, std::uint32_t prev) {
    if (static_cast<int>(a_rows.size()) == k) {
        return systematic_covering_radius(n, k, a_rows) <= R;
    }
    for (std::uint32_t v = prev;; --v) {
        a_rows.push_back(v);
        if (find_covering_code(n, k, R, a_rows, v)) return true;
        a_rows.pop_back();
        if (v == 0) break;
    }
    return false;
}

} // namespace

CoveringDimension covering_dimension(int n, int R) {
    if (n < 1 || n > 9) throw budget_error("covering_dimension budget is n <= 9");
    if (R < 0) throw precondition_error("covering radius must be nonnegative");
    const Bigint space = Bigint(1) << n;
    const Bigint volume = ball_volume(n, std::min(R, n));
    for (int k = 0; k <= n; ++k) {
        if (k == 0) {
            if (R >= n) return {0, LinearCode(n, {})};
            continue;
        }
        if (k == n) {
            std::vector<Word> rows;
            for (int i = 1; i <= n; ++i) rows.push_back(Word::unit(n, i));
            return {n, LinearCode(n, std::move(rows))};
        }
        // Sphere-covering bound: 2^k * V(n,R) >= 2^n is necessary.
        if ((Bigint(1) << k) * volume < space) continue;
        const int r = n - k;
        std::vector<std::uint32_t> a_rows;
        const std::uint32_t max_value = (1u << r) - 1;
        if (find_covering_code(n, k, R, a_rows, max_value)) {
            std::vector<Word> rows;
            for (int i = 0; i < k; ++i) {
                Word row(n);
                row.set(i + 1, true);
                for (int j = 0; j < r; ++j)
                    if (a_rows[static_cast<std::size_t>(i)] & (1u << j)) row.set(k + j + 1, true);
                rows.push_back(row);
            }
            return {k, LinearCode(n, std::move(rows))};
        }
    }
    throw diagnostic_error("no covering code found"); // unreachable: k = n always covers
}

// ---------------------------------------------------------------------------
// Cosets

std::vector<std::vector<Word>> cosets(const LinearCode& d) {
    const int n = d.length();
    if (n > 20) throw budget_error("coset enumeration budget is n <= 20");
    const std::uint64_t space = 1ULL << n;
    const std::vector<Word> codewords = d.codewords();
    std::vector<char> visited(space, 0);
    std::vector<std::vector<Word>> result;
    for (std::uint64_t v = 0; v < space; ++v) {
        if (visited[v]) continue;
        const Word rep = Word::from_uint_msb(n, v);
        std::vector<Word> coset;
        coset.reserve(codewords.size());
        for (const Word& c : codewords) {
            const Word member = rep ^ c;
            visited[member.to_uint_msb()] = 1;
            coset.push_back(member);
        }
        std::sort(coset.begin(), coset.end());
        result.push_back(std::move(coset));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Ball decoding

std::optional<Word> decode_unique(const Code& c, const Word& w, int radius) {
    if (radius < 0) throw precondition_error("radius must be nonnegative");
    if (radius > c.capability())
        throw precondition_error("decode_unique requires radius <= capability; use list_in_ball");
    // Either scan the ball or scan the code, whichever is smaller.
    if (ball_volume(c.length(), radius) <= Bigint(c.size())) {
        std::optional<Word> found;
        for_each_in_ball(w, radius, [&](const Word& cand) {
            if (c.contains(cand)) {
                found = cand;
                return false;
            }
            return true;
        });
        return found;
    }
    for (const Word& cw : c.codewords())
        if (distance(cw, w) <= radius) return cw;
    return std::nullopt;
}

std::vector<Word> list_in_ball(const Code& c, const Word& u, int radius) {
    if (radius < 0) throw precondition_error("radius must be nonnegative");
    std::vector<Word> out;
    for (const Word& cw : c.codewords())
        if (distance(cw, u) <= radius) out.push_back(cw);
    return out;
}

long max_ball_count(const Code& c, int radius) {
    const int n = c.length();
    if (n > 22) throw budget_error("max_ball_count budget is n <= 22");
    if (radius < 0 || radius > n) throw precondition_error("radius out of range");
    const std::size_t space = 1ULL << n;
    std::vector<std::uint16_t> count(space, 0);
    for (const Word& cw : c.codewords())
        for_each_in_ball(cw, radius, [&](const Word& u) { ++count[u.to_uint_msb()]; });
    long best = 0;
    for (std::size_t v = 0; v < space; ++v) best = std::max(best, static_cast<long>(count[v]));
    return best;
}

} // namespace levrecon
