#ifndef LEVRECON_CODES_HPP
#define LEVRECON_CODES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "levrecon/word.hpp"

namespace levrecon {

/// Finite set of equal-length words with its exact minimum distance and
/// error-correcting capability e = floor((d_min - 1) / 2) cached.
class Code {
public:
    /// Computes the pairwise minimum distance (quadratic in |C|).
    Code(int n, std::vector<Word> codewords);

    int length() const { return n_; }
    int size() const { return static_cast<int>(words_.size()); }
    const std::vector<Word>& codewords() const { return words_; }

    /// Exact pairwise minimum. A singleton code has no distance; asking is
    /// an error rather than a sentinel.
    int min_distance() const;
    int capability() const; // floor((d_min - 1)/2)

    bool contains(const Word& w) const;

private:
    friend Code code_with_known_distance(int, std::vector<Word>, int);
    Code() = default;

    int n_ = 0;
    std::vector<Word> words_; // sorted, distinct
    int min_distance_ = -1;   // -1: singleton
};

/// Trusted constructor for codes whose minimum distance is known by
/// construction (greedy scan, linear min-weight). Verified in debug builds.
Code code_with_known_distance(int n, std::vector<Word> codewords, int min_distance);

int min_distance(const Code& c);

/// Linear code given by independent generator rows over F_2.
class LinearCode {
public:
    LinearCode(int n, std::vector<Word> generator_rows);

    int length() const { return n_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<Word>& generators() const { return rows_; }

    bool contains(const Word& w) const;

    /// All 2^k codewords (guarded: k <= 24), in span-enumeration order.
    std::vector<Word> codewords() const;

    /// Rows of a parity-check matrix H (n - k rows). Bit j of syndrome(w)
    /// is <h_j, w>.
    const std::vector<Word>& parity_check() const { return check_rows_; }
    std::uint64_t syndrome(const Word& w) const;

    /// max over syndromes of the minimum coset-leader weight (BFS over the
    /// syndrome space, so cheap even for long codes with small redundancy).
    int covering_radius() const;

    /// Enumerates codewords and caches d_min as the minimum nonzero weight.
    Code to_code() const;

private:
    int n_;
    std::vector<Word> rows_;       // reduced row echelon form
    std::vector<int> pivots_;      // pivot column of each row
    std::vector<Word> check_rows_; // parity-check rows
};

/// [2^r - 1, 2^r - 1 - r] Hamming code; minimum distance 3, covering radius 1.
LinearCode hamming_code(int r);

/// Any-length single-error-correcting linear code: parity-check columns are
/// the binary expansions of 1..n, giving d_min = 3 for n >= 3.
LinearCode single_error_code(int n);

/// Maximal-by-inclusion code of minimum distance >= d from a seeded greedy
/// scan over F^n. seed == 0 scans in lexicographic order; any other seed
/// scans a Fisher-Yates shuffle of that order. Deterministic per seed.
Code greedy_code(int n, int d, std::uint64_t seed);

/// True iff every word of F^n is within R of some codeword. Exhaustive
/// (multi-source BFS over the hypercube); budget n <= 26.
bool is_R_covering(const Code& c, int R);
bool is_R_covering(const LinearCode& c, int R);

struct CoveringDimension {
    int k;
    LinearCode witness;
};

/// k[n,R]: the least dimension of a linear R-covering code of length n,
/// with a witness. Exhaustive over systematic generator matrices up to
/// column-permutation canonicalization; budget n <= 9.
CoveringDimension covering_dimension(int n, int R);

/// The 2^(n-k) cosets u + D partitioning F^n. Cosets are ordered by their
/// lexicographically smallest member, and each coset is sorted. Budget
/// n <= 20.
std::vector<std::vector<Word>> cosets(const LinearCode& d);

/// The unique codeword within `radius` of w, if any. Requires
/// radius <= capability so uniqueness is guaranteed.
std::optional<Word> decode_unique(const Code& c, const Word& w, int radius);

/// All codewords within `radius` of u.
std::vector<Word> list_in_ball(const Code& c, const Word& u, int radius);

/// M = max over all centers u of |B_radius(u) ∩ C|. Exhaustive sweep over
/// F^n; budget n <= 22.
long max_ball_count(const Code& c, int radius);

} // namespace levrecon

#endif
