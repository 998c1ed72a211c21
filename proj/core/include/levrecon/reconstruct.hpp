#ifndef LEVRECON_RECONSTRUCT_HPP
#define LEVRECON_RECONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "levrecon/channels.hpp"
#include "levrecon/codes.hpp"

namespace levrecon {

enum class DecoderKind { Naive, Shatter, Covering, BallUnion };

std::string to_string(DecoderKind k);

/// Shattered coordinate set plus the recentered words beta_i = y_i + s.
struct ShatterCertificate {
    CoordSet shattered;
    std::vector<Word> betas;
    int search_radius = 0; // e + a
};

struct CoveringCertificate {
    CoordSet window;               // the ell+2R coordinates
    std::uint64_t coset_syndrome;  // which coset of D was found complete
    std::vector<Word> coset_words; // patterns, length ell+2R
    std::vector<Word> betas;
};

struct BallUnionCertificate {
    std::vector<Word> centers;
    int radius = 0;
};

/// Decoder output: candidates are always a subset of the code, and for a
/// batch with a known source the source is among them.
struct CandidateList {
    DecoderKind decoder = DecoderKind::Naive;
    std::vector<Word> candidates; // sorted, distinct
    std::variant<std::monostate, ShatterCertificate, CoveringCertificate, BallUnionCertificate> certificate;

    int size() const { return static_cast<int>(candidates.size()); }
    bool contains(const Word& w) const;
};

/// T(Y): codewords within t of every output.
CandidateList intersect_list(const Code& c, const OutputBatch& y, int t);

/// Smallest (in colex order) k-subset S of coordinates such that the
/// projections of Y onto S realize all 2^k patterns, if one exists. Present
/// whenever Y has at least V(n,k-1)+1 distinct members.
std::optional<CoordSet> find_shattered_set(const std::vector<Word>& y, int k);

/// Shattering decoder: find an (ell-a)-subset shattered by Y, recenter the
/// pattern representatives, and collect codewords within e+a of each
/// recentered word. List size is at most 2^(ell-a) * M where M bounds the
/// codewords per (e+a)-ball. Requires N >= V(n, ell-a-1)+1 and
/// 0 <= a <= ell-1 with ell = t - capability(C).
CandidateList shatter_decode(const Code& c, const OutputBatch& y, int t, int a);

/// Covering-code decoder: find a coordinate window of size ell+2R whose
/// Y-projections contain a full coset of the R-covering code D, recenter the
/// coset representatives, and decode each within radius e. List size is at
/// most 2^dim(D). Requires N >= V(n, ell+2R-1) - 2^(ell+2R-dim D) + 2.
CandidateList covering_decode(const Code& c, const OutputBatch& y, int t, int R, const LinearCode& d);

/// Union of unique decodings around the given centers; at most one codeword
/// per radius-e ball, so the list has at most |centers| entries.
CandidateList ball_union_decode(const Code& c, const std::vector<Word>& centers, int e);

} // namespace levrecon

#endif
